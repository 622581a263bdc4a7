#include "wgame/cli.hpp"

#include <charconv>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgame/board.hpp"
#include "wgame/compare.hpp"
#include "wgame/complex.hpp"
#include "wgame/error.hpp"
#include "wgame/export.hpp"
#include "wgame/formulas.hpp"
#include "wgame/game.hpp"
#include "wgame/kruskal_katona.hpp"

namespace wgame::cli {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

WeightGame parse_weights(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("weights must be given as a,b");
  const auto a = parse_int(text.substr(0, comma), "left weight");
  const auto b = parse_int(text.substr(comma + 1), "right weight");
  return WeightGame(static_cast<int>(a), static_cast<int>(b));
}

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text, "n");
    return {v, v};
  }
  Range r{parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw ParseError("range start exceeds range end");
  return r;
}

BoardKind parse_kind(std::string_view text) {
  if (text == "path") return BoardKind::Path;
  if (text == "cycle") return BoardKind::Cycle;
  if (text == "complete") return BoardKind::Complete;
  throw ParseError("board family must be path, cycle or complete, got '" + std::string(text) + "'");
}

Board family_board(BoardKind kind, std::int64_t n) {
  switch (kind) {
    case BoardKind::Path: return Board::path(static_cast<int>(n));
    case BoardKind::Cycle: return Board::cycle(static_cast<int>(n));
    case BoardKind::Complete: return Board::complete(static_cast<int>(n));
    case BoardKind::Custom: break;
  }
  throw std::invalid_argument("custom boards have no family");
}

struct Options {
  std::string board;
  std::string weights;
  std::string range;
  std::string format = "faces";
  std::int64_t k = 0;
  bool json = false;
  std::vector<std::string> positional;
};

int cmd_fvector(const Options& opt, std::ostream& out) {
  const Board board = parse_board_spec(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  const FVector fv = legal_complex(game, board).f_vector();
  if (opt.json) {
    nlohmann::json doc;
    doc["board"] = board.spec();
    doc["weights"] = {game.left_weight(), game.right_weight()};
    auto entries = nlohmann::json::array();
    for (const auto& e : fv.entries()) entries.push_back(to_decimal(e));
    doc["f_vector"] = std::move(entries);
    out << doc.dump() << '\n';
  } else {
    out << fv.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const Board board = parse_board_spec(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  if (opt.k < 0) throw std::invalid_argument("k must be non-negative");
  const auto positions = legal_positions(game, board, static_cast<std::size_t>(opt.k));
  for (const auto& pos : positions) out << to_string(pos) << '\n';
  out << "# count: " << positions.size() << '\n';
  return kSuccess;
}

int cmd_formula(const Options& opt, std::ostream& out) {
  const Board board = parse_board_spec(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  const std::int64_t n = board.size();
  const std::int64_t a = game.left_weight();
  const std::int64_t b = game.right_weight();
  out << to_decimal(formulas::closed_form(board.kind(), n, a, b, opt.k)) << '\n';
  out << "# " << formulas::case_trace(board.kind(), n, a, b, opt.k) << '\n';
  if (opt.k == 2 && board.kind() != BoardKind::Complete) {
    const auto parts = board.kind() == BoardKind::Path ? formulas::path_f2_parts(n, a, b)
                                                       : formulas::cycle_f2_parts(n, a, b);
    out << "N_LL=" << to_decimal(parts.n_ll) << ",N_LR=" << to_decimal(parts.n_lr)
        << ",N_RR=" << to_decimal(parts.n_rr) << '\n';
  }
  return kSuccess;
}

int cmd_kk(const std::string& action, const Options& opt, std::ostream& out) {
  const auto& args = opt.positional;
  auto expect = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw ParseError(std::string("usage: kk ") + usage);
  };
  if (action == "rep") {
    expect(2, "rep F I");
    out << kk::canonical_rep(parse_decimal(args[0]), parse_int(args[1], "i")).to_string() << '\n';
  } else if (action == "pseudo") {
    expect(3, "pseudo F I J");
    out << to_decimal(kk::pseudopower(parse_decimal(args[0]), parse_int(args[1], "i"), parse_int(args[2], "j")))
        << '\n';
  } else {
    expect(1, "check F0,F1,...");
    const FVector fv = FVector::parse(args[0]);
    const auto verdict = opt.format == "lower" ? kk::check_fvector_via_lower(fv) : kk::check_fvector(fv);
    if (verdict.valid()) out << "valid\n";
    else out << "invalid: " << verdict.violation->message << '\n';
  }
  return kSuccess;
}

int cmd_diff(const Options& opt, std::ostream& out) {
  const BoardKind kind = parse_kind(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  const Range range = parse_range(opt.range);
  const std::int64_t a = game.left_weight();
  const std::int64_t b = game.right_weight();
  std::size_t points = 0;
  std::size_t matched = 0;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    const Board board = family_board(kind, n);
    ++points;
    bool ok = true;
    auto report = [&](std::int64_t k, const BigInt& formula, const BigInt& brute) {
      if (formula == brute) return;
      ok = false;
      out << "MISMATCH n=" << n << " k=" << k << " formula=" << to_decimal(formula)
          << " brute=" << to_decimal(brute) << '\n';
    };
    if (kind == BoardKind::Complete) {
      const FVector fv = legal_complex(game, board).f_vector();
      for (std::int64_t k = 0; k <= max_pieces(game, board); ++k)
        report(k, formulas::complete_fk(n, a, b, k), fv.at(static_cast<std::size_t>(k)));
    } else {
      for (std::int64_t k = 1; k <= 2; ++k)
        report(k, formulas::closed_form(kind, n, a, b, k),
               BigInt(legal_positions(game, board, static_cast<std::size_t>(k)).size()));
    }
    if (ok) ++matched;
  }
  if (matched == points) {
    out << "OK " << matched << '/' << points << '\n';
    return kSuccess;
  }
  out << "FAIL " << matched << '/' << points << '\n';
  return kDiffMismatch;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const BoardKind kind = parse_kind(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  const Range range = parse_range(opt.range);
  write_csv(out, sweep(kind, game.left_weight(), game.right_weight(), range.lo, range.hi));
  return kSuccess;
}

int cmd_export(const Options& opt, std::ostream& out) {
  const Board board = parse_board_spec(opt.board);
  const WeightGame game = parse_weights(opt.weights);
  if (opt.format != "faces" && opt.format != "json") throw ParseError("format must be faces or json");
  const LegalComplex complex = legal_complex(game, board);
  if (opt.format == "json") out << to_json(complex).dump(2) << '\n';
  else write_faces(out, complex);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legal complexes of weight games: enumeration, f-vectors, closed forms, Kruskal-Katona checks",
               "wgame"};
  app.require_subcommand(1);
  Options opt;

  auto game_options = [&](CLI::App* sub, const char* board_help) {
    sub->add_option("--board", opt.board, board_help)->required();
    sub->add_option("--weights", opt.weights, "Left,Right piece weights, e.g. 2,3")->required();
  };
  const char* board_spec = "path:N, cycle:N, complete:N or file:PATH";
  const char* board_family = "path, cycle or complete";

  auto* fvector = app.add_subcommand("fvector", "f-vector of the legal complex by enumeration");
  game_options(fvector, board_spec);
  fvector->add_flag("--json", opt.json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "list legal positions with k pieces");
  game_options(enumerate, board_spec);
  enumerate->add_option("--k", opt.k, "number of pieces")->required();

  auto* formula = app.add_subcommand("formula", "closed-form f_k with the case that applies");
  game_options(formula, board_spec);
  formula->add_option("--k", opt.k, "number of pieces")->required();

  auto* kk = app.add_subcommand("kk", "Kruskal-Katona machinery");
  kk->require_subcommand(1);
  auto* rep = kk->add_subcommand("rep", "i-canonical representation of F");
  rep->add_option("args", opt.positional, "F I")->expected(2);
  auto* pseudo = kk->add_subcommand("pseudo", "j-th pseudopower of F from its i-canonical representation");
  pseudo->add_option("args", opt.positional, "F I J")->expected(3);
  auto* check = kk->add_subcommand("check", "is F0,F1,... the f-vector of a simplicial complex");
  check->add_option("args", opt.positional, "F0,F1,...")->expected(1);
  check->add_option("--form", opt.format, "upper (default) or lower inequality chain")
      ->check(CLI::IsMember({"upper", "lower"}));

  auto* diff = app.add_subcommand("diff", "closed forms against brute-force enumeration");
  game_options(diff, board_family);
  diff->add_option("--n", opt.range, "lo..hi or a single n")->required();

  auto* compare = app.add_subcommand("compare", "CSV of f_2 against the Kruskal-Katona bound");
  game_options(compare, board_family);
  compare->add_option("--n", opt.range, "lo..hi or a single n")->required();

  auto* exporter = app.add_subcommand("export", "write the legal complex");
  game_options(exporter, board_spec);
  exporter->add_option("--format", opt.format, "faces or json");

  std::vector<const char*> argv{"wgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (fvector->parsed()) return cmd_fvector(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (formula->parsed()) return cmd_formula(opt, out);
    if (rep->parsed()) return cmd_kk("rep", opt, out);
    if (pseudo->parsed()) return cmd_kk("pseudo", opt, out);
    if (check->parsed()) return cmd_kk("check", opt, out);
    if (diff->parsed()) return cmd_diff(opt, out);
    if (compare->parsed()) return cmd_compare(opt, out);
    if (exporter->parsed()) return cmd_export(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace wgame::cli
