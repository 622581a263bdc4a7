#include "wgame/compare.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "wgame/formulas.hpp"
#include "wgame/kruskal_katona.hpp"

namespace wgame {

std::string BoundRow::ratio() const {
  if (!kk_bound || *kk_bound == 0) return "NA";
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal value = Decimal(paper_value) / Decimal(*kk_bound);
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

BoundRow compare_f2(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (kind == BoardKind::Custom) throw std::invalid_argument("comparison needs a path, cycle or complete board");
  BoundRow row{kind, n, a, b, 2, formulas::closed_form(kind, n, a, b, 2), std::nullopt};
  const BigInt f1 = formulas::closed_form(kind, n, a, b, 1);
  if (f1 >= 1) row.kk_bound = kk::pseudopower(f1, 1, 2);
  return row;
}

std::vector<BoundRow> sweep(BoardKind kind, std::int64_t a, std::int64_t b, std::int64_t n_from,
                            std::int64_t n_to) {
  if (n_from > n_to) throw std::invalid_argument("empty n range");
  if (kind == BoardKind::Cycle && n_from < 3) n_from = 3;
  if (kind != BoardKind::Cycle && n_from < 1) n_from = 1;
  if (n_from > n_to) return {};
  const std::int64_t count = n_to - n_from + 1;
  // Rows must not throw inside the parallel region.
  if (kind == BoardKind::Custom) throw std::invalid_argument("comparison needs a path, cycle or complete board");
  if (a < 1 || b < 1) throw std::invalid_argument("piece weights must be at least 1");
  std::vector<std::optional<BoundRow>> slots(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) slots[static_cast<std::size_t>(i)] = compare_f2(kind, n_from + i, a, b);
  std::vector<BoundRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "board,n,a,b,k,paper,kk,ratio,strict\n";
  for (const auto& row : rows) {
    out << kind_name(row.kind) << ',' << row.n << ',' << row.a << ',' << row.b << ',' << row.k << ','
        << to_decimal(row.paper_value) << ',' << (row.kk_bound ? to_decimal(*row.kk_bound) : "NA") << ','
        << row.ratio() << ',' << (row.strict() ? "true" : "false") << '\n';
  }
}

}  // namespace wgame
