#include "wgame/game.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "wgame/error.hpp"

namespace wgame {

char player_letter(Player player) { return player == Player::Left ? 'L' : 'R'; }

WeightGame::WeightGame(int left_weight, int right_weight) : left_(left_weight), right_(right_weight) {
  if (left_ < 1 || right_ < 1) throw std::invalid_argument("piece weights must be at least 1");
}

std::string WeightGame::name() const {
  return "Weight(" + std::to_string(left_) + "," + std::to_string(right_) + ")";
}

Position::Position(std::vector<BasicPosition> pieces) : pieces_(std::move(pieces)) {
  for (auto& piece : pieces_) {
    std::sort(piece.support.begin(), piece.support.end());
    piece.support.erase(std::unique(piece.support.begin(), piece.support.end()), piece.support.end());
  }
  std::sort(pieces_.begin(), pieces_.end());
  pieces_.erase(std::unique(pieces_.begin(), pieces_.end()), pieces_.end());
}

std::vector<BasicPosition> basic_positions(const WeightGame& game, const Board& board) {
  std::vector<BasicPosition> out;
  for (Player player : {Player::Left, Player::Right}) {
    for (auto& support : connected_subsets(board, game.weight(player)))
      out.push_back(BasicPosition{player, std::move(support)});
  }
  return out;
}

bool is_legal(const WeightGame& game, const Board& board, const Position& pos) {
  std::vector<char> occupied(static_cast<std::size_t>(board.size()) + 1, 0);
  bool disjoint = true;
  for (const auto& piece : pos.pieces()) {
    if (static_cast<int>(piece.support.size()) != game.weight(piece.player) ||
        !board.is_connected(piece.support))
      throw std::invalid_argument(to_string(piece) + " is not a basic position of " + game.name() +
                                  " on " + board.spec());
    for (Vertex v : piece.support) {
      if (occupied[v]) disjoint = false;
      occupied[v] = 1;
    }
  }
  return disjoint;
}

int max_pieces(const WeightGame& game, int vertex_count) {
  return std::max(vertex_count / game.left_weight(), vertex_count / game.right_weight());
}

int max_pieces(const WeightGame& game, const Board& board) { return max_pieces(game, board.size()); }

std::string to_string(const BasicPosition& piece) {
  std::string out(1, player_letter(piece.player));
  out += '{';
  for (std::size_t i = 0; i < piece.support.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(piece.support[i]);
  }
  out += '}';
  return out;
}

std::string to_string(const Position& pos) {
  if (pos.empty()) return "-";
  std::string out;
  for (const auto& piece : pos.pieces()) {
    if (!out.empty()) out += ' ';
    out += to_string(piece);
  }
  return out;
}

Position parse_position(std::string_view text) {
  auto fail = [&] { return ParseError("malformed position '" + std::string(text) + "'"); };
  std::vector<BasicPosition> pieces;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_spaces();
  if (text.substr(i) == "-") return Position{};
  while (i < text.size()) {
    BasicPosition piece;
    if (text[i] == 'L') piece.player = Player::Left;
    else if (text[i] == 'R') piece.player = Player::Right;
    else throw fail();
    if (++i >= text.size() || text[i] != '{') throw fail();
    auto close = text.find('}', i);
    if (close == std::string_view::npos) throw fail();
    std::string_view body = text.substr(i + 1, close - i - 1);
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size()) throw fail();
      piece.support.push_back(v);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    if (piece.support.empty()) throw fail();
    pieces.push_back(std::move(piece));
    i = close + 1;
    skip_spaces();
  }
  return Position(std::move(pieces));
}

}  // namespace wgame
