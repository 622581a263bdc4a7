#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "wgame/board.hpp"

namespace wgame {

enum class Player : unsigned char { Left, Right };

/// 'L' or 'R'.
char player_letter(Player player);

/// Weight(a, b): Left places connected pieces of a vertices, Right of b.
/// The only rule is that pieces go on empty vertices.
class WeightGame {
 public:
  WeightGame(int left_weight, int right_weight);

  int left_weight() const { return left_; }
  int right_weight() const { return right_; }
  int weight(Player player) const { return player == Player::Left ? left_ : right_; }

  /// "Weight(a,b)"
  std::string name() const;

  friend bool operator==(const WeightGame&, const WeightGame&) = default;

 private:
  int left_;
  int right_;
};

/// One piece on the board. Ordered by player (Left first), then support.
struct BasicPosition {
  Player player = Player::Left;
  VertexSet support;

  friend auto operator<=>(const BasicPosition&, const BasicPosition&) = default;
  friend bool operator==(const BasicPosition&, const BasicPosition&) = default;
};

/// A set of pieces, kept sorted and duplicate-free.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<BasicPosition> pieces);

  const std::vector<BasicPosition>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<BasicPosition> pieces_;
};

/// All Left placements followed by all Right placements, each block in
/// lexicographic support order. This ordering is the canonical vertex order
/// of the legal complex.
std::vector<BasicPosition> basic_positions(const WeightGame& game, const Board& board);

/// Whether `pos` is a legal position of `game` on `board`: pairwise disjoint
/// supports. Throws std::invalid_argument if some piece is not a basic
/// position of this game on this board.
bool is_legal(const WeightGame& game, const Board& board, const Position& pos);

/// max(floor(n/a), floor(n/b)): no legal position holds more pieces.
int max_pieces(const WeightGame& game, int vertex_count);
int max_pieces(const WeightGame& game, const Board& board);

/// `L{1,2}`
std::string to_string(const BasicPosition& piece);
/// `L{1,2} R{3,4,5}`, or `-` for the empty position.
std::string to_string(const Position& pos);
/// Inverse of to_string(Position). Throws ParseError.
Position parse_position(std::string_view text);

}  // namespace wgame
