#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "wgame/board.hpp"
#include "wgame/fvector.hpp"
#include "wgame/game.hpp"

namespace wgame {

/// Index of a basic position in LegalComplex::vertices().
using PieceIndex = std::uint32_t;

enum class Execution { Serial, Parallel };

/// The legal complex of a weight game on a board, stored level by level.
///
/// Level k holds every legal position with k pieces as a strictly increasing
/// tuple of piece indices; tuples within a level are in lexicographic order,
/// which coincides with the canonical order of the corresponding Positions.
class LegalComplex {
 public:
  const WeightGame& game() const { return game_; }
  const Board& board() const { return board_; }
  const std::vector<BasicPosition>& vertices() const { return vertices_; }

  /// Number of stored levels; the largest face has level_count() - 1 pieces.
  std::size_t level_count() const { return levels_.size(); }
  std::size_t face_count(std::size_t size) const;
  std::span<const PieceIndex> face(std::size_t size, std::size_t index) const;

  Position position(std::size_t size, std::size_t index) const;
  std::vector<Position> positions(std::size_t size) const;

  FVector f_vector() const;

 private:
  friend LegalComplex legal_complex(const WeightGame&, const Board&, Execution);

  struct Level {
    std::size_t arity = 0;
    std::vector<PieceIndex> flat;  // count() * arity indices
    std::size_t count() const { return arity == 0 ? 1 : flat.size() / arity; }
  };

  LegalComplex(WeightGame game, Board board, std::vector<BasicPosition> vertices)
      : game_(game), board_(std::move(board)), vertices_(std::move(vertices)) {}

  WeightGame game_;
  Board board_;
  std::vector<BasicPosition> vertices_;
  std::vector<Level> levels_;
};

/// Builds every level from the empty position up to the first empty level
/// (at most max_pieces). Serial and parallel execution give identical results.
LegalComplex legal_complex(const WeightGame& game, const Board& board,
                           Execution exec = Execution::Parallel);

/// Every legal position with exactly k pieces, canonically ordered.
std::vector<Position> legal_positions(const WeightGame& game, const Board& board, std::size_t k,
                                      Execution exec = Execution::Parallel);

FVector f_vector(const LegalComplex& complex);

/// f-vectors of all non-empty simplicial complexes on at most m labelled
/// vertices, 1 <= m <= 5. Throws std::invalid_argument otherwise.
std::set<FVector> all_complex_fvectors(int m);

namespace kernels {

/// Pairwise overlap table over basic positions: row p has bit q set iff
/// the supports of p and q intersect.
class ConflictTable {
 public:
  explicit ConflictTable(std::span<const BasicPosition> pieces, int vertex_count);

  std::size_t piece_count() const { return count_; }
  bool conflicts(PieceIndex p, PieceIndex q) const {
    return (bits_[p * words_ + q / 64] >> (q % 64)) & 1U;
  }

 private:
  std::size_t count_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Extends every face of size `arity` (flat, lexicographic) by each piece
/// with a larger index that is disjoint from all its pieces. The output is
/// again lexicographic. Faces are split into contiguous chunks processed in
/// parallel; chunk outputs are concatenated in face order.
std::vector<PieceIndex> extend_level_parallel(const ConflictTable& table,
                                              std::span<const PieceIndex> faces, std::size_t arity);

/// Reference for extend_level_parallel: plain loop, same contract.
std::vector<PieceIndex> extend_level_serial(const ConflictTable& table,
                                            std::span<const PieceIndex> faces, std::size_t arity);

/// Independent serial reference: depth-first enumeration of all k-piece
/// faces in lexicographic order, not built level by level.
std::vector<PieceIndex> enumerate_faces_dfs(const ConflictTable& table, std::size_t k);

}  // namespace kernels

}  // namespace wgame
