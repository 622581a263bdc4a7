#include "wgame/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wgame {

std::size_t LegalComplex::face_count(std::size_t size) const {
  return size < levels_.size() ? levels_[size].count() : 0;
}

std::span<const PieceIndex> LegalComplex::face(std::size_t size, std::size_t index) const {
  if (index >= face_count(size)) throw std::out_of_range("face index out of range");
  const Level& level = levels_[size];
  return std::span<const PieceIndex>(level.flat).subspan(index * level.arity, level.arity);
}

Position LegalComplex::position(std::size_t size, std::size_t index) const {
  std::vector<BasicPosition> pieces;
  for (PieceIndex p : face(size, index)) pieces.push_back(vertices_[p]);
  return Position(std::move(pieces));
}

std::vector<Position> LegalComplex::positions(std::size_t size) const {
  std::vector<Position> out;
  const std::size_t count = face_count(size);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(position(size, i));
  return out;
}

FVector LegalComplex::f_vector() const {
  std::vector<BigInt> entries;
  for (const auto& level : levels_) entries.emplace_back(level.count());
  return FVector(std::move(entries));
}

namespace {

std::vector<PieceIndex> extend(const kernels::ConflictTable& table, std::span<const PieceIndex> faces,
                               std::size_t arity, Execution exec) {
  if (arity == 0) {
    std::vector<PieceIndex> singles(table.piece_count());
    for (std::size_t p = 0; p < singles.size(); ++p) singles[p] = static_cast<PieceIndex>(p);
    return singles;
  }
  return exec == Execution::Parallel ? kernels::extend_level_parallel(table, faces, arity)
                                     : kernels::extend_level_serial(table, faces, arity);
}

}  // namespace

LegalComplex legal_complex(const WeightGame& game, const Board& board, Execution exec) {
  LegalComplex complex(game, board, basic_positions(game, board));
  const kernels::ConflictTable table(complex.vertices_, board.size());
  const auto limit = static_cast<std::size_t>(max_pieces(game, board));

  complex.levels_.push_back(LegalComplex::Level{0, {}});
  for (std::size_t arity = 0; arity < limit; ++arity) {
    auto next = extend(table, complex.levels_.back().flat, arity, exec);
    if (next.empty()) break;
    complex.levels_.push_back(LegalComplex::Level{arity + 1, std::move(next)});
  }
  return complex;
}

std::vector<Position> legal_positions(const WeightGame& game, const Board& board, std::size_t k,
                                      Execution exec) {
  if (k == 0) return {Position{}};
  if (k > static_cast<std::size_t>(max_pieces(game, board))) return {};
  const auto pieces = basic_positions(game, board);
  const kernels::ConflictTable table(pieces, board.size());
  std::vector<PieceIndex> level;
  for (std::size_t arity = 0; arity < k; ++arity) {
    level = extend(table, level, arity, exec);
    if (level.empty()) return {};
  }
  std::vector<Position> out;
  out.reserve(level.size() / k);
  for (std::size_t f = 0; f < level.size(); f += k) {
    std::vector<BasicPosition> face;
    for (std::size_t t = 0; t < k; ++t) face.push_back(pieces[level[f + t]]);
    out.emplace_back(std::move(face));
  }
  return out;
}

FVector f_vector(const LegalComplex& complex) { return complex.f_vector(); }

std::set<FVector> all_complex_fvectors(int m) {
  if (m < 1 || m > 5) throw std::invalid_argument("all_complex_fvectors supports 1 <= m <= 5");
  // Subsets of {0..m-1} as bitmasks, ordered by size so that every subset
  // is decided after all of its facets. Each leaf of the search is one
  // downward-closed family containing the empty set.
  std::vector<unsigned> order;
  for (unsigned s = 1; s < (1U << m); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](unsigned x, unsigned y) {
    return std::popcount(x) < std::popcount(y);
  });

  std::set<FVector> out;
  std::vector<char> member(1U << m, 0);
  member[0] = 1;
  std::vector<long long> counts(static_cast<std::size_t>(m) + 1, 0);
  counts[0] = 1;

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      out.insert(FVector(std::vector<BigInt>(counts.begin(), counts.end())));
      return;
    }
    const unsigned s = order[pos];
    self(self, pos + 1);
    bool closed = true;
    for (unsigned bit = 0; bit < static_cast<unsigned>(m); ++bit)
      if ((s >> bit & 1U) && !member[s & ~(1U << bit)]) closed = false;
    if (!closed) return;
    member[s] = 1;
    ++counts[std::popcount(s)];
    self(self, pos + 1);
    --counts[std::popcount(s)];
    member[s] = 0;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace wgame
