#include <omp.h>

#include "wgame/complex.hpp"

namespace wgame::kernels {

ConflictTable::ConflictTable(std::span<const BasicPosition> pieces, int vertex_count)
    : count_(pieces.size()), words_((pieces.size() + 63) / 64), bits_(count_ * words_, 0) {
  // Pieces covering each vertex; two pieces conflict iff they share one.
  std::vector<std::vector<PieceIndex>> covering(static_cast<std::size_t>(vertex_count) + 1);
  for (std::size_t p = 0; p < count_; ++p)
    for (Vertex v : pieces[p].support) covering[v].push_back(static_cast<PieceIndex>(p));
  for (const auto& group : covering)
    for (PieceIndex p : group)
      for (PieceIndex q : group) bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64);
}

namespace {

void extend_face(const ConflictTable& table, std::span<const PieceIndex> face,
                 std::vector<PieceIndex>& out) {
  const std::size_t count = table.piece_count();
  for (std::size_t q = face.back() + 1; q < count; ++q) {
    bool free = true;
    for (PieceIndex p : face) {
      if (table.conflicts(p, static_cast<PieceIndex>(q))) {
        free = false;
        break;
      }
    }
    if (free) {
      out.insert(out.end(), face.begin(), face.end());
      out.push_back(static_cast<PieceIndex>(q));
    }
  }
}

}  // namespace

std::vector<PieceIndex> extend_level_serial(const ConflictTable& table,
                                            std::span<const PieceIndex> faces, std::size_t arity) {
  std::vector<PieceIndex> out;
  for (std::size_t f = 0; f + arity <= faces.size(); f += arity)
    extend_face(table, faces.subspan(f, arity), out);
  return out;
}

std::vector<PieceIndex> extend_level_parallel(const ConflictTable& table,
                                              std::span<const PieceIndex> faces, std::size_t arity) {
  const std::size_t face_count = faces.size() / arity;
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
  if (threads == 1 || face_count < 64 * threads) return extend_level_serial(table, faces, arity);

  const std::size_t chunks = 8 * threads;
  std::vector<std::vector<PieceIndex>> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = face_count * static_cast<std::size_t>(c) / chunks;
    const std::size_t end = face_count * static_cast<std::size_t>(c + 1) / chunks;
    auto& buffer = partial[static_cast<std::size_t>(c)];
    for (std::size_t f = begin; f < end; ++f) extend_face(table, faces.subspan(f * arity, arity), buffer);
  }

  std::size_t total = 0;
  for (const auto& part : partial) total += part.size();
  std::vector<PieceIndex> out;
  out.reserve(total);
  for (const auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<PieceIndex> enumerate_faces_dfs(const ConflictTable& table, std::size_t k) {
  std::vector<PieceIndex> out;
  if (k == 0) return out;
  std::vector<PieceIndex> stack;
  auto descend = [&](auto&& self, std::size_t from) -> void {
    if (stack.size() == k) {
      out.insert(out.end(), stack.begin(), stack.end());
      return;
    }
    for (std::size_t q = from; q < table.piece_count(); ++q) {
      bool free = true;
      for (PieceIndex p : stack)
        if (table.conflicts(p, static_cast<PieceIndex>(q))) free = false;
      if (!free) continue;
      stack.push_back(static_cast<PieceIndex>(q));
      self(self, q + 1);
      stack.pop_back();
    }
  };
  descend(descend, 0);
  return out;
}

}  // namespace wgame::kernels
