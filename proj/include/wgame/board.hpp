#pragma once

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wgame {

/// Board vertices are 1-indexed.
using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

enum class BoardKind { Path, Cycle, Complete, Custom };

std::string_view kind_name(BoardKind kind);

/// Undirected simple graph on vertices 1..n. Immutable once built.
class Board {
 public:
  static Board path(int n);
  static Board cycle(int n);
  static Board complete(int n);
  /// Endpoints must lie in 1..n and differ; duplicates (in either
  /// orientation) are merged.
  static Board from_edge_list(int n, std::span<const Edge> edges);

  int size() const { return n_; }
  BoardKind kind() const { return kind_; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// True iff the induced subgraph on `vertices` is connected. A single
  /// vertex is connected; the empty set is not.
  bool is_connected(std::span<const Vertex> vertices) const;

  /// `path:5`, `cycle:5`, `complete:4`; custom boards render as `custom:N`.
  std::string spec() const;

  friend bool operator==(const Board& lhs, const Board& rhs) {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
  }

 private:
  Board(int n, BoardKind kind, std::vector<Edge> edges);

  int n_ = 0;
  BoardKind kind_ = BoardKind::Custom;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

/// Every size-w vertex subset whose induced subgraph is connected, each
/// once, in lexicographic order. Empty when w > n or w < 1.
std::vector<VertexSet> connected_subsets(const Board& board, int w);

/// Parses `path:N`, `cycle:N`, `complete:N` or `file:PATH`.
Board parse_board_spec(std::string_view spec);

/// Edge-list board file: first value n, then `u v` pairs; `#` starts a comment.
Board read_board_file(std::istream& in);

}  // namespace wgame
