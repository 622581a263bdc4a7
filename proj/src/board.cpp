#include "wgame/board.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wgame/error.hpp"

namespace wgame {

std::string_view kind_name(BoardKind kind) {
  switch (kind) {
    case BoardKind::Path: return "path";
    case BoardKind::Cycle: return "cycle";
    case BoardKind::Complete: return "complete";
    case BoardKind::Custom: return "custom";
  }
  return "custom";
}

Board::Board(int n, BoardKind kind, std::vector<Edge> edges)
    : n_(n), kind_(kind), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n) + 1) {
  for (auto& [u, v] : edges_)
    if (u > v) std::swap(u, v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Board Board::path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Board(n, BoardKind::Path, std::move(edges));
}

Board Board::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Board(n, BoardKind::Cycle, std::move(edges));
}

Board Board::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Board(n, BoardKind::Complete, std::move(edges));
}

Board Board::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("board needs at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  return Board(n, BoardKind::Custom, std::vector<Edge>(edges.begin(), edges.end()));
}

std::span<const Vertex> Board::neighbors(Vertex v) const {
  if (!contains(v)) throw std::out_of_range("vertex out of range");
  return adjacency_[v];
}

bool Board::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Board::is_connected(std::span<const Vertex> vertices) const {
  if (vertices.empty()) return false;
  std::vector<char> member(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v : vertices) {
    if (!contains(v)) return false;
    member[v] = 1;
  }
  std::vector<char> seen(member.size(), 0);
  std::vector<Vertex> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacency_[v]) {
      if (member[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  std::size_t distinct = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
  return reached == distinct;
}

std::string Board::spec() const { return std::string(kind_name(kind_)) + ":" + std::to_string(n_); }

namespace {

// Exclusive-neighbourhood extension: every connected set is grown from its
// smallest vertex and reached along exactly one branch.
void extend_subgraph(const Board& board, int w, Vertex anchor, VertexSet& current,
                     std::vector<Vertex> extension, std::vector<char>& in_closed,
                     std::vector<VertexSet>& out) {
  if (static_cast<int>(current.size()) == w) {
    VertexSet sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  while (!extension.empty()) {
    Vertex next = extension.back();
    extension.pop_back();
    std::vector<Vertex> grown = extension;
    std::vector<Vertex> marked;
    for (Vertex u : board.neighbors(next)) {
      if (u > anchor && !in_closed[u]) {
        in_closed[u] = 1;
        marked.push_back(u);
        grown.push_back(u);
      }
    }
    current.push_back(next);
    extend_subgraph(board, w, anchor, current, std::move(grown), in_closed, out);
    current.pop_back();
    for (Vertex u : marked) in_closed[u] = 0;
  }
}

}  // namespace

std::vector<VertexSet> connected_subsets(const Board& board, int w) {
  std::vector<VertexSet> out;
  if (w < 1 || w > board.size()) return out;
  const int n = board.size();
  // in_closed marks the anchor, the current set and its neighbourhood.
  std::vector<char> in_closed(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex anchor = 1; anchor <= n; ++anchor) {
    VertexSet current{anchor};
    in_closed[anchor] = 1;
    std::vector<Vertex> extension;
    for (Vertex u : board.neighbors(anchor)) {
      if (u > anchor) {
        in_closed[u] = 1;
        extension.push_back(u);
      }
    }
    extend_subgraph(board, w, anchor, current, extension, in_closed, out);
    in_closed[anchor] = 0;
    for (Vertex u : extension) in_closed[u] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

Board parse_board_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("board spec must be path:N, cycle:N, complete:N or file:PATH");
  std::string_view kind = spec.substr(0, colon);
  std::string_view arg = spec.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) throw ParseError("cannot open board file '" + std::string(arg) + "'");
    return read_board_file(in);
  }
  int n = parse_int(arg, "vertex count");
  if (kind == "path") return Board::path(n);
  if (kind == "cycle") return Board::cycle(n);
  if (kind == "complete") return Board::complete(n);
  throw ParseError("unknown board kind '" + std::string(kind) + "'");
}

Board read_board_file(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) numbers.push_back(parse_int(token, "board file entry"));
  }
  if (numbers.empty()) throw ParseError("board file is empty");
  if (numbers.size() % 2 != 1) throw ParseError("board file has an unpaired edge endpoint");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < numbers.size(); i += 2)
    edges.emplace_back(static_cast<Vertex>(numbers[i]), static_cast<Vertex>(numbers[i + 1]));
  return Board::from_edge_list(static_cast<int>(numbers[0]), edges);
}

}  // namespace wgame
