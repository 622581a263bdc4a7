#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "wgame/board.hpp"
#include "wgame/error.hpp"

using namespace wgame;

namespace {

std::vector<VertexSet> via_oracle(const Board& board, int w) {
  std::vector<VertexSet> out;
  for (auto mask : oracle::connected_masks(board, w)) out.push_back(oracle::to_set(mask));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("path boards") {
  CHECK(Board::path(1).size() == 1);
  CHECK(Board::path(1).edges().empty());
  CHECK(Board::path(2).edges() == std::vector<Edge>{{1, 2}});
  CHECK(Board::path(5).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(Board::path(5).kind() == BoardKind::Path);
  CHECK_THROWS_AS(Board::path(0), std::invalid_argument);
}

TEST_CASE("cycle boards") {
  const Board c3 = Board::cycle(3);
  CHECK(c3.edges().size() == 3);
  const Board c5 = Board::cycle(5);
  CHECK(c5.edges().size() == 5);
  CHECK(c5.adjacent(5, 1));
  CHECK(c5.adjacent(1, 5));
  CHECK_FALSE(c5.adjacent(1, 3));
  CHECK_THROWS_AS(Board::cycle(2), std::invalid_argument);
}

TEST_CASE("complete boards") {
  CHECK(Board::complete(4).edges().size() == 6);
  CHECK(Board::complete(1).edges().empty());
  // Same graph as the triangle, different kind.
  CHECK(Board::complete(3) == Board::cycle(3));
  CHECK(Board::complete(3).kind() != Board::cycle(3).kind());
  CHECK_THROWS_AS(Board::complete(0), std::invalid_argument);
}

TEST_CASE("edge-list boards") {
  const Board example = oracle::example_board();
  CHECK(example.size() == 9);
  CHECK(example.edges().size() == 9);
  CHECK(example.kind() == BoardKind::Custom);

  CHECK(Board::from_edge_list(3, {}).edges().empty());

  const std::vector<Edge> dup{{1, 2}, {2, 1}, {1, 2}};
  CHECK(Board::from_edge_list(2, dup).edges().size() == 1);

  const std::vector<Edge> out_of_range{{1, 3}};
  CHECK_THROWS_AS(Board::from_edge_list(2, out_of_range), std::invalid_argument);
  const std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Board::from_edge_list(2, loop), std::invalid_argument);
}

TEST_CASE("connected subsets on the example board") {
  const auto four = connected_subsets(oracle::example_board(), 4);
  CHECK(std::find(four.begin(), four.end(), VertexSet{1, 2, 3, 4}) != four.end());
  CHECK(std::find(four.begin(), four.end(), VertexSet{1, 3, 5, 6}) == four.end());
  CHECK(four == via_oracle(oracle::example_board(), 4));
}

TEST_CASE("connected subsets of the standard families") {
  CHECK(connected_subsets(Board::path(5), 2) == std::vector<VertexSet>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(connected_subsets(Board::complete(4), 2).size() == 6);
  // Five arcs of length three; the naive filter agrees.
  const auto arcs = connected_subsets(Board::cycle(5), 3);
  CHECK(arcs == std::vector<VertexSet>{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}});
  CHECK(arcs == via_oracle(Board::cycle(5), 3));
  CHECK(connected_subsets(Board::path(3), 4).empty());
  CHECK(connected_subsets(Board::path(3), 0).empty());
  CHECK(connected_subsets(Board::from_edge_list(3, {}), 1).size() == 3);
}

TEST_CASE("connected subset counts by family") {
  for (int n = 1; n <= 10; ++n) {
    for (int w = 1; w <= n + 1; ++w) {
      CAPTURE(n);
      CAPTURE(w);
      CHECK(connected_subsets(Board::path(n), w).size() == static_cast<std::size_t>(std::max(0, n - w + 1)));
      CHECK(BigInt(connected_subsets(Board::complete(n), w).size()) == binomial(n, w));
      if (n >= 3) {
        std::size_t expected = w <= n - 1 ? n : (w == n ? 1 : 0);
        CHECK(connected_subsets(Board::cycle(n), w).size() == expected);
      }
    }
  }
}

TEST_CASE("connected subsets agree with the naive filter on random boards") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    // Sparse random graphs, not necessarily connected.
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> vertex(1, n);
    const int m = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int i = 0; i < m; ++i) {
      int u = vertex(rng), v = vertex(rng);
      if (u != v) edges.emplace_back(u, v);
    }
    const Board board = Board::from_edge_list(n, edges);
    for (int w = 1; w <= n; ++w) {
      const auto got = connected_subsets(board, w);
      CHECK(got == via_oracle(board, w));
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    }
  }
}

TEST_CASE("board spec parsing") {
  CHECK(parse_board_spec("path:5") == Board::path(5));
  CHECK(parse_board_spec("cycle:6").kind() == BoardKind::Cycle);
  CHECK(parse_board_spec("complete:4").spec() == "complete:4");
  CHECK_THROWS_AS(parse_board_spec("path"), ParseError);
  CHECK_THROWS_AS(parse_board_spec("star:5"), ParseError);
  CHECK_THROWS_AS(parse_board_spec("path:x"), ParseError);
  CHECK_THROWS_AS(parse_board_spec("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_spec("file:/nonexistent/board.txt"), ParseError);
}

TEST_CASE("board files") {
  std::istringstream in(
      "# example board\n"
      "9\n"
      "1 2\n2 3  # spine\n3 4\n4 2\n2 5\n5 7\n7 8\n5 6\n7 9\n");
  const Board board = read_board_file(in);
  CHECK(board == oracle::example_board());

  std::istringstream unpaired("3\n1 2\n3\n");
  CHECK_THROWS_AS(read_board_file(unpaired), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_board_file(empty), ParseError);
  std::istringstream bad_edge("2\n1 3\n");
  CHECK_THROWS_AS(read_board_file(bad_edge), std::invalid_argument);
}
