// Brute-force oracles used only by tests. Nothing here calls into the
// enumeration code it is meant to check.
#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "wgame/board.hpp"
#include "wgame/combinatorics.hpp"
#include "wgame/game.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const wgame::Board& board) {
  std::vector<Mask> adj(static_cast<std::size_t>(board.size()), 0);
  for (const auto& [u, v] : board.edges()) {
    adj[u - 1] |= Mask{1} << (v - 1);
    adj[v - 1] |= Mask{1} << (u - 1);
  }
  return adj;
}

inline bool connected(Mask set, const std::vector<Mask>& adj) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  while (true) {
    Mask grown = reached;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if (reached >> v & 1U) grown |= adj[v] & set;
    if (grown == reached) break;
    reached = grown;
  }
  return reached == set;
}

inline wgame::VertexSet to_set(Mask mask) {
  wgame::VertexSet out;
  for (int v = 0; v < 32; ++v)
    if (mask >> v & 1U) out.push_back(v + 1);
  return out;
}

/// Filter over all C(n, w) subsets; n <= 20.
inline std::vector<Mask> connected_masks(const wgame::Board& board, int w) {
  const auto adj = adjacency_masks(board);
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << board.size()); ++s)
    if (std::popcount(s) == w && connected(s, adj)) out.push_back(s);
  return out;
}

struct Piece {
  wgame::Player player;
  Mask support;
};

inline std::vector<Piece> pieces(const wgame::WeightGame& game, const wgame::Board& board) {
  std::vector<Piece> out;
  for (Mask s : connected_masks(board, game.left_weight())) out.push_back({wgame::Player::Left, s});
  for (Mask s : connected_masks(board, game.right_weight())) out.push_back({wgame::Player::Right, s});
  return out;
}

/// Visits every k-subset of `all` with pairwise disjoint supports.
template <class Visit>
void for_each_disjoint(const std::vector<Piece>& all, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> chosen;
  auto go = [&](auto&& self, std::size_t from, Mask used) -> void {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      if (all[i].support & used) continue;
      chosen.push_back(i);
      self(self, i + 1, used | all[i].support);
      chosen.pop_back();
    }
  };
  go(go, 0, 0);
}

inline long long count_positions(const wgame::WeightGame& game, const wgame::Board& board, std::size_t k) {
  long long count = 0;
  for_each_disjoint(pieces(game, board), k, [&](const auto&) { ++count; });
  return count;
}

struct PairSplit {
  long long ll = 0, lr = 0, rr = 0;
};

inline PairSplit classify_pairs(const wgame::WeightGame& game, const wgame::Board& board) {
  const auto all = pieces(game, board);
  PairSplit split;
  for_each_disjoint(all, 2, [&](const std::vector<std::size_t>& c) {
    const int lefts = (all[c[0]].player == wgame::Player::Left) + (all[c[1]].player == wgame::Player::Left);
    if (lefts == 2) ++split.ll;
    else if (lefts == 1) ++split.lr;
    else ++split.rr;
  });
  return split;
}

/// Random spanning tree plus a few extra edges.
inline wgame::Board random_connected_board(int n, std::mt19937& rng) {
  std::vector<wgame::Edge> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<int> vertex(1, n);
  const int extra = std::uniform_int_distribution<int>(0, n)(rng);
  for (int i = 0; i < extra; ++i) {
    int u = vertex(rng), v = vertex(rng);
    if (u != v) edges.emplace_back(u, v);
  }
  return wgame::Board::from_edge_list(n, edges);
}

/// The nine-vertex example board with the edges 1-2, 2-3, 3-4, 4-2, 2-5,
/// 5-7, 7-8, 5-6, 7-9.
inline wgame::Board example_board() {
  const std::vector<wgame::Edge> edges{{1, 2}, {2, 3}, {3, 4}, {4, 2}, {2, 5}, {5, 7}, {7, 8}, {5, 6}, {7, 9}};
  return wgame::Board::from_edge_list(9, edges);
}

}  // namespace oracle
