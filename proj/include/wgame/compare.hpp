#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wgame/board.hpp"
#include "wgame/combinatorics.hpp"

namespace wgame {

/// Closed-form face count next to the Kruskal-Katona bound derived from the
/// previous entry of the same f-vector.
struct BoundRow {
  BoardKind kind;
  std::int64_t n;
  std::int64_t a;
  std::int64_t b;
  std::int64_t k;
  BigInt paper_value;
  /// f_{k-1}^{(k)}; empty when f_{k-1} = 0.
  std::optional<BigInt> kk_bound;

  bool strict() const { return kk_bound && paper_value < *kk_bound; }
  /// paper_value / kk_bound to 6 significant digits; "NA" without a bound.
  std::string ratio() const;
};

/// f_2 from the closed forms against the pseudopower f_1^{(2)}.
/// `kind` must be Path, Cycle or Complete; std::invalid_argument otherwise.
BoundRow compare_f2(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b);

/// One row per n in [n_from, n_to], ordered by n. Rows are computed in
/// parallel. Cycles skip n < 3.
std::vector<BoundRow> sweep(BoardKind kind, std::int64_t a, std::int64_t b, std::int64_t n_from,
                            std::int64_t n_to);

/// Header `board,n,a,b,k,paper,kk,ratio,strict`, then one line per row.
void write_csv(std::ostream& out, const std::vector<BoundRow>& rows);

}  // namespace wgame
