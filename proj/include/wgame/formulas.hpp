#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wgame/board.hpp"
#include "wgame/combinatorics.hpp"

namespace wgame::formulas {

/// Two-piece position counts split by the players involved.
struct PairCounts {
  BigInt n_ll;
  BigInt n_lr;
  BigInt n_rr;

  BigInt total() const { return n_ll + n_lr + n_rr; }
};

/// C(n, i) * 2^i: the face count of the weight-1 game with no extra rules,
/// and an upper bound for every weight-1 placement game.
BigInt weight1_bound(std::int64_t n, std::int64_t i);

// Paths P_n, n >= 1. Weights must be >= 1; std::invalid_argument otherwise.
BigInt path_f1(std::int64_t n, std::int64_t a, std::int64_t b);
PairCounts path_f2_parts(std::int64_t n, std::int64_t a, std::int64_t b);
BigInt path_f2(std::int64_t n, std::int64_t a, std::int64_t b);

// Cycles C_n, n >= 3. The single-piece count is n per player whose weight
// is at most n, taken as stated; for a weight equal to n the board actually
// has one placement, so brute-force comparisons keep weights below n.
BigInt cycle_f1(std::int64_t n, std::int64_t a, std::int64_t b);
PairCounts cycle_f2_parts(std::int64_t n, std::int64_t a, std::int64_t b);
BigInt cycle_f2(std::int64_t n, std::int64_t a, std::int64_t b);

/// f_k on the complete graph K_n:
///   sum_{l=0}^{k} [prod_{i<k-l} C(n-ia, a) / (k-l)!] * [prod_{j<l} C(n-(k-l)a-jb, b) / l!]
/// A term with any vanishing binomial is 0.
BigInt complete_fk(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k);

/// Equal-weight closed form n! / ((n-ka)! k! (a!)^k) * 2^k; 0 when ka > n.
BigInt complete_fk_equal(std::int64_t n, std::int64_t a, std::int64_t k);

/// Bracket for complete_fk with unequal weights (a <= b after swapping):
///   n!/((n-ka)! k! (b!)^k) 2^k  <=  f_k  <=  n!/((n-kb)! k! (a!)^k) 2^k.
/// The expressions are rationals; since f_k is an integer the lower bound
/// is rounded up and the upper bound down. A side whose factorial argument
/// is negative is left empty.
struct Sandwich {
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;
};
Sandwich complete_fk_sandwich(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k);

/// Closed-form f_k for a board family. Paths and cycles only have forms for
/// k <= 2; std::domain_error for larger k or for custom boards.
BigInt closed_form(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b,
                   std::int64_t k);

/// Human-readable account of which case of the closed form applies.
std::string case_trace(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b,
                       std::int64_t k);

}  // namespace wgame::formulas
