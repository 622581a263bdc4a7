#include "wgame/formulas.hpp"

#include <stdexcept>
#include <utility>

namespace wgame::formulas {

namespace {

void require_weights(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("piece weights must be at least 1");
}

void require_path(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  require_weights(a, b);
}

void require_cycle(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  require_weights(a, b);
}

void require_complete(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  require_weights(a, b);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("closed form produced a non-integral count");
  return q;
}

}  // namespace

BigInt weight1_bound(std::int64_t n, std::int64_t i) {
  if (n < 0 || i < 0) throw std::invalid_argument("n and i must be non-negative");
  return binomial(n, i) * power_of_two(i);
}

BigInt path_f1(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_path(n, a, b);
  if (a > n && b > n) return 0;
  if (a <= n && b > n) return n - a + 1;
  if (a > n && b <= n) return n - b + 1;
  return 2 * n - a - b + 2;
}

PairCounts path_f2_parts(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_path(n, a, b);
  PairCounts parts;
  parts.n_ll = 2 * a > n ? BigInt(0) : binomial(n - 2 * a + 2, 2);
  parts.n_rr = 2 * b > n ? BigInt(0) : binomial(n - 2 * b + 2, 2);
  parts.n_lr = a + b > n ? BigInt(0) : 2 * binomial(n - a - b + 2, 2);
  return parts;
}

BigInt path_f2(std::int64_t n, std::int64_t a, std::int64_t b) { return path_f2_parts(n, a, b).total(); }

BigInt cycle_f1(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_cycle(n, a, b);
  const int fitting = (a <= n ? 1 : 0) + (b <= n ? 1 : 0);
  return BigInt(fitting * n);
}

PairCounts cycle_f2_parts(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_cycle(n, a, b);
  PairCounts parts;
  parts.n_ll = 2 * a > n ? BigInt(0) : BigInt(n * (n - 2 * a + 1) / 2);
  parts.n_rr = 2 * b > n ? BigInt(0) : BigInt(n * (n - 2 * b + 1) / 2);
  parts.n_lr = a + b > n ? BigInt(0) : BigInt(n * (n - a - b + 1));
  return parts;
}

BigInt cycle_f2(std::int64_t n, std::int64_t a, std::int64_t b) { return cycle_f2_parts(n, a, b).total(); }

BigInt complete_fk(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
  require_complete(n, a, b, k);
  BigInt total = 0;
  for (std::int64_t l = 0; l <= k; ++l) {
    const std::int64_t left_pieces = k - l;
    BigInt numerator = 1;
    for (std::int64_t i = 0; i < left_pieces && numerator != 0; ++i) numerator *= binomial(n - i * a, a);
    for (std::int64_t j = 0; j < l && numerator != 0; ++j)
      numerator *= binomial(n - left_pieces * a - j * b, b);
    if (numerator == 0) continue;
    total += exact_quotient(numerator, factorial(left_pieces) * factorial(l));
  }
  return total;
}

BigInt complete_fk_equal(std::int64_t n, std::int64_t a, std::int64_t k) {
  require_complete(n, a, a, k);
  if (k * a > n) return 0;
  BigInt denominator = factorial(n - k * a) * factorial(k);
  const BigInt weight_factorial = factorial(a);
  for (std::int64_t i = 0; i < k; ++i) denominator *= weight_factorial;
  return exact_quotient(factorial(n) * power_of_two(k), denominator);
}

Sandwich complete_fk_sandwich(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
  require_complete(n, a, b, k);
  if (a > b) std::swap(a, b);
  const BigInt numerator = factorial(n) * power_of_two(k);
  auto scaled = [&](std::int64_t consumed, std::int64_t piece) {
    BigInt den = factorial(n - consumed) * factorial(k);
    const BigInt pf = factorial(piece);
    for (std::int64_t i = 0; i < k; ++i) den *= pf;
    return den;
  };
  Sandwich out;
  if (n - k * a >= 0) {
    const BigInt den = scaled(k * a, b);
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(numerator, den, q, r);
    out.lower = r == 0 ? q : q + 1;
  }
  if (n - k * b >= 0) out.upper = numerator / scaled(k * b, a);
  return out;
}

BigInt closed_form(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  switch (kind) {
    case BoardKind::Path:
      require_path(n, a, b);
      if (k == 0) return 1;
      if (k == 1) return path_f1(n, a, b);
      if (k == 2) return path_f2(n, a, b);
      throw std::domain_error("no closed form for paths with k >= 3");
    case BoardKind::Cycle:
      require_cycle(n, a, b);
      if (k == 0) return 1;
      if (k == 1) return cycle_f1(n, a, b);
      if (k == 2) return cycle_f2(n, a, b);
      throw std::domain_error("no closed form for cycles with k >= 3");
    case BoardKind::Complete:
      return complete_fk(n, a, b, k);
    case BoardKind::Custom:
      break;
  }
  throw std::domain_error("no closed form for custom boards");
}

std::string case_trace(BoardKind kind, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
  auto fits = [&](std::int64_t w) { return w <= n; };
  switch (kind) {
    case BoardKind::Path:
    case BoardKind::Cycle: {
      const bool path = kind == BoardKind::Path;
      if (k == 0) return "f_0 = 1 (empty position)";
      if (k == 1) {
        if (!fits(a) && !fits(b)) return "f_1 = 0 [a,b > n]";
        if (path) {
          if (fits(a) && !fits(b)) return "f_1 = n-a+1 [a <= n < b]";
          if (!fits(a)) return "f_1 = n-b+1 [b <= n < a]";
          return "f_1 = 2n-a-b+2 [a,b <= n]";
        }
        if (fits(a) != fits(b)) return "f_1 = n [exactly one of a,b <= n]";
        return "f_1 = 2n [a,b <= n]";
      }
      if (k == 2) {
        std::string ll = 2 * a > n ? "N_LL = 0 [2a > n]"
                                   : (path ? "N_LL = C(n-2a+2,2) [2a <= n]" : "N_LL = n(n-2a+1)/2 [2a <= n]");
        std::string lr = a + b > n ? "N_LR = 0 [a+b > n]"
                                   : (path ? "N_LR = 2C(n-a-b+2,2) [a+b <= n]" : "N_LR = n(n-a-b+1) [a+b <= n]");
        std::string rr = 2 * b > n ? "N_RR = 0 [2b > n]"
                                   : (path ? "N_RR = C(n-2b+2,2) [2b <= n]" : "N_RR = n(n-2b+1)/2 [2b <= n]");
        return "f_2 = N_LL + N_LR + N_RR; " + ll + "; " + lr + "; " + rr;
      }
      return "no closed form for k >= 3";
    }
    case BoardKind::Complete:
      return "f_k = sum_l [prod_i C(n-ia,a)/(k-l)!] [prod_j C(n-(k-l)a-jb,b)/l!]";
    case BoardKind::Custom:
      break;
  }
  return "no closed form for custom boards";
}

}  // namespace wgame::formulas
