#include "wgame/kruskal_katona.hpp"

#include <stdexcept>

namespace wgame::kk {

BigInt CanonicalRep::value() const {
  BigInt sum = 0;
  for (const auto& term : terms_) sum += binomial(term.top, term.bottom);
  return sum;
}

std::string CanonicalRep::to_string() const {
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += '+';
    out += "C(" + to_decimal(term.top) + "," + std::to_string(term.bottom) + ")";
  }
  return out;
}

namespace {

// Largest t >= bottom with C(t, bottom) <= budget; needs budget >= 1.
BigInt largest_top(const BigInt& budget, std::int64_t bottom) {
  if (bottom == 1) return budget;
  BigInt lo = bottom;  // C(lo, bottom) = 1 <= budget
  BigInt hi = 2 * lo;
  while (binomial(hi, bottom) <= budget) {
    lo = hi;
    hi *= 2;
  }
  // Invariant: C(lo) <= budget < C(hi).
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, bottom) <= budget) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

CanonicalRep canonical_rep(const BigInt& f, std::int64_t i) {
  if (f < 1) throw std::invalid_argument("canonical representation needs f >= 1");
  if (i < 1) throw std::invalid_argument("canonical representation needs i >= 1");
  std::vector<BinomialTerm> terms;
  BigInt remaining = f;
  for (std::int64_t bottom = i; remaining > 0; --bottom) {
    if (bottom == 0) throw std::logic_error("canonical representation did not terminate");
    BigInt top = largest_top(remaining, bottom);
    remaining -= binomial(top, bottom);
    terms.push_back(BinomialTerm{std::move(top), bottom});
  }
  return CanonicalRep(i, std::move(terms));
}

BigInt pseudopower(const CanonicalRep& rep, std::int64_t j) {
  BigInt sum = 0;
  for (const auto& term : rep.terms()) {
    const std::int64_t shifted = j - (rep.index() - term.bottom);
    if (shifted < 0) continue;
    sum += binomial(term.top, shifted);
  }
  return sum;
}

BigInt pseudopower(const BigInt& f, std::int64_t i, std::int64_t j) {
  if (j < 1) throw std::invalid_argument("pseudopower needs j >= 1");
  return pseudopower(canonical_rep(f, i), j);
}

namespace {

std::string entry(std::size_t i) { return "f_" + std::to_string(i); }

std::optional<Violation> check_start(const FVector& fv) {
  if (fv[0] != 1) return Violation{0, "f_0 = " + to_decimal(fv[0]) + ", expected 1"};
  return std::nullopt;
}

Violation zero_gap(std::size_t zero_at) {
  return Violation{zero_at + 1, entry(zero_at) + " = 0 but a later entry is non-zero"};
}

}  // namespace

Verdict check_fvector(const FVector& fv) {
  if (auto v = check_start(fv)) return Verdict{v};
  for (std::size_t i = 1; i + 1 < fv.size(); ++i) {
    if (fv[i] == 0) return Verdict{zero_gap(i)};
    const BigInt bound = pseudopower(fv[i], static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1));
    if (fv[i + 1] > bound)
      return Verdict{Violation{i + 1, entry(i + 1) + " = " + to_decimal(fv[i + 1]) + " exceeds " + entry(i) +
                                          "^(" + std::to_string(i + 1) + ") = " + to_decimal(bound)}};
  }
  return Verdict{};
}

bool is_valid_fvector(const FVector& fv) { return check_fvector(fv).valid(); }

Verdict check_fvector_via_lower(const FVector& fv) {
  if (auto v = check_start(fv)) return Verdict{v};
  for (std::size_t j = 1; j + 1 < fv.size(); ++j) {
    if (fv[j + 1] == 0) return Verdict{zero_gap(j + 1)};
    const BigInt bound =
        pseudopower(fv[j + 1], static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(j));
    if (fv[j] < bound)
      return Verdict{Violation{j, entry(j) + " = " + to_decimal(fv[j]) + " is below " + entry(j + 1) + "^(" +
                                      std::to_string(j) + ") = " + to_decimal(bound)}};
  }
  return Verdict{};
}

bool is_valid_fvector_via_lower(const FVector& fv) { return check_fvector_via_lower(fv).valid(); }

}  // namespace wgame::kk
