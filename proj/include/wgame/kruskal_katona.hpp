#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgame/combinatorics.hpp"
#include "wgame/fvector.hpp"

namespace wgame::kk {

struct BinomialTerm {
  BigInt top;
  std::int64_t bottom;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// f = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_{i-s}, i-s)
/// with n_i > n_{i-1} > ... > n_{i-s} >= i-s >= 1.
class CanonicalRep {
 public:
  CanonicalRep(std::int64_t index, std::vector<BinomialTerm> terms)
      : index_(index), terms_(std::move(terms)) {}

  std::int64_t index() const { return index_; }
  const std::vector<BinomialTerm>& terms() const { return terms_; }

  /// Sum of the terms.
  BigInt value() const;

  /// "C(3,2)+C(2,1)"
  std::string to_string() const;

 private:
  std::int64_t index_;
  std::vector<BinomialTerm> terms_;
};

/// Greedy i-canonical representation. Requires f >= 1 and i >= 1;
/// std::invalid_argument otherwise.
CanonicalRep canonical_rep(const BigInt& f, std::int64_t i);

/// j-th pseudopower: every bottom i-t of the representation becomes j-t.
/// Terms with bottom 0 count 1, negative bottoms count 0.
BigInt pseudopower(const CanonicalRep& rep, std::int64_t j);
BigInt pseudopower(const BigInt& f, std::int64_t i, std::int64_t j);

/// First failed constraint of a validity check.
struct Violation {
  std::size_t index;  // the entry that breaks the constraint
  std::string message;
};

struct Verdict {
  std::optional<Violation> violation;
  bool valid() const { return !violation.has_value(); }
};

/// Upper-bound form: f_0 = 1 and f_{i+1} <= f_i^{(i+1)} for i >= 1.
/// A zero entry forces every later entry to be zero.
Verdict check_fvector(const FVector& fv);
bool is_valid_fvector(const FVector& fv);

/// Lower-bound form: f_0 = 1 and f_j >= f_{j+1}^{(j)} for j >= 1.
Verdict check_fvector_via_lower(const FVector& fv);
bool is_valid_fvector_via_lower(const FVector& fv);

}  // namespace wgame::kk
