#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "wgame/combinatorics.hpp"

namespace wgame {

/// (f_0, f_1, ..., f_k): f_i counts faces with i vertices.
/// Trailing zeros are trimmed on construction, always keeping f_0.
class FVector {
 public:
  /// Throws std::invalid_argument on an empty sequence or a negative entry.
  explicit FVector(std::vector<BigInt> entries);
  FVector(std::initializer_list<long long> entries);

  const std::vector<BigInt>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  /// f_i, or 0 past the end.
  BigInt at(std::size_t i) const;

  /// "1,7,5"
  std::string to_string() const;
  /// Comma-separated decimals. Throws ParseError.
  static FVector parse(std::string_view text);

  friend auto operator<=>(const FVector&, const FVector&) = default;
  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

}  // namespace wgame
