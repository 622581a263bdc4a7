#include "wgame/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "wgame/error.hpp"

namespace wgame {

BigInt binomial(const BigInt& top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  // C(m, w) = C(m, m - w); use the smaller bottom when it fits.
  BigInt complement = top - bottom;
  std::int64_t w = bottom;
  if (complement < w) w = static_cast<std::int64_t>(complement);
  BigInt result = 1;
  BigInt factor = top - w;
  for (std::int64_t i = 1; i <= w; ++i) {
    ++factor;
    result *= factor;
    result /= i;  // exact: result is now C(top - w + i, i)
  }
  return result;
}

BigInt binomial(std::int64_t top, std::int64_t bottom) { return binomial(BigInt(top), bottom); }

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt power_of_two(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BigInt result = 1;
  result <<= static_cast<unsigned>(e);
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'");
  return BigInt(std::string(text));
}

}  // namespace wgame
