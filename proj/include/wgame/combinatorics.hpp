#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wgame {

/// Exact integer used for every face count and bound.
using BigInt = boost::multiprecision::cpp_int;

/// C(top, bottom), with C(m, w) = 0 whenever w < 0 or m < w.
/// Negative tops are treated the same way (the result is 0).
BigInt binomial(const BigInt& top, std::int64_t bottom);
BigInt binomial(std::int64_t top, std::int64_t bottom);

/// n! for n >= 0. Throws std::invalid_argument for negative n.
BigInt factorial(std::int64_t n);

/// 2^e for e >= 0.
BigInt power_of_two(std::int64_t e);

/// Decimal rendering without separators.
std::string to_decimal(const BigInt& value);

/// Parses a non-negative decimal integer. Throws ParseError on anything else.
BigInt parse_decimal(std::string_view text);

}  // namespace wgame
