#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace campana {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p/q" (the denominator is always written, "2/1" for 2).
std::string to_string(const Rational& value);

/// Accepts "p/q", "p" or a decimal literal such as "0.5" or "-1.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// base^exponent for any integer exponent; base must be nonzero when the
/// exponent is negative.
Rational pow(const Rational& base, int exponent);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace campana
