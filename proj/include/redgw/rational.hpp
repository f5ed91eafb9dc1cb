#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace redgw {

/// Exact arbitrary-precision rational number.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational binomial(int n, int k);

inline int sign_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace redgw
