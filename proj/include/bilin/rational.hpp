#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bilin {

/// Exact arbitrary-precision rational scalar for the exact evaluation and
/// execution modes.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "123", "-4", "7/9", "-7/9". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

}  // namespace bilin
