#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bibcredit {

// All credit weights and proportions are exact rationals. Decimal strings
// only appear at the rendering boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a bare integer (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Parses a plain decimal string like "0.195" or "-3.25" exactly (no exponents).
Rational parse_decimal(std::string_view text);

/// Lowest-terms "p/q" form; the denominator is always written ("0/1", "3/1").
std::string format_ratio_string(const Rational& value);

/// Fixed-point decimal with the given number of places, rounding half away
/// from zero, so 0.27692... renders as "0.277" at 3 places.
std::string format_decimal(const Rational& value, int places);

} // namespace bibcredit
