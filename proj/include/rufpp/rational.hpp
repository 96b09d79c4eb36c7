#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rufpp {

/// Exact rational used for capacities, flow sizes and geometric coordinates.
using Rational = mpq_class;

/// Parses "12", "-3.25", "1e3", "2.5E-2" or "7/3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact decimal when the denominator is of the form 2^a 5^b, otherwise "p/q".
/// parse_rational(format_rational(x)) == x for every x.
std::string format_rational(const Rational& value);

/// Approximate value, for reporting only.
double to_double(const Rational& value);

/// Smallest integer p >= 0 with base^p >= value. Requires base > 1.
int ceil_log(const Rational& base, const Rational& value);

/// Largest integer p with 2^p <= value. Requires value > 0.
int floor_log2(const Rational& value);

Rational pow(const Rational& base, int exponent);

} // namespace rufpp
