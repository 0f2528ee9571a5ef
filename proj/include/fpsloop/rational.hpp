#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fpsloop {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (gcd 1, positive denominator) as long as every constructor from raw
// numerator/denominator pairs is followed by canonicalize().
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

}  // namespace fpsloop
