#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hall {

/// Exact rationals. Always canonical (gcd-reduced, positive denominator).
using Rational = mpq_class;

/// "num/den" with den > 0, den printed even when it is 1.
std::string format_rational(const Rational& value);

/// Accepts "a/b" or "a". Throws InvalidInput on anything else or b = 0.
Rational parse_rational(std::string_view text);

/// base^exp for a possibly negative exponent; base must be nonzero when exp < 0.
Rational rational_power(const Rational& base, long exp);

}  // namespace hall
