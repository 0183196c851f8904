// Exact rational scalars and decimal rendering.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pi1lab {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// 10^exponent for exponent >= 0, or 1/10^|exponent| otherwise.
Rational pow10(long exponent);

/// Parses "a" or "a/b" with an optional leading sign. Decimal points are
/// rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Fixed-point rendering with `digits` fractional digits, rounded half to
/// even.
std::string to_decimal(const Rational& q, int digits);

/// Renders an already-rounded scaled integer (value * 10^digits).
std::string format_scaled(const Integer& scaled, int digits);

/// Exact square root of a rational when it exists.
bool is_perfect_square(const Rational& q);
Rational exact_sqrt(const Rational& q);

}  // namespace pi1lab
