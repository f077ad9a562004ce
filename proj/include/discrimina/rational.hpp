#pragma once

// Exact scalars. GMP keeps mpq_class values canonical (positive denominator,
// coprime parts) after every arithmetic operation.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace discrimina {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q > 0). Floating-point
/// literals are rejected. Both ASCII '-' and U+2212 are accepted as sign.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

double to_double(const Rational& q);

/// Exact value of a finite double.
Rational from_double(double x);

Integer binomial(unsigned long n, unsigned long k);

/// Least common multiple of the denominators (1 for an empty span).
Integer denominator_lcm(std::span<const Rational> values);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Integer power with non-negative exponent.
Rational power(const Rational& base, unsigned long exponent);

/// Decimal rendering with `digits` significant digits (for summaries only).
std::string to_decimal(const Rational& q, int digits = 6);

}  // namespace discrimina
