#pragma once

/**
 * Exact rational scalars.
 *
 * Backed by GMP's mpq_class, which keeps every value canonical (positive
 * denominator, numerator and denominator coprime) after each operation.
 * Beware of `auto` with gmpxx: arithmetic yields expression templates, so
 * bind results to `Rational` explicitly.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kfl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "17", "-3/4", "0.25", "-1.5e-2". Decimal strings become exact
/// fractions ("0.1" is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational power(const Rational& base, unsigned exponent);

/// Smallest integer >= value. Throws InputError if it does not fit.
std::int64_t ceil_to_int64(const Rational& value);

std::int64_t to_int64(const Integer& value);

/// Scales `values` by a positive rational so every entry becomes an integer
/// and their gcd is 1. The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_scaling(const std::vector<Rational>& values);

/// The positive factor used by primitive_integer_scaling (1 for zero input).
Rational primitive_scale_factor(const std::vector<Rational>& values);

}  // namespace kfl
