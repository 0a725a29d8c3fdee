#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apolar {

/// Exact scalar used throughout the library. Values produced by arithmetic
/// are always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise. Never a decimal.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace apolar
