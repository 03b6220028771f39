#ifndef MAHLERLAB_ARITH_HPP
#define MAHLERLAB_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mahlerlab {

/// Arbitrary-size integer.
using Integer = mpz_class;

/// Exact rational, always kept in canonical form (positive denominator,
/// coprime numerator and denominator).
using Rational = mpq_class;

/// Working precision in bits.
using Precision = long;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kPrecisionCap = 16384;

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(long base, unsigned long exponent);

/// n! for small n.
unsigned long factorial(unsigned n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

/// Reduces x to canonical form and returns it.
Rational make_rational(const Integer& num, const Integer& den);

/// Number of bits of |n| (0 for n = 0).
long bit_length(const Integer& n);

/// Natural logarithm of |n| as a double; valid for huge n.
double log_abs(const Integer& n);

/// Natural logarithm of |x| as a double; valid for huge or tiny x.
double log_abs(const Rational& x);

std::string to_string(const Integer& n);
std::string to_string(const Rational& x);

/// Parses a base-10 integer with optional leading '-'. Returns false on
/// malformed input.
bool parse_integer(const std::string& text, Integer& out);

}  // namespace mahlerlab

#endif  // MAHLERLAB_ARITH_HPP
