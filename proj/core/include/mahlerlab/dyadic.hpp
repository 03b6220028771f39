#ifndef MAHLERLAB_DYADIC_HPP
#define MAHLERLAB_DYADIC_HPP

#include <compare>
#include <string>

#include "mahlerlab/arith.hpp"

namespace mahlerlab {

enum class Round {
  kFloor,     // toward -infinity
  kCeil,      // toward +infinity
  kTruncate,  // toward zero
};

/// Exact binary floating-point number mantissa * 2^exponent.
///
/// The mantissa is kept odd (or zero with exponent 0), so two equal values
/// always have identical representations. All arithmetic operators are
/// exact; rounding happens only through the explicit `rounded`,
/// `from_rational`, `quotient` and `sqrt` helpers.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  explicit Dyadic(const Integer& mantissa, long exponent = 0);

  static Dyadic pow2(long exponent);

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sgn(mantissa_) == 0; }

  /// Significant bits of the mantissa.
  long bits() const { return bit_length(mantissa_); }

  /// floor(log2(|x|)); undefined for zero.
  long msb() const { return exponent_ + bits() - 1; }

  /// Exponent of the least significant bit that a `prec`-bit rounding of
  /// this value would keep.
  long ulp_exponent(Precision prec) const { return msb() + 1 - prec; }

  Dyadic operator-() const;
  Dyadic abs() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
  Dyadic& operator-=(const Dyadic& other) { return *this = *this - other; }
  Dyadic& operator*=(const Dyadic& other) { return *this = *this * other; }

  /// this * 2^shift, exact.
  Dyadic ldexp(long shift) const;

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// Rounds to at most `prec` significant bits.
  Dyadic rounded(Precision prec, Round mode) const;

  /// Rounds to a multiple of 2^exponent.
  Dyadic rounded_to_exponent(long exponent, Round mode) const;

  static Dyadic from_rational(const Rational& x, Precision prec, Round mode);

  /// a / b rounded to `prec` bits; b must be nonzero.
  static Dyadic quotient(const Dyadic& a, const Dyadic& b, Precision prec,
                         Round mode);

  /// sqrt(x) rounded to `prec` bits; x must be non-negative.
  static Dyadic sqrt(const Dyadic& x, Precision prec, Round mode);

  Rational to_rational() const;
  double to_double() const;

  /// floor(x) and ceil(x) as integers.
  Integer floor() const;
  Integer ceil() const;

 private:
  void normalize();

  Integer mantissa_{0};
  long exponent_ = 0;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

}  // namespace mahlerlab

#endif  // MAHLERLAB_DYADIC_HPP
