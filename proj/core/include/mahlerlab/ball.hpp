#ifndef MAHLERLAB_BALL_HPP
#define MAHLERLAB_BALL_HPP

#include <string>
#include <string_view>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/dyadic.hpp"

namespace mahlerlab {

/// Midpoint-radius enclosure [mid - rad, mid + rad] of a real number.
///
/// Every operation returns a ball that contains the exact result of the
/// operation applied to any points of the operand balls. Midpoints are
/// rounded to `prec()` significant bits and the rounding error is folded
/// into the radius. The radius itself is kept to a short mantissa and is
/// always rounded upward.
class Ball {
 public:
  Ball() = default;
  Ball(long value, Precision prec = kDefaultPrecision);  // NOLINT
  explicit Ball(const Dyadic& mid, const Dyadic& rad = Dyadic(),
                Precision prec = kDefaultPrecision);

  /// Exact integer (radius 0, regardless of size).
  static Ball exact(const Integer& value, Precision prec = kDefaultPrecision);

  /// Enclosure of a rational; exact when the denominator is a power of two.
  static Ball from_rational(const Rational& value,
                            Precision prec = kDefaultPrecision);

  /// Smallest ball (up to radius rounding) containing [lo, hi].
  static Ball from_interval(const Dyadic& lo, const Dyadic& hi,
                            Precision prec = kDefaultPrecision);
  static Ball from_interval(const Rational& lo, const Rational& hi,
                            Precision prec = kDefaultPrecision);

  const Dyadic& mid() const { return mid_; }
  const Dyadic& rad() const { return rad_; }
  Precision prec() const { return prec_; }

  Ball with_prec(Precision prec) const;

  Dyadic lower() const { return mid_ - rad_; }
  Dyadic upper() const { return mid_ + rad_; }

  /// Upper bound for |x| over the ball.
  Dyadic mag() const { return mid_.abs() + rad_; }
  /// Lower bound for |x| over the ball (0 when the ball contains 0).
  Dyadic mig() const;

  bool is_exact() const { return rad_.is_zero(); }
  bool is_positive() const { return lower().sign() > 0; }
  bool is_negative() const { return upper().sign() < 0; }
  bool contains_zero() const { return !is_positive() && !is_negative(); }

  bool contains(const Dyadic& x) const;
  bool contains(const Rational& x) const;
  bool contains(const Ball& other) const;
  bool overlaps(const Ball& other) const;

  /// Adds `err` (>= 0) to the radius.
  Ball& add_error(const Dyadic& err);

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  /// Throws DomainError when `b` contains zero.
  friend Ball operator/(const Ball& a, const Ball& b);

  Ball& operator+=(const Ball& o) { return *this = *this + o; }
  Ball& operator-=(const Ball& o) { return *this = *this - o; }
  Ball& operator*=(const Ball& o) { return *this = *this * o; }
  Ball& operator/=(const Ball& o) { return *this = *this / o; }

  Ball mul_2exp(long shift) const;
  Ball abs() const;
  Ball sqr() const;

  /// Principal square root. Throws DomainError if the ball is entirely
  /// negative and Undecided if it straddles zero.
  Ball sqrt() const;

  /// Square root of a quantity known to be non-negative; any negative part
  /// of the ball is discarded as rounding noise.
  Ball sqrt_nonnegative() const;

  /// Union hull of two balls.
  static Ball hull(const Ball& a, const Ball& b);

  /// Decimal "midpoint ± radius [p bits]" rendering; the printed radius is
  /// widened so that the printed ball still encloses this one.
  std::string to_string() const;

 private:
  void round_mid();

  Dyadic mid_;
  Dyadic rad_;
  Precision prec_ = kDefaultPrecision;
};

enum class Sign { kPositive, kNegative, kContainsZero };

/// Positive iff mid - rad > 0, Negative iff mid + rad < 0.
Sign certify_sign(const Ball& b);
std::string_view to_string(Sign s);

/// Number of radius mantissa bits kept after upward rounding.
inline constexpr Precision kRadiusBits = 30;

/// Upper bound for 2^-bits * max(1, |mid|), the default accuracy target.
Dyadic accuracy_target(const Ball& b, Precision bits);

/// Whether b is accurate to `bits` relative bits (absolute for |b| < 1).
bool meets_accuracy(const Ball& b, Precision bits);

}  // namespace mahlerlab

#endif  // MAHLERLAB_BALL_HPP
