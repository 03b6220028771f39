#ifndef MAHLERLAB_LACUNARY_HPP
#define MAHLERLAB_LACUNARY_HPP

#include <vector>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"

namespace mahlerlab {

/// The lacunary series sum_{k>=1} a_k * base^(-k!) with a periodic digit
/// rule a_k = digits[(k-1) mod period]. At least one digit of the period is
/// nonzero, so infinitely many terms are nonzero and the value is a
/// Liouville number.
class LacunaryNumber {
 public:
  /// Throws InvalidArgument on base < 2, empty or all-zero period, or a
  /// digit outside [0, base).
  LacunaryNumber(long base, std::vector<unsigned> digits);

  /// sum_k base^(-k!), the classical Liouville constant for base 10.
  static LacunaryNumber liouville(long base);

  long base() const { return base_; }
  const std::vector<unsigned>& digits() const { return digits_; }

  /// a_k for k >= 1.
  unsigned digit(unsigned long k) const { return digits_[(k - 1) % digits_.size()]; }
  unsigned max_digit() const { return max_digit_; }
  bool is_liouville_constant() const { return digits_.size() == 1 && digits_[0] == 1; }

  friend bool operator==(const LacunaryNumber&, const LacunaryNumber&) = default;

 private:
  long base_;
  std::vector<unsigned> digits_;
  unsigned max_digit_ = 0;
};

/// Partial sum p/q of the first m terms with q = base^(m!) (q = 1 for
/// m = 0), unreduced, and a bound on the neglected tail.
struct Truncation {
  unsigned depth = 0;
  Integer p;
  Integer q;
  /// 0 <= L - p/q <= tail_bound = 2 * max_digit * base^(-(m+1)!).
  Rational tail_bound;

  Rational value() const { return make_rational(p, q); }
};

/// Largest supported truncation depth; base^(m!) grows beyond practical
/// sizes past this point.
inline constexpr unsigned kMaxTruncationDepth = 9;

Truncation truncate(const LacunaryNumber& number, unsigned depth);

/// Enclosure of the tail sum_{k>m} a_k base^(-k!) with relative accuracy
/// about 2^-prec. The tail is strictly positive, so the ball excludes zero.
Ball tail_ball(const LacunaryNumber& number, unsigned depth, Precision prec);

/// Enclosure of the full value with absolute radius at most 2^-prec.
Ball to_ball(const LacunaryNumber& number, Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_LACUNARY_HPP
