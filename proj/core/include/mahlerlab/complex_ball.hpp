#ifndef MAHLERLAB_COMPLEX_BALL_HPP
#define MAHLERLAB_COMPLEX_BALL_HPP

#include <string>

#include "mahlerlab/ball.hpp"

namespace mahlerlab {

/// Rectangular enclosure re + i*im of a complex number.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(const Ball& re, const Ball& im = Ball(0)) : re_(re), im_(im) {}  // NOLINT

  static ComplexBall i(Precision prec = kDefaultPrecision) {
    return {Ball(0, prec), Ball(1, prec)};
  }

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }

  Precision prec() const { return std::max(re_.prec(), im_.prec()); }
  ComplexBall with_prec(Precision prec) const {
    return {re_.with_prec(prec), im_.with_prec(prec)};
  }

  /// Imaginary part is exactly zero.
  bool is_real() const { return im_.is_exact() && im_.mid().is_zero(); }
  bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool excludes_zero() const { return !contains_zero(); }
  bool overlaps(const ComplexBall& o) const {
    return re_.overlaps(o.re_) && im_.overlaps(o.im_);
  }
  bool contains(const ComplexBall& o) const {
    return re_.contains(o.re_) && im_.contains(o.im_);
  }

  /// Largest component radius.
  Dyadic rad() const { return max(re_.rad(), im_.rad()); }

  ComplexBall operator-() const { return {-re_, -im_}; }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  /// Throws DomainError when |b|^2 contains zero.
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator-=(const ComplexBall& o) { return *this = *this - o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }

  ComplexBall conj() const { return {re_, -im_}; }
  ComplexBall mul_i() const { return {-im_, re_}; }
  ComplexBall mul_2exp(long shift) const {
    return {re_.mul_2exp(shift), im_.mul_2exp(shift)};
  }
  ComplexBall sqr() const { return *this * *this; }

  /// Enclosure of |z|^2.
  Ball norm() const { return re_.sqr() + im_.sqr(); }
  /// Enclosure of |z|.
  Ball abs() const { return norm().sqrt_nonnegative(); }

  /// "re ± r_re + (im ± r_im)i" style rendering.
  std::string to_string() const;

 private:
  Ball re_;
  Ball im_;
};

// Principal-branch complex elementary functions.
ComplexBall exp(const ComplexBall& z, Precision prec);
/// Principal log; SingularInput at 0, Undecided when the ball straddles the
/// negative real axis.
ComplexBall log(const ComplexBall& z, Precision prec);
/// log(z) + 2*pi*i*branch.
ComplexBall log_branch(const ComplexBall& z, long branch, Precision prec);
ComplexBall sqrt(const ComplexBall& z, Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_COMPLEX_BALL_HPP
