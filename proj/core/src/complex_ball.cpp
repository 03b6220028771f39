#include "mahlerlab/complex_ball.hpp"

#include "mahlerlab/elementary.hpp"
#include "mahlerlab/errors.hpp"

namespace mahlerlab {

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  if (a.is_real() && b.is_real()) return {a.re_ * b.re_, Ball(0, a.prec())};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) {
    if (b.re_.contains_zero()) throw DomainError("complex division by zero");
    return {a.re_ / b.re_, a.im_ / b.re_};
  }
  Ball d = b.norm();
  if (d.contains_zero()) throw DomainError("complex division by zero");
  ComplexBall n = a * b.conj();
  return {n.re_ / d, n.im_ / d};
}

std::string ComplexBall::to_string() const {
  return "(" + re_.to_string() + ") + (" + im_.to_string() + ")i";
}

ComplexBall exp(const ComplexBall& z, Precision prec) {
  if (z.is_real()) return {exp(z.re(), prec), Ball(0, prec)};
  const Precision wp = prec + 8;
  Ball m = exp(z.re(), wp);
  Ball s, c;
  sin_cos(z.im(), wp, s, c);
  return ComplexBall(m * c, m * s).with_prec(prec);
}

ComplexBall log(const ComplexBall& z, Precision prec) {
  if (z.contains_zero()) throw SingularInput("logarithm of a ball containing zero");
  if (z.is_real() && z.re().is_positive()) return {log(z.re(), prec), Ball(0, prec)};
  const Precision wp = prec + 8;
  Ball arg = atan2(z.im(), z.re(), wp);
  Ball modulus = log(z.norm(), wp).mul_2exp(-1);
  return ComplexBall(modulus, arg).with_prec(prec);
}

ComplexBall log_branch(const ComplexBall& z, long branch, Precision prec) {
  ComplexBall principal = log(z, prec + 8);
  if (branch == 0) return principal.with_prec(prec);
  Ball shift = pi_ball(prec + 8).mul_2exp(1) * Ball(branch, prec + 8);
  return ComplexBall(principal.re(), principal.im() + shift).with_prec(prec);
}

ComplexBall sqrt(const ComplexBall& z, Precision prec) {
  const Precision wp = prec + 8;
  if (z.is_real()) {
    const Ball& x = z.re();
    if (x.is_positive() || (x.is_exact() && x.mid().is_zero())) {
      return {x.with_prec(wp).sqrt().with_prec(prec), Ball(0, prec)};
    }
    if (x.is_negative()) return {Ball(0, prec), (-x).with_prec(wp).sqrt().with_prec(prec)};
    // Straddles zero on the real axis: principal roots fill [0, sqrt(hi)]
    // on the real axis and [0, sqrt(-lo)] on the imaginary axis.
    Ball re = Ball::from_interval(Dyadic(), x.upper(), wp).sqrt_nonnegative();
    Ball im = Ball::from_interval(Dyadic(), -x.lower(), wp).sqrt_nonnegative();
    return ComplexBall(re, im).with_prec(prec);
  }
  const Ball x = z.re().with_prec(wp);
  const Ball y = z.im().with_prec(wp);
  const Ball modulus = z.with_prec(wp).abs();
  if (x.is_positive()) {
    Ball u = ((modulus + x).mul_2exp(-1)).sqrt_nonnegative();
    Ball v = y / u.mul_2exp(1);
    return ComplexBall(u, v).with_prec(prec);
  }
  if (y.is_positive() || y.is_negative()) {
    Ball t = (modulus - x).mul_2exp(-1);
    if (t.is_positive()) {
      Ball v = t.sqrt();
      if (y.is_negative()) v = -v;
      Ball u = y / v.mul_2exp(1);
      return ComplexBall(u, v).with_prec(prec);
    }
    ComplexBall half_log = log(z, wp).mul_2exp(-1);
    return exp(half_log, wp).with_prec(prec);
  }
  if (z.contains_zero()) throw Undecided("square root of a ball containing zero");
  throw Undecided("square root undecided on the negative real axis");
}

}  // namespace mahlerlab
