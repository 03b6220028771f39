#include "mahlerlab/elementary.hpp"

#include <algorithm>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

constexpr Precision kGuardBits = 16;

// Number of argument-halving steps applied before a series, trading
// squarings for fewer series terms at high precision.
long reduction_steps(Precision prec) {
  long s = static_cast<long>(isqrt(Integer(prec)).get_si()) / 2;
  return std::clamp<long>(s, 4, 48);
}

// Magnitude exponent such that |x| < 2^e (x nonzero).
long mag_exponent(const Dyadic& x) { return x.msb() + 1; }

Ball exact_ball(const Dyadic& x, Precision prec) { return Ball(x, Dyadic(), prec); }

Ball one(Precision prec) { return Ball(1, prec); }

Ball exp_point(const Dyadic& m, Precision wp) {
  if (m.is_zero()) return one(wp);
  const long red = reduction_steps(wp);
  const long s = std::max<long>(0, mag_exponent(m)) + red;
  const Precision p = wp + s + kGuardBits;
  const Ball r = exact_ball(m.ldexp(-s), p);  // |r| <= 2^-red
  Ball sum = one(p);
  Ball term = one(p);
  const Dyadic eps = Dyadic::pow2(-(p + 2));
  for (long k = 1;; ++k) {
    term = term * r / Ball(k, p);
    sum += term;
    if (term.mag() < eps) {
      sum.add_error(term.mag());
      break;
    }
  }
  for (long i = 0; i < s; ++i) sum = sum * sum;
  return sum.with_prec(wp);
}

// log(m) for exact m > 0.
Ball log_point(const Dyadic& m, Precision wp) {
  if (m == Dyadic(1)) return Ball(0, wp);
  long e = m.msb();
  Dyadic y = m.ldexp(-e);  // [1, 2)
  if (y > Dyadic(3).ldexp(-1)) {
    y = y.ldexp(-1);  // [3/4, 1)
    ++e;
  }
  const long s = reduction_steps(wp);
  const Precision p = wp + s + kGuardBits + bit_length(Integer(e < 0 ? -e : e));
  Ball yb = exact_ball(y, p);
  for (long i = 0; i < s; ++i) yb = yb.sqrt();
  Ball z = (yb - one(p)) / (yb + one(p));
  Ball result = atanh_series(z, p).mul_2exp(s + 1);
  if (e != 0) result += Ball(e, p) * ln2_ball(p);
  return result.with_prec(wp);
}

// sin and cos of exact m.
void sin_cos_point(const Dyadic& m, Precision wp, Ball& s_out, Ball& c_out) {
  if (m.is_zero()) {
    s_out = Ball(0, wp);
    c_out = one(wp);
    return;
  }
  const long red = reduction_steps(wp);
  const long steps = std::max<long>(0, mag_exponent(m)) + red;
  const Precision p = wp + 2 * steps + kGuardBits;
  const Ball r = exact_ball(m.ldexp(-steps), p);
  const Ball r2 = r * r;
  Ball sin_sum = r;
  Ball cos_sum = one(p);
  Ball sin_term = r;
  Ball cos_term = one(p);
  const Dyadic eps = Dyadic::pow2(-(p + 2));
  for (long k = 1;; ++k) {
    cos_term = -(cos_term * r2) / Ball((2 * k - 1) * (2 * k), p);
    sin_term = -(sin_term * r2) / Ball((2 * k) * (2 * k + 1), p);
    cos_sum += cos_term;
    sin_sum += sin_term;
    if (sin_term.mag() < eps && cos_term.mag() < eps) {
      cos_sum.add_error(cos_term.mag());
      sin_sum.add_error(sin_term.mag());
      break;
    }
  }
  for (long i = 0; i < steps; ++i) {
    Ball s2 = (sin_sum * cos_sum).mul_2exp(1);
    cos_sum = one(p) - sin_sum.sqr().mul_2exp(1);
    sin_sum = s2;
  }
  s_out = sin_sum.with_prec(wp);
  c_out = cos_sum.with_prec(wp);
}

Ball atan_point(const Dyadic& m, Precision wp) {
  if (m.is_zero()) return Ball(0, wp);
  const long red = reduction_steps(wp);
  const long halvings = std::max<long>(0, mag_exponent(m)) + 1 + red;
  const Precision p = wp + halvings + kGuardBits;
  Ball x = exact_ball(m, p);
  // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2)))
  for (long i = 0; i < halvings; ++i) {
    x = x / (one(p) + (one(p) + x.sqr()).sqrt());
  }
  return atan_series(x, p).mul_2exp(halvings).with_prec(wp);
}

Ball with_propagation(Ball center, const Dyadic& err, Precision prec) {
  center.add_error(err);
  return center.with_prec(prec);
}

}  // namespace

Ball atan_series(const Ball& z, Precision prec) {
  const Precision p = prec + kGuardBits;
  const Ball z2 = z.sqr();
  Ball power = z.with_prec(p);
  Ball sum = power;
  const Dyadic eps = Dyadic::pow2(-(p + 2));
  for (long k = 1;; ++k) {
    power = -(power * z2);
    sum += power / Ball(2 * k + 1, p);
    if (power.mag() < eps) {
      // Remainder <= sum_{j>k} |z|^(2j+1) <= |z|^(2k+1) for |z| <= 1/2.
      sum.add_error(power.mag());
      break;
    }
  }
  return sum.with_prec(prec);
}

Ball atanh_series(const Ball& z, Precision prec) {
  const Precision p = prec + kGuardBits;
  const Ball z2 = z.sqr();
  Ball power = z.with_prec(p);
  Ball sum = power;
  const Dyadic eps = Dyadic::pow2(-(p + 2));
  for (long k = 1;; ++k) {
    power = power * z2;
    sum += power / Ball(2 * k + 1, p);
    if (power.mag() < eps) {
      sum.add_error(power.mag());
      break;
    }
  }
  return sum.with_prec(prec);
}

Ball pi_ball(Precision prec) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  const Precision p = prec + kGuardBits;
  Ball a = atan_series(Ball::from_rational(Rational(1, 5), p), p);
  Ball b = atan_series(Ball::from_rational(Rational(1, 239), p), p);
  return (a.mul_2exp(4) - b.mul_2exp(2)).with_prec(prec);
}

Ball ln2_ball(Precision prec) {
  // ln 2 = 18 atanh(1/26) - 2 atanh(1/4801) + 8 atanh(1/8749)
  const Precision p = prec + kGuardBits;
  Ball a = atanh_series(Ball::from_rational(Rational(1, 26), p), p);
  Ball b = atanh_series(Ball::from_rational(Rational(1, 4801), p), p);
  Ball c = atanh_series(Ball::from_rational(Rational(1, 8749), p), p);
  return (a * Ball(18, p) - b.mul_2exp(1) + c.mul_2exp(3)).with_prec(prec);
}

Ball e_ball(Precision prec) { return exp_point(Dyadic(1), prec); }

Ball exp(const Ball& x, Precision prec) {
  const Precision wp = prec + 8;
  if (x.rad() > Dyadic(1)) {
    Ball lo = exp_point(x.lower(), wp);
    Ball hi = exp_point(x.upper(), wp);
    return Ball::hull(lo, hi).with_prec(prec);
  }
  Ball center = exp_point(x.mid(), wp);
  if (x.is_exact()) return center.with_prec(prec);
  // |exp(x) - exp(m)| <= exp(m) r e^r <= 3 r exp(m) for r <= 1
  Dyadic err = (center.mag() * x.rad() * Dyadic(3)).rounded(kRadiusBits, Round::kCeil);
  return with_propagation(center, err, prec);
}

Ball log(const Ball& x, Precision prec) {
  if (x.contains_zero()) throw SingularInput("logarithm of a ball containing zero");
  if (x.is_negative()) throw DomainError("real logarithm of a negative number");
  const Precision wp = prec + 8;
  Ball center = log_point(x.mid(), wp);
  if (x.is_exact()) return center.with_prec(prec);
  Dyadic err = Dyadic::quotient(x.rad(), x.lower(), kRadiusBits, Round::kCeil);
  return with_propagation(center, err, prec);
}

void sin_cos(const Ball& x, Precision prec, Ball& sin_out, Ball& cos_out) {
  sin_cos_point(x.mid(), prec + 8, sin_out, cos_out);
  if (!x.is_exact()) {
    sin_out.add_error(x.rad());
    cos_out.add_error(x.rad());
  }
  sin_out = sin_out.with_prec(prec);
  cos_out = cos_out.with_prec(prec);
}

Ball sin(const Ball& x, Precision prec) {
  Ball s, c;
  sin_cos(x, prec, s, c);
  return s;
}

Ball cos(const Ball& x, Precision prec) {
  Ball s, c;
  sin_cos(x, prec, s, c);
  return c;
}

Ball tan(const Ball& x, Precision prec) {
  Ball s, c;
  sin_cos(x, prec + 8, s, c);
  if (c.contains_zero()) throw SingularInput("tangent at a ball containing a pole");
  return (s / c).with_prec(prec);
}

Ball atan(const Ball& x, Precision prec) {
  Ball center = atan_point(x.mid(), prec + 8);
  if (x.is_exact()) return center.with_prec(prec);
  return with_propagation(center, x.rad(), prec);
}

Ball atan2(const Ball& y, const Ball& x, Precision prec) {
  const Precision wp = prec + 8;
  if (x.is_positive()) return atan(y / x, wp).with_prec(prec);
  if (y.is_positive()) {
    return (pi_ball(wp).mul_2exp(-1) - atan(x / y, wp)).with_prec(prec);
  }
  if (y.is_negative()) {
    return (-pi_ball(wp).mul_2exp(-1) - atan(x / y, wp)).with_prec(prec);
  }
  if (x.is_negative()) {
    if (y.is_exact()) return pi_ball(prec);
    throw Undecided("argument undecided on the negative real axis");
  }
  throw SingularInput("argument of a ball containing the origin");
}

namespace {

// Upper bound for exp(t), coarse.
Dyadic exp_upper(const Dyadic& t) { return exp_point(t, 40).upper(); }

Ball exact_mid(const Ball& x, Precision wp) { return Ball(x.mid(), Dyadic(), wp); }

}  // namespace

Ball sinh(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball e = exp(exact_mid(x, wp), wp);
  Ball center = (e - one(wp) / e).mul_2exp(-1);
  if (x.is_exact()) return center.with_prec(prec);
  // |sinh'| = cosh <= exp(|x|)
  Dyadic err = (x.rad() * exp_upper(x.mag())).rounded(kRadiusBits, Round::kCeil);
  return with_propagation(center, err, prec);
}

Ball cosh(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball e = exp(exact_mid(x, wp), wp);
  Ball center = (e + one(wp) / e).mul_2exp(-1);
  if (x.is_exact()) return center.with_prec(prec);
  Dyadic err = (x.rad() * exp_upper(x.mag())).rounded(kRadiusBits, Round::kCeil);
  return with_propagation(center, err, prec);
}

Ball tanh(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball e2 = exp(exact_mid(x, wp).mul_2exp(1), wp);
  Ball center = (e2 - one(wp)) / (e2 + one(wp));
  if (x.is_exact()) return center.with_prec(prec);
  // |tanh'| = sech^2 <= min(1, 4 exp(-2|x|))
  Dyadic slope = min(Dyadic(1), exp_upper(-x.mig().ldexp(1)).ldexp(2));
  Dyadic err = (x.rad() * slope).rounded(kRadiusBits, Round::kCeil);
  return with_propagation(center, err, prec);
}

Ball asin(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball d = one(wp) - x.sqr();
  if (!d.is_positive()) throw DomainError("real arcsine needs |x| < 1");
  return atan(x / d.sqrt(), wp).with_prec(prec);
}

Ball asinh(const Ball& x, Precision prec) {
  if (x.is_negative()) return -asinh(-x, prec);
  const Precision wp = prec + 16;
  Ball s = (x.sqr() + one(wp)).sqrt();
  return log(x + s, wp).with_prec(prec);
}

Ball acosh(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball d = x.sqr() - one(wp);
  if (x.lower() < Dyadic(1) && !(x.is_exact() && x.mid() == Dyadic(1))) {
    throw DomainError("real arccosh needs x >= 1");
  }
  return log(x + d.sqrt_nonnegative(), wp).with_prec(prec);
}

Ball atanh(const Ball& x, Precision prec) {
  const Precision wp = prec + 16;
  Ball a = one(wp) + x;
  Ball b = one(wp) - x;
  if (!a.is_positive() || !b.is_positive()) {
    throw DomainError("real artanh needs |x| < 1");
  }
  return log(a / b, wp).mul_2exp(-1).with_prec(prec);
}

}  // namespace mahlerlab
