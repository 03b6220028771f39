#include "mahlerlab/ball.hpp"

#include <algorithm>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/format.hpp"

namespace mahlerlab {
namespace {

Dyadic rad_up(const Dyadic& r) { return r.rounded(kRadiusBits, Round::kCeil); }

// Bound on the error of truncating a value whose rounded form is `r` to
// `prec` bits: two units in the last place.
Dyadic truncation_error(const Dyadic& r, Precision prec) {
  if (r.is_zero()) return Dyadic();
  return Dyadic::pow2(r.ulp_exponent(prec) + 1);
}

}  // namespace

Ball::Ball(long value, Precision prec) : mid_(value), prec_(prec) {}

Ball::Ball(const Dyadic& mid, const Dyadic& rad, Precision prec)
    : mid_(mid), rad_(rad_up(rad.abs())), prec_(prec) {}

Ball Ball::exact(const Integer& value, Precision prec) {
  return Ball(Dyadic(value), Dyadic(), prec);
}

Ball Ball::from_rational(const Rational& value, Precision prec) {
  const Integer& den = value.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    long shift = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    return Ball(Dyadic(value.get_num(), -shift), Dyadic(), prec);
  }
  Dyadic mid = Dyadic::from_rational(value, prec, Round::kTruncate);
  return Ball(mid, truncation_error(mid, prec), prec);
}

Ball Ball::from_interval(const Dyadic& lo, const Dyadic& hi, Precision prec) {
  if (hi < lo) return from_interval(hi, lo, prec);
  Dyadic mid = (lo + hi).ldexp(-1);
  Ball b(mid, (hi - lo).ldexp(-1), prec);
  b.round_mid();
  return b;
}

Ball Ball::from_interval(const Rational& lo, const Rational& hi,
                         Precision prec) {
  const Precision wp = prec + 8;
  Dyadic l = Dyadic::from_rational(lo, wp, Round::kFloor);
  Dyadic h = Dyadic::from_rational(hi, wp, Round::kCeil);
  return from_interval(l, h, prec);
}

Ball Ball::with_prec(Precision prec) const {
  Ball b = *this;
  b.prec_ = prec;
  b.round_mid();
  return b;
}

void Ball::round_mid() {
  if (mid_.bits() <= prec_) return;
  Dyadic r = mid_.rounded(prec_, Round::kTruncate);
  rad_ = rad_up(rad_ + (mid_ - r).abs());
  mid_ = r;
}

Dyadic Ball::mig() const {
  Dyadic m = mid_.abs() - rad_;
  return m.sign() > 0 ? m : Dyadic();
}

bool Ball::contains(const Dyadic& x) const { return (x - mid_).abs() <= rad_; }

bool Ball::contains(const Rational& x) const {
  Rational d = ::abs(Rational(x - mid_.to_rational()));
  return d <= rad_.to_rational();
}

bool Ball::contains(const Ball& other) const {
  return lower() <= other.lower() && other.upper() <= upper();
}

bool Ball::overlaps(const Ball& other) const {
  return !(upper() < other.lower() || other.upper() < lower());
}

Ball& Ball::add_error(const Dyadic& err) {
  rad_ = rad_up(rad_ + err.abs());
  return *this;
}

Ball Ball::operator-() const {
  Ball b = *this;
  b.mid_ = -b.mid_;
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(a.mid_ + b.mid_, a.rad_ + b.rad_, std::max(a.prec_, b.prec_));
  r.round_mid();
  return r;
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
  Dyadic rad;
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    rad = a.mid_.abs() * b.rad_ + b.mid_.abs() * a.rad_ + a.rad_ * b.rad_;
  }
  Ball r(a.mid_ * b.mid_, rad, std::max(a.prec_, b.prec_));
  r.round_mid();
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) throw DomainError("division by a ball containing zero");
  const Precision prec = std::max(a.prec_, b.prec_);
  Dyadic q = Dyadic::quotient(a.mid_, b.mid_, prec, Round::kTruncate);
  Dyadic err = truncation_error(q, prec);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    // |a/b - am/bm| <= (ra + |am/bm| rb) / (|bm| - rb)
    Dyadic qbound = q.abs() + err;
    Dyadic num = a.rad_ + (qbound * b.rad_).rounded(kRadiusBits, Round::kCeil);
    Dyadic den = (b.mid_.abs() - b.rad_).rounded(kRadiusBits, Round::kFloor);
    err = err + Dyadic::quotient(num, den, kRadiusBits, Round::kCeil);
  }
  return Ball(q, err, prec);
}

Ball Ball::mul_2exp(long shift) const {
  Ball b = *this;
  b.mid_ = b.mid_.ldexp(shift);
  b.rad_ = b.rad_.ldexp(shift);
  return b;
}

Ball Ball::abs() const {
  if (!contains_zero()) return mid_.sign() < 0 ? -*this : *this;
  Dyadic hi = mag();
  return from_interval(Dyadic(), hi, prec_);
}

Ball Ball::sqr() const {
  if (contains_zero()) {
    Dyadic m = mag();
    return from_interval(Dyadic(), m * m, prec_);
  }
  return *this * *this;
}

Ball Ball::sqrt() const {
  if (is_negative()) throw DomainError("square root of a negative ball");
  if (!is_positive() && !is_exact()) {
    throw Undecided("square root of a ball straddling zero");
  }
  return sqrt_nonnegative();
}

Ball Ball::sqrt_nonnegative() const {
  if (!is_positive()) {
    Dyadic hi = upper();
    if (hi.sign() <= 0) return Ball(Dyadic(), Dyadic(), prec_);
    Dyadic s = Dyadic::sqrt(hi, kRadiusBits, Round::kCeil);
    return from_interval(Dyadic(), s, prec_);
  }
  Dyadic s = Dyadic::sqrt(mid_, prec_, Round::kTruncate);
  Dyadic err = truncation_error(s, prec_);
  if (!rad_.is_zero()) {
    // |sqrt(x) - sqrt(m)| <= r / (2 sqrt(m - r))
    Dyadic lo = lower().rounded(kRadiusBits, Round::kFloor);
    Dyadic root_lo = Dyadic::sqrt(lo, kRadiusBits, Round::kFloor);
    err = err + Dyadic::quotient(rad_, root_lo.ldexp(1), kRadiusBits, Round::kCeil);
  }
  return Ball(s, err, prec_);
}

Ball Ball::hull(const Ball& a, const Ball& b) {
  return from_interval(min(a.lower(), b.lower()), max(a.upper(), b.upper()),
                       std::max(a.prec_, b.prec_));
}

std::string Ball::to_string() const {
  const int digits = decimal_digits_for(prec_);
  DecimalText m = to_scientific(mid_.to_rational(), digits, Round::kTruncate);
  Rational radius = rad_.to_rational() + ::abs(Rational(m.value - mid_.to_rational()));
  std::string r = sgn(radius) == 0 ? std::string("0")
                                   : to_scientific(radius, 3, Round::kCeil).text;
  return m.text + " ± " + r + " [" + std::to_string(prec_) + " bits]";
}

Dyadic accuracy_target(const Ball& b, Precision bits) {
  return max(Dyadic(1), b.mid().abs()).ldexp(-bits);
}

bool meets_accuracy(const Ball& b, Precision bits) {
  return b.rad() <= accuracy_target(b, bits);
}

Sign certify_sign(const Ball& b) {
  if (b.is_positive()) return Sign::kPositive;
  if (b.is_negative()) return Sign::kNegative;
  return Sign::kContainsZero;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::kPositive:
      return "Positive";
    case Sign::kNegative:
      return "Negative";
    case Sign::kContainsZero:
      break;
  }
  return "ContainsZero";
}

}  // namespace mahlerlab
