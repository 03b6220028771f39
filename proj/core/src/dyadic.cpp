#include "mahlerlab/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace mahlerlab {
namespace {

// Shifts m right by `shift` bits with the requested rounding direction.
Integer shift_right(const Integer& m, long shift, Round mode) {
  Integer q;
  switch (mode) {
    case Round::kFloor:
      mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      break;
    case Round::kCeil:
      mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      break;
    case Round::kTruncate:
      mpz_tdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      break;
  }
  return q;
}

Integer shift_left(const Integer& m, long shift) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), shift);
  return r;
}

Integer divide(const Integer& a, const Integer& b, Round mode) {
  Integer q;
  switch (mode) {
    case Round::kFloor:
      mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      break;
    case Round::kCeil:
      mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      break;
    case Round::kTruncate:
      mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      break;
  }
  return q;
}

}  // namespace

Dyadic::Dyadic(long value) : mantissa_(value), exponent_(0) { normalize(); }

Dyadic::Dyadic(const Integer& mantissa, long exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

Dyadic Dyadic::pow2(long exponent) { return Dyadic(Integer(1), exponent); }

void Dyadic::normalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  auto tz = static_cast<long>(mpz_scan1(mantissa_.get_mpz_t(), 0));
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += tz;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  r.mantissa_ = ::abs(r.mantissa_);
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ == b.exponent_) {
    return Dyadic(a.mantissa_ + b.mantissa_, a.exponent_);
  }
  if (a.exponent_ < b.exponent_) {
    return Dyadic(a.mantissa_ + shift_left(b.mantissa_, b.exponent_ - a.exponent_),
                  a.exponent_);
  }
  return Dyadic(shift_left(a.mantissa_, a.exponent_ - b.exponent_) + b.mantissa_,
                b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  // Product of odd mantissas is odd, so no renormalization is needed.
  Dyadic r;
  r.mantissa_ = a.mantissa_ * b.mantissa_;
  r.exponent_ = a.exponent_ + b.exponent_;
  return r;
}

Dyadic Dyadic::ldexp(long shift) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exponent_ += shift;
  return r;
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic Dyadic::rounded(Precision prec, Round mode) const {
  if (prec < 1) throw std::invalid_argument("precision must be positive");
  long excess = bits() - prec;
  if (excess <= 0) return *this;
  return Dyadic(shift_right(mantissa_, excess, mode), exponent_ + excess);
}

Dyadic Dyadic::rounded_to_exponent(long exponent, Round mode) const {
  if (is_zero() || exponent_ >= exponent) return *this;
  return Dyadic(shift_right(mantissa_, exponent - exponent_, mode), exponent);
}

Dyadic Dyadic::from_rational(const Rational& x, Precision prec, Round mode) {
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (sgn(num) == 0) return Dyadic();
  // Scale so that the integer quotient carries at least prec + 1 bits.
  long shift = prec + 1 - (bit_length(num) - bit_length(den));
  Integer q = shift >= 0 ? divide(shift_left(num, shift), den, mode)
                         : divide(num, shift_left(den, -shift), mode);
  return Dyadic(q, -shift).rounded(prec, mode);
}

Dyadic Dyadic::quotient(const Dyadic& a, const Dyadic& b, Precision prec,
                        Round mode) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Dyadic();
  long shift = prec + 1 - (a.bits() - b.bits());
  Integer num = a.mantissa_;
  Integer den = b.mantissa_;
  if (shift >= 0) {
    num = shift_left(num, shift);
  } else {
    den = shift_left(den, -shift);
  }
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  Integer q = divide(num, den, mode);
  return Dyadic(q, a.exponent_ - b.exponent_ - shift).rounded(prec, mode);
}

Dyadic Dyadic::sqrt(const Dyadic& x, Precision prec, Round mode) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative dyadic");
  if (x.is_zero()) return Dyadic();
  // Bring the mantissa to at least 2*prec + 2 bits with an even exponent.
  long shift = std::max<long>(0, 2 * prec + 2 - x.bits());
  if ((x.exponent_ - shift) % 2 != 0) ++shift;
  Integer m = shift_left(x.mantissa_, shift);
  Integer r = isqrt(m);
  bool exact = r * r == m;
  if (!exact && mode == Round::kCeil) r += 1;
  return Dyadic(r, (x.exponent_ - shift) / 2).rounded(prec, mode);
}

Rational Dyadic::to_rational() const {
  Rational r;
  if (exponent_ >= 0) {
    r = Rational(shift_left(mantissa_, exponent_));
  } else {
    r = Rational(mantissa_, shift_left(Integer(1), -exponent_));
    r.canonicalize();
  }
  return r;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long e = 0;
  double m = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
  long total = e + exponent_;
  if (total > 2000) return std::copysign(HUGE_VAL, m);
  if (total < -2000) return std::copysign(0.0, m);
  return std::ldexp(m, static_cast<int>(total));
}

Integer Dyadic::floor() const {
  if (exponent_ >= 0) return shift_left(mantissa_, exponent_);
  return shift_right(mantissa_, -exponent_, Round::kFloor);
}

Integer Dyadic::ceil() const {
  if (exponent_ >= 0) return shift_left(mantissa_, exponent_);
  return shift_right(mantissa_, -exponent_, Round::kCeil);
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace mahlerlab
