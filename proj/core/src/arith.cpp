#include "mahlerlab/arith.hpp"

#include <cmath>
#include "mahlerlab/errors.hpp"

namespace mahlerlab {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer ipow(long base, unsigned long exponent) {
  return ipow(Integer(base), exponent);
}

unsigned long factorial(unsigned n) {
  if (n > 20) throw CapExceeded("factorial argument too large");
  unsigned long f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long bit_length(const Integer& n) {
  if (sgn(n) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

double log_abs(const Integer& n) {
  if (sgn(n) == 0) return -HUGE_VAL;
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const Rational& x) {
  return log_abs(x.get_num()) - log_abs(x.get_den());
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& x) { return x.get_str(10); }

bool parse_integer(const std::string& text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return out.set_str(text, 10) == 0;
}

}  // namespace mahlerlab
