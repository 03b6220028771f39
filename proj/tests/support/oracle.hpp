#ifndef MAHLERLAB_TEST_ORACLE_HPP
#define MAHLERLAB_TEST_ORACLE_HPP

// Reference values computed with MPFR, independent of the library's own
// series kernels. Only test code includes this.

#include <mpfr.h>

#include <string>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"
#include "mahlerlab/complex_ball.hpp"
#include "mahlerlab/functions.hpp"

namespace oracle {

using mahlerlab::Integer;
using mahlerlab::Rational;

class Real {
 public:
  explicit Real(long prec);
  Real(const Rational& value, long prec);
  Real(const Real& other);
  Real& operator=(const Real& other);
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  long prec() const { return mpfr_get_prec(value_); }

  /// Exact rational value of the stored binary float.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

struct Complex {
  Real re;
  Real im;
};

/// Principal value of f(x) for real rational x, accurate to about `prec`
/// bits; closed forms are used off the real domain.
Complex eval(mahlerlab::FunctionTag tag, const Rational& x, long prec);

Real pi(long prec);
Real log2(long prec);
Real e(long prec);

/// True if the ball meets [v - 2^(e-prec+2), v + 2^(e-prec+2)], i.e. it is
/// consistent with an oracle value carrying a few ulps of error.
bool consistent(const mahlerlab::Ball& b, const Real& v);
bool consistent(const mahlerlab::ComplexBall& b, const Complex& v);

}  // namespace oracle

#endif  // MAHLERLAB_TEST_ORACLE_HPP
