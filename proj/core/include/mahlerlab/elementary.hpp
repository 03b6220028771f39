#ifndef MAHLERLAB_ELEMENTARY_HPP
#define MAHLERLAB_ELEMENTARY_HPP

#include "mahlerlab/ball.hpp"

// Certified real elementary functions on balls.
//
// Each function evaluates the kernel at the exact midpoint with a
// truncated series plus an explicit remainder bound, then widens the result
// by a derivative bound times the input radius. `prec` is the target
// working precision of the result; callers that need a guaranteed output
// accuracy escalate it (see eval_fn).

namespace mahlerlab {

Ball pi_ball(Precision prec);
Ball ln2_ball(Precision prec);
Ball e_ball(Precision prec);

Ball exp(const Ball& x, Precision prec);

/// Natural logarithm; throws SingularInput if x contains 0 and DomainError
/// if x is negative.
Ball log(const Ball& x, Precision prec);

void sin_cos(const Ball& x, Precision prec, Ball& sin_out, Ball& cos_out);
Ball sin(const Ball& x, Precision prec);
Ball cos(const Ball& x, Precision prec);

/// Throws SingularInput when cos(x) may vanish.
Ball tan(const Ball& x, Precision prec);

Ball atan(const Ball& x, Precision prec);

/// Principal argument of x + iy in (-pi, pi]. Throws SingularInput at the
/// origin and Undecided when the ball straddles the negative real axis.
Ball atan2(const Ball& y, const Ball& x, Precision prec);

Ball sinh(const Ball& x, Precision prec);
Ball cosh(const Ball& x, Precision prec);
Ball tanh(const Ball& x, Precision prec);

/// Real arcsine for |x| < 1 (certified), computed as atan(x / sqrt(1-x^2)).
Ball asin(const Ball& x, Precision prec);

/// Real inverse hyperbolic functions on their real domains.
Ball asinh(const Ball& x, Precision prec);
Ball acosh(const Ball& x, Precision prec);
Ball atanh(const Ball& x, Precision prec);

/// Series kernels on a ball argument, exposed for constants and tests.
/// Both require |z| <= 1/2.
Ball atan_series(const Ball& z, Precision prec);
Ball atanh_series(const Ball& z, Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_ELEMENTARY_HPP
