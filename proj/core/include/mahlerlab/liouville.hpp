#ifndef MAHLERLAB_LIOUVILLE_HPP
#define MAHLERLAB_LIOUVILLE_HPP

#include <string_view>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"
#include "mahlerlab/lacunary.hpp"
#include "mahlerlab/number_spec.hpp"

namespace mahlerlab {

/// Exact rational enclosure [lo, hi] of x - r.
struct DistanceInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// Successively tighter enclosures of x - r. Lacunary specs are refined by
/// truncation depth with exact rationals (no precision cap applies); other
/// inexact specs by doubling the ball precision up to `cap`.
class DistanceRefiner {
 public:
  DistanceRefiner(NumberSpec x, Rational r, Precision cap = kPrecisionCap);

  /// Produces the next enclosure; false once no further refinement exists.
  bool next(DistanceInterval& out);

 private:
  NumberSpec x_;
  Rational r_;
  Precision cap_;
  unsigned step_ = 0;
  bool done_ = false;
};

enum class WitnessStatus { kCertified, kRefuted, kUndecided };
enum class Inequality { kNone, kLower, kUpper };

std::string_view to_string(WitnessStatus s);
std::string_view to_string(Inequality i);

/// Outcome of checking 0 < |x - p/q| < q^-n.
struct WitnessCheck {
  WitnessStatus status = WitnessStatus::kUndecided;
  /// The inequality that fails when refuted.
  Inequality failed = Inequality::kNone;
  /// Enclosure of |x - p/q|.
  Ball distance;
  /// Enclosure of q^-n - |x - p/q|: positive when the upper inequality holds.
  Ball margin;
};

struct LiouvilleWitness {
  NumberSpec xi;
  unsigned n = 0;
  Integer p;
  Integer q;
  bool certified = false;
  Ball distance;
};

/// Throws InvalidArgument when q <= 1 or n == 0.
WitnessCheck verify_witness(const NumberSpec& x, unsigned n, const Integer& p, const Integer& q,
                            Precision prec = kDefaultPrecision);

/// Truncation witness with q = base^(m!), m = n (falling back to a few deeper
/// truncations when large digits spoil the tail bound). Throws Undecided if
/// none certifies.
LiouvilleWitness find_witness(const LacunaryNumber& number, unsigned n,
                              Precision prec = kDefaultPrecision);

struct ExponentMeasurement {
  Integer p;
  Integer q;
  /// Encloses -log|x - p/q| / log q.
  Ball exponent;
};

/// Throws InvalidArgument when q <= 1, DomainError when x = p/q exactly and
/// Undecided when the distance cannot be separated from zero.
ExponentMeasurement approximation_exponent(const NumberSpec& x, const Integer& p, const Integer& q,
                                           Precision prec = kDefaultPrecision);

/// -log(d) / log(q) for a positive distance enclosure d.
Ball exponent_of_distance(const Ball& distance, const Integer& q, Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_LIOUVILLE_HPP
