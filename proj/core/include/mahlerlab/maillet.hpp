#ifndef MAHLERLAB_MAILLET_HPP
#define MAHLERLAB_MAILLET_HPP

#include <optional>
#include <vector>

#include "mahlerlab/lacunary.hpp"
#include "mahlerlab/liouville.hpp"
#include "mahlerlab/rational_function.hpp"

namespace mahlerlab {

/// One depth of the image experiment for y = R(L).
struct MailletRow {
  unsigned depth = 0;
  /// Exponent of R(T_m) itself, T_m the depth-m truncation; absent when
  /// R(T_m) is an integer.
  std::optional<ExponentMeasurement> image;
  /// Best exponent among convergents of the depth-m approximation that are
  /// certified convergents of y and whose exponent is resolved.
  std::optional<ExponentMeasurement> best;
  std::size_t valid_convergents = 0;
  Precision working_prec = 0;
};

/// For each depth m: encloses y = R(L) from [T_m, T_m + tail], takes the
/// convergents p/q of the enclosure midpoint x, keeps those with
/// |x - p/q| + radius < 1/(2 q^2) (then p/q is a convergent of y), and
/// measures -log|y - p/q| / log q against a much finer enclosure of y.
/// The working precision is max(prec, 64 + 2 log2 q_max), q_max the largest
/// denominator the validity test can accept.
/// Throws InvalidArgument for an empty depth list or depth outside
/// [1, kMaxTruncationDepth - 1] and PoleProximity near a pole of R.
std::vector<MailletRow> image_exponent_experiment(const RationalFunction& r, const LacunaryNumber& number,
                                                  const std::vector<unsigned>& depths,
                                                  Precision prec = kDefaultPrecision);

}  // namespace mahlerlab

#endif  // MAHLERLAB_MAILLET_HPP
