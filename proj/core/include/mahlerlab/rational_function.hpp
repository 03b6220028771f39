#ifndef MAHLERLAB_RATIONAL_FUNCTION_HPP
#define MAHLERLAB_RATIONAL_FUNCTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"

namespace mahlerlab {

/// N(t)/D(t) with rational coefficients, stored normalized: N and D
/// coprime, integer coefficients with no common content, leading
/// coefficient of D positive.
class RationalFunction {
 public:
  /// Coefficients in ascending degree. Throws InvalidArgument when the
  /// denominator is zero.
  RationalFunction(const std::vector<Rational>& numerator, const std::vector<Rational>& denominator);

  static RationalFunction identity();
  /// (t^2 + 1)/(2t), so cosh(a) = R(e^a).
  static RationalFunction cosh_transform();
  /// (t^2 - 1)/(2t), so sinh(a) = R(e^a).
  static RationalFunction sinh_transform();

  const std::vector<Integer>& numerator() const { return num_; }
  const std::vector<Integer>& denominator() const { return den_; }
  bool is_identity() const;

  /// Exact value; PoleProximity when D(t) = 0.
  Rational operator()(const Rational& t) const;

  /// "(t^2 + 1)/(2*t)"; "t" for the identity.
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  std::vector<Integer> num_;
  std::vector<Integer> den_;
};

/// Accepts "identity", "cosh", "sinh" or "[n0,n1,...]/[d0,d1,...]" with
/// ascending integer or p/q coefficients. Throws ParseError.
RationalFunction parse_rational_function(std::string_view text);

/// Enclosure of R(t). Exact (as far as a ball allows) when t is exact;
/// the identity returns t unchanged. PoleProximity when D(t) may vanish.
Ball apply_rational_function(const RationalFunction& r, const Ball& t, Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_RATIONAL_FUNCTION_HPP
