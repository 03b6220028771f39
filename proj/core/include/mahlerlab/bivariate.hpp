#ifndef MAHLERLAB_BIVARIATE_HPP
#define MAHLERLAB_BIVARIATE_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/complex_ball.hpp"

namespace mahlerlab {

struct GaussianInteger {
  Integer re;
  Integer im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// Sum of c[j][k] X^j Y^k with Gaussian-integer coefficients.
class BivariatePolynomial {
 public:
  struct Term {
    unsigned x_degree;
    unsigned y_degree;
    long re;
    long im = 0;
  };

  BivariatePolynomial() = default;
  /// Repeated monomials are summed.
  BivariatePolynomial(std::initializer_list<Term> terms);
  explicit BivariatePolynomial(std::vector<std::vector<GaussianInteger>> grid);

  /// c[j][k], zero outside the support.
  GaussianInteger coefficient(unsigned j, unsigned k) const;
  bool is_zero() const;
  unsigned x_degree() const { return grid_.empty() ? 0 : static_cast<unsigned>(grid_.size() - 1); }
  unsigned y_degree() const;

  /// "Y^4 + 4*X^2*Y^2 - 2*Y^2 + 1"; terms by descending Y then X degree.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::vector<GaussianInteger>> grid_;  // grid_[j][k]
};

/// Enclosure of P(x, y): Horner in Y, each Y-coefficient a Horner
/// polynomial in x. Throws InvalidArgument for the zero polynomial.
ComplexBall dependence_residual(const BivariatePolynomial& p, const ComplexBall& x, const ComplexBall& y);

}  // namespace mahlerlab

#endif  // MAHLERLAB_BIVARIATE_HPP
