#ifndef MAHLERLAB_POLYNOMIAL_HPP
#define MAHLERLAB_POLYNOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"

namespace mahlerlab {

/// Integer polynomial sum_k c[k] X^k. The coefficient vector may carry
/// trailing zeros (a search over deg <= n keeps n + 1 slots); the degree is
/// the index of the last nonzero entry.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coefficients);
  IntegerPolynomial(std::initializer_list<long> coefficients);

  const std::vector<Integer>& coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const Integer& operator[](std::size_t k) const { return c_[k]; }

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  /// max |c[k]|.
  Integer height() const;

  IntegerPolynomial operator-() const;

  Rational evaluate(const Rational& x) const;
  Ball evaluate(const Ball& x) const;

  /// "-1 + 2*X + X^3"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
  /// Lexicographic in ascending-degree order.
  friend std::strong_ordering operator<=>(const IntegerPolynomial& a, const IntegerPolynomial& b);

 private:
  std::vector<Integer> c_;
};

}  // namespace mahlerlab

#endif  // MAHLERLAB_POLYNOMIAL_HPP
