#include "mahlerlab/polynomial.hpp"

namespace mahlerlab {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) c_.emplace_back(c);
}

int IntegerPolynomial::degree() const {
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  }
  return -1;
}

Integer IntegerPolynomial::height() const {
  Integer h = 0;
  for (const Integer& c : c_) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<Integer> c;
  c.reserve(c_.size());
  for (const Integer& v : c_) c.push_back(-v);
  return IntegerPolynomial(std::move(c));
}

Rational IntegerPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Ball IntegerPolynomial::evaluate(const Ball& x) const {
  Ball acc(0, x.prec());
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + Ball::exact(c_[k], x.prec());
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Integer& c = c_[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::strong_ordering operator<=>(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.c_.size() <=> b.c_.size();
}

}  // namespace mahlerlab
