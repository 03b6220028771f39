#include "mahlerlab/bivariate.hpp"

#include <algorithm>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

std::string coefficient_text(const GaussianInteger& c, bool leading, bool unit_ok) {
  // Returns the signed coefficient; "+ 4", "- 2", "+ (1+2i)".
  std::string out;
  if (sgn(c.im) == 0) {
    const bool neg = sgn(c.re) < 0;
    Integer mag = abs(c.re);
    out = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (!(unit_ok && mag == 1)) out += mag.get_str();
    return out;
  }
  if (sgn(c.re) == 0) {
    const bool neg = sgn(c.im) < 0;
    Integer mag = abs(c.im);
    out = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += (mag == 1 ? std::string() : mag.get_str()) + "i";
    return out;
  }
  out = leading ? "" : " + ";
  out += "(" + c.re.get_str() + (sgn(c.im) < 0 ? "-" : "+") + Integer(abs(c.im)).get_str() + "i)";
  return out;
}

}  // namespace

BivariatePolynomial::BivariatePolynomial(std::initializer_list<Term> terms) {
  for (const Term& t : terms) {
    if (grid_.size() <= t.x_degree) grid_.resize(t.x_degree + 1);
    auto& row = grid_[t.x_degree];
    if (row.size() <= t.y_degree) row.resize(t.y_degree + 1);
    row[t.y_degree].re += t.re;
    row[t.y_degree].im += t.im;
  }
  trim();
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<GaussianInteger>> grid) : grid_(std::move(grid)) {
  trim();
}

void BivariatePolynomial::trim() {
  for (auto& row : grid_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

GaussianInteger BivariatePolynomial::coefficient(unsigned j, unsigned k) const {
  if (j >= grid_.size() || k >= grid_[j].size()) return {};
  return grid_[j][k];
}

bool BivariatePolynomial::is_zero() const { return grid_.empty(); }

unsigned BivariatePolynomial::y_degree() const {
  std::size_t d = 0;
  for (const auto& row : grid_) d = std::max(d, row.size());
  return d == 0 ? 0 : static_cast<unsigned>(d - 1);
}

std::string BivariatePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = static_cast<int>(y_degree()); k >= 0; --k) {
    for (int j = static_cast<int>(x_degree()); j >= 0; --j) {
      GaussianInteger c = coefficient(j, k);
      if (c.is_zero()) continue;
      std::string mono;
      if (j > 0) mono += j == 1 ? "X" : "X^" + std::to_string(j);
      if (k > 0) mono += std::string(mono.empty() ? "" : "*") + (k == 1 ? "Y" : "Y^" + std::to_string(k));
      std::string coef = coefficient_text(c, out.empty(), !mono.empty());
      const bool bare = coef.empty() || coef.back() == ' ' || coef == "-";
      out += coef;
      if (!mono.empty()) out += bare ? mono : "*" + mono;
    }
  }
  return out;
}

ComplexBall dependence_residual(const BivariatePolynomial& p, const ComplexBall& x, const ComplexBall& y) {
  if (p.is_zero()) throw InvalidArgument("dependence polynomial is identically zero");
  const Precision prec = std::max(x.prec(), y.prec());
  auto coeff = [&](unsigned j, unsigned k) {
    GaussianInteger c = p.coefficient(j, k);
    return ComplexBall(Ball::exact(c.re, prec), Ball::exact(c.im, prec));
  };
  ComplexBall acc(Ball(0, prec), Ball(0, prec));
  for (int k = static_cast<int>(p.y_degree()); k >= 0; --k) {
    ComplexBall ck(Ball(0, prec), Ball(0, prec));
    for (int j = static_cast<int>(p.x_degree()); j >= 0; --j) ck = ck * x + coeff(j, k);
    acc = acc * y + ck;
  }
  return acc;
}

}  // namespace mahlerlab
