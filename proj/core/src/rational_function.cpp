#include "mahlerlab/rational_function.hpp"

#include <algorithm>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder of a by b over Q (b nonzero, trimmed).
QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact quotient a / b over Q.
QPoly poly_div(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return q;
}

Rational horner(const std::vector<Integer>& c, const Rational& t) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Ball horner(const std::vector<Integer>& c, const Ball& t, Precision prec) {
  Ball acc(0, prec);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + Ball::exact(*it, prec);
  return acc;
}

std::string poly_text(const std::vector<Integer>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const bool neg = sgn(c[k]) < 0;
    Integer mag = abs(c[k]);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

RationalFunction::RationalFunction(const std::vector<Rational>& numerator, const std::vector<Rational>& denominator) {
  QPoly n = numerator, d = denominator;
  trim(n);
  trim(d);
  if (d.empty()) throw InvalidArgument("rational function denominator is zero");
  if (n.empty()) {
    num_ = {};
    den_ = {1};
    return;
  }
  QPoly g = poly_gcd(n, d);
  n = poly_div(n, g);
  d = poly_div(d, g);
  // Clear denominators, remove content, make D's leading coefficient positive.
  Integer l = 1;
  for (const Rational& c : n) l = lcm(l, Integer(c.get_den()));
  for (const Rational& c : d) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> ni, di;
  Integer content = 0;
  for (const Rational& c : n) {
    ni.push_back(Integer(c * l));
    content = gcd(content, ni.back());
  }
  for (const Rational& c : d) {
    di.push_back(Integer(c * l));
    content = gcd(content, di.back());
  }
  if (sgn(di.back()) < 0) content = -content;
  for (Integer& c : ni) c /= content;
  for (Integer& c : di) c /= content;
  num_ = std::move(ni);
  den_ = std::move(di);
}

RationalFunction RationalFunction::identity() { return RationalFunction({0, 1}, {1}); }
RationalFunction RationalFunction::cosh_transform() { return RationalFunction({1, 0, 1}, {0, 2}); }
RationalFunction RationalFunction::sinh_transform() { return RationalFunction({-1, 0, 1}, {0, 2}); }

bool RationalFunction::is_identity() const {
  return num_.size() == 2 && sgn(num_[0]) == 0 && num_[1] == 1 && den_.size() == 1 && den_[0] == 1;
}

Rational RationalFunction::operator()(const Rational& t) const {
  Rational d = horner(den_, t);
  if (sgn(d) == 0) throw PoleProximity("t = " + mahlerlab::to_string(t) + " is a pole of " + to_string());
  return horner(num_, t) / d;
}

std::string RationalFunction::to_string() const {
  const std::string n = poly_text(num_);
  if (den_.size() == 1 && den_[0] == 1) return n;
  const std::string d = poly_text(den_);
  const std::string left = n.find(' ') == std::string::npos ? n : "(" + n + ")";
  const std::string right = d.find_first_of(" *") == std::string::npos ? d : "(" + d + ")";
  return left + "/" + right;
}

RationalFunction parse_rational_function(std::string_view text) {
  if (text == "identity") return RationalFunction::identity();
  if (text == "cosh") return RationalFunction::cosh_transform();
  if (text == "sinh") return RationalFunction::sinh_transform();
  const std::size_t split = text.find("]/[");
  if (text.empty() || text.front() != '[' || text.back() != ']' || split == std::string_view::npos) {
    throw ParseError("expected identity, cosh, sinh or [n0,n1,...]/[d0,d1,...]", 0);
  }
  auto parse_list = [&](std::size_t begin, std::size_t end) {
    std::vector<Rational> out;
    std::size_t pos = begin;
    while (pos <= end) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos || comma > end) comma = end;
      std::string item(text.substr(pos, comma - pos));
      std::size_t slash = item.find('/');
      Integer p, q = 1;
      bool ok = parse_integer(item.substr(0, slash), p);
      if (ok && slash != std::string::npos) ok = parse_integer(item.substr(slash + 1), q) && sgn(q) > 0;
      if (!ok) throw ParseError("bad coefficient '" + item + "'", pos);
      out.push_back(make_rational(p, q));
      pos = comma + 1;
    }
    return out;
  };
  std::vector<Rational> n = parse_list(1, split);
  std::vector<Rational> d = parse_list(split + 3, text.size() - 1);
  try {
    return RationalFunction(n, d);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), split + 2);
  }
}

Ball apply_rational_function(const RationalFunction& r, const Ball& t, Precision prec) {
  if (r.is_identity()) return t;
  if (t.is_exact()) {
    return Ball::from_rational(r(t.mid().to_rational()), prec);
  }
  const Precision wp = prec + 16;
  Ball d = horner(r.denominator(), t, wp);
  if (d.contains_zero()) throw PoleProximity("denominator of " + r.to_string() + " may vanish on " + t.to_string());
  return (horner(r.numerator(), t, wp) / d).with_prec(prec);
}

}  // namespace mahlerlab
