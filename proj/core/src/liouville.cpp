#include "mahlerlab/liouville.hpp"

#include "mahlerlab/elementary.hpp"
#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

Rational abs_min(const DistanceInterval& d) {
  if (sgn(d.lo) > 0) return d.lo;
  if (sgn(d.hi) < 0) return -d.hi;
  return 0;
}

Rational abs_max(const DistanceInterval& d) {
  Rational a = abs(d.lo);
  Rational b = abs(d.hi);
  return a < b ? b : a;
}

Ball abs_ball(const DistanceInterval& d, Precision prec) {
  return Ball::from_interval(abs_min(d), abs_max(d), prec);
}

void check_q(const Integer& q) {
  if (q <= 1) throw InvalidArgument("witness denominator must satisfy q > 1");
}

}  // namespace

DistanceRefiner::DistanceRefiner(NumberSpec x, Rational r, Precision cap)
    : x_(std::move(x)), r_(std::move(r)), cap_(cap) {}

bool DistanceRefiner::next(DistanceInterval& out) {
  if (done_) return false;
  const unsigned step = step_++;
  if (auto exact = exact_rational(x_)) {
    Rational d = *exact - r_;
    out = {d, d, true};
    done_ = true;
    return true;
  }
  if (const auto* lac = std::get_if<LacunaryNumber>(&x_)) {
    const unsigned depth = step + 1;
    if (depth > kMaxTruncationDepth) {
      done_ = true;
      return false;
    }
    Truncation t = truncate(*lac, depth);
    Rational d = t.value() - r_;
    out = {d, d + t.tail_bound, false};
    return true;
  }
  const Precision wp = Precision(64) << step;
  if (wp > cap_) {
    done_ = true;
    return false;
  }
  Ball b = to_ball(x_, wp);
  out = {b.lower().to_rational() - r_, b.upper().to_rational() - r_, false};
  return true;
}

std::string_view to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::kCertified:
      return "Certified";
    case WitnessStatus::kRefuted:
      return "Refuted";
    case WitnessStatus::kUndecided:
      break;
  }
  return "Undecided";
}

std::string_view to_string(Inequality i) {
  switch (i) {
    case Inequality::kLower:
      return "lower";
    case Inequality::kUpper:
      return "upper";
    case Inequality::kNone:
      break;
  }
  return "none";
}

WitnessCheck verify_witness(const NumberSpec& x, unsigned n, const Integer& p, const Integer& q,
                            Precision prec) {
  check_q(q);
  if (n == 0) throw InvalidArgument("witness level n must be positive");
  const Rational bound(Integer(1), ipow(q, n));
  DistanceRefiner refiner(x, make_rational(p, q));
  DistanceInterval d;
  WitnessCheck result;
  while (refiner.next(d)) {
    result.distance = abs_ball(d, prec);
    result.margin = Ball::from_interval(Rational(bound - abs_max(d)), Rational(bound - abs_min(d)), prec);
    const bool zero_possible = sgn(d.lo) <= 0 && sgn(d.hi) >= 0;
    if (d.exact && sgn(d.lo) == 0) {
      result.status = WitnessStatus::kRefuted;
      result.failed = Inequality::kLower;
      return result;
    }
    if (abs_min(d) >= bound) {
      result.status = WitnessStatus::kRefuted;
      result.failed = Inequality::kUpper;
      // On the boundary, one more refinement usually gives a strict margin.
      DistanceInterval finer;
      if (abs_min(d) == bound && refiner.next(finer) && abs_min(finer) > bound) {
        result.distance = abs_ball(finer, prec);
        result.margin = Ball::from_interval(Rational(bound - abs_max(finer)),
                                            Rational(bound - abs_min(finer)), prec);
      }
      return result;
    }
    if (!zero_possible && abs_max(d) < bound) {
      result.status = WitnessStatus::kCertified;
      return result;
    }
  }
  result.status = WitnessStatus::kUndecided;
  return result;
}

LiouvilleWitness find_witness(const LacunaryNumber& number, unsigned n, Precision prec) {
  if (n == 0) throw InvalidArgument("witness level n must be positive");
  const NumberSpec xi = number;
  for (unsigned m = n; m <= n + 3 && m <= kMaxTruncationDepth; ++m) {
    Truncation t = truncate(number, m);
    if (t.q <= 1) continue;
    WitnessCheck check = verify_witness(xi, n, t.p, t.q, prec);
    if (check.status == WitnessStatus::kCertified) {
      return {xi, n, t.p, t.q, true, check.distance};
    }
  }
  throw Undecided("no truncation witness certified for n = " + std::to_string(n));
}

Ball exponent_of_distance(const Ball& distance, const Integer& q, Precision prec) {
  const Precision wp = prec + 16;
  Ball num = log(distance.with_prec(wp), wp);
  Ball den = log(Ball::exact(q, wp), wp);
  return (-num / den).with_prec(prec);
}

ExponentMeasurement approximation_exponent(const NumberSpec& x, const Integer& p, const Integer& q,
                                           Precision prec) {
  check_q(q);
  DistanceRefiner refiner(x, make_rational(p, q));
  DistanceInterval d;
  bool separated = false;
  while (refiner.next(d)) {
    if (d.exact && sgn(d.lo) == 0) throw DomainError("distance |x - p/q| is zero");
    Rational lo = abs_min(d);
    if (sgn(lo) == 0) continue;
    separated = true;
    // Stop once the relative width is below 2^-(prec + 8).
    Rational width = abs_max(d) - lo;
    if (width * Rational(Integer(1) << static_cast<mp_bitcnt_t>(prec + 8)) <= lo) break;
  }
  if (!separated) throw Undecided("distance cannot be separated from zero");
  Ball dist = abs_ball(d, prec + 16);
  return {p, q, exponent_of_distance(dist, q, prec)};
}

}  // namespace mahlerlab
