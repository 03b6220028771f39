#include "mahlerlab/maillet.hpp"

#include "mahlerlab/continued_fraction.hpp"
#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

// log2 of 1/x for a positive rational, rounded up.
Precision neg_log2_ceil(const Rational& x) {
  const long bits = bit_length(x.get_den()) - bit_length(x.get_num()) + 1;
  return static_cast<Precision>(std::max(1L, bits));
}

// Exponent of p/q against a fine enclosure of y; nullopt when unresolved.
std::optional<ExponentMeasurement> measure(const Ball& y, const Rational& c, Precision prec) {
  const Integer& q = c.get_den();
  if (q <= 1) return std::nullopt;
  Ball d = (y - Ball::from_rational(c, y.prec())).abs();
  if (d.contains_zero()) return std::nullopt;
  Ball e = exponent_of_distance(d, q, prec);
  if (e.rad() > Dyadic::pow2(-32)) return std::nullopt;
  return ExponentMeasurement{c.get_num(), q, e};
}

}  // namespace

std::vector<MailletRow> image_exponent_experiment(const RationalFunction& r, const LacunaryNumber& number,
                                                  const std::vector<unsigned>& depths, Precision prec) {
  if (depths.empty()) throw InvalidArgument("depth list is empty");
  const NumberSpec spec = number;
  std::vector<MailletRow> rows;
  for (unsigned m : depths) {
    if (m < 1 || m + 1 > kMaxTruncationDepth) {
      throw InvalidArgument("depth must lie in [1, " + std::to_string(kMaxTruncationDepth - 1) + "]");
    }
    MailletRow row;
    row.depth = m;
    Truncation t = truncate(number, m);
    const Rational tm = t.value();
    const Rational image = r(tm);  // PoleProximity at a pole

    // Accepting q needs 2 q^2 * radius < 1, so 2 log2 q_max ~ log2(1/tail).
    const Precision wp = std::max(prec, 64 + neg_log2_ceil(t.tail_bound));
    row.working_prec = wp;
    Ball coarse = apply_rational_function(r, Ball::from_interval(tm, Rational(tm + t.tail_bound), wp), wp);
    // Distances down to about the tail need wp more bits to be resolved.
    const Precision fine_prec = 2 * wp + prec;
    Ball fine = apply_rational_function(r, to_ball(spec, fine_prec), fine_prec);

    row.image = measure(fine, image, prec);

    const Rational x = coarse.mid().to_rational();
    const Rational rad = coarse.rad().to_rational();
    for (const Rational& c : convergents(x, 1u << 16)) {
      const Integer& q = c.get_den();
      Rational slack = abs(Rational(x - c)) + rad;
      if (2 * slack * q * q >= 1) continue;
      ++row.valid_convergents;
      std::optional<ExponentMeasurement> e = measure(fine, c, prec);
      if (!e) continue;
      if (!row.best || e->exponent.mid() > row.best->exponent.mid()) row.best = e;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mahlerlab
