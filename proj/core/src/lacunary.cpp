#include "mahlerlab/lacunary.hpp"

#include <algorithm>
#include <cmath>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

// Lower bound for log2(base).
double log2_floor(long base) { return std::floor(std::log2(static_cast<double>(base))); }

Rational power_inverse(long base, unsigned long exponent) {
  return Rational(Integer(1), ipow(base, exponent));
}

}  // namespace

LacunaryNumber::LacunaryNumber(long base, std::vector<unsigned> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw InvalidArgument("lacunary base must be at least 2");
  if (digits_.empty()) throw InvalidArgument("lacunary digit period is empty");
  for (unsigned d : digits_) {
    if (static_cast<long>(d) >= base_) {
      throw InvalidArgument("lacunary digit " + std::to_string(d) +
                            " is not below the base");
    }
    max_digit_ = std::max(max_digit_, d);
  }
  if (max_digit_ == 0) throw InvalidArgument("lacunary digit period is all zero");
}

LacunaryNumber LacunaryNumber::liouville(long base) { return LacunaryNumber(base, {1}); }

Truncation truncate(const LacunaryNumber& number, unsigned depth) {
  if (depth > kMaxTruncationDepth) throw CapExceeded("truncation depth too large");
  Truncation t;
  t.depth = depth;
  if (depth == 0) {
    t.p = 0;
    t.q = 1;
  } else {
    const unsigned long top = factorial(depth);
    t.q = ipow(number.base(), top);
    t.p = 0;
    for (unsigned k = 1; k <= depth; ++k) {
      unsigned a = number.digit(k);
      if (a != 0) t.p += Integer(a) * ipow(number.base(), top - factorial(k));
    }
  }
  // Terms beyond depth m shrink at least geometrically with ratio 1/base,
  // so the tail is at most twice its largest possible first term.
  t.tail_bound = Rational(2 * number.max_digit()) *
                 power_inverse(number.base(), factorial(depth + 1));
  return t;
}

Ball tail_ball(const LacunaryNumber& number, unsigned depth, Precision prec) {
  unsigned first = depth + 1;
  while (number.digit(first) == 0) ++first;
  if (first > kMaxTruncationDepth) throw CapExceeded("tail lies beyond supported depth");
  const double bits_per_digit = log2_floor(number.base());
  // Smallest end index whose remaining tail is 2^-(prec+4) relative to the
  // first nonzero term.
  unsigned last = first;
  while (static_cast<double>(factorial(last + 1) - factorial(first)) * bits_per_digit <
         static_cast<double>(prec + 8)) {
    ++last;
    if (last >= kMaxTruncationDepth) throw Undecided("tail enclosure needs excessive depth");
  }
  Truncation end = truncate(number, last);
  Truncation start = truncate(number, depth);
  // Exact partial tail from depth+1 to last, plus [0, tail_bound(last)].
  Rational partial = end.value() - start.value();
  Rational hi = partial + end.tail_bound;
  return Ball::from_interval(partial, hi, prec);
}

Ball to_ball(const LacunaryNumber& number, Precision prec) {
  const Rational target(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(prec + 1));
  unsigned depth = 0;
  Truncation t = truncate(number, depth);
  while (t.tail_bound > target) {
    ++depth;
    if (depth >= kMaxTruncationDepth) throw Undecided("lacunary enclosure needs excessive depth");
    t = truncate(number, depth);
  }
  const Rational value = t.value();
  return Ball::from_interval(value, value + t.tail_bound, prec + 4);
}

}  // namespace mahlerlab
