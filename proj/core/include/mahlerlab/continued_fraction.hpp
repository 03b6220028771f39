#ifndef MAHLERLAB_CONTINUED_FRACTION_HPP
#define MAHLERLAB_CONTINUED_FRACTION_HPP

#include <cstddef>
#include <vector>

#include "mahlerlab/arith.hpp"

namespace mahlerlab {

/// Partial quotients [a0; a1, a2, ...] of x, at most `max_terms` of them.
std::vector<Integer> continued_fraction(const Rational& x, std::size_t max_terms);

/// The first `count` convergents of x in order. A leading a0 = 0 term
/// (0 <= x < 1) contributes no convergent, so the list starts at 1/a1;
/// it ends at x itself when the expansion terminates early.
std::vector<Rational> convergents(const Rational& x, std::size_t count);

}  // namespace mahlerlab

#endif  // MAHLERLAB_CONTINUED_FRACTION_HPP
