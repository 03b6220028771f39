#include "mahlerlab/continued_fraction.hpp"

#include "mahlerlab/errors.hpp"

namespace mahlerlab {

std::vector<Integer> continued_fraction(const Rational& x, std::size_t max_terms) {
  std::vector<Integer> terms;
  Integer num = x.get_num();
  Integer den = x.get_den();
  while (terms.size() < max_terms && den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    terms.push_back(a);
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  return terms;
}

std::vector<Rational> convergents(const Rational& x, std::size_t count) {
  if (count == 0) throw InvalidArgument("convergent count must be positive");
  std::vector<Rational> out;
  Integer p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Integer p_prev2 = 0, q_prev2 = 1;
  bool first = true;
  // One extra term so a skipped a0 = 0 does not shorten the list.
  for (const Integer& a : continued_fraction(x, count + 1)) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    const bool skip = first && a == 0;
    first = false;
    if (skip) continue;
    out.push_back(make_rational(p, q));
    if (out.size() == count) break;
  }
  return out;
}

}  // namespace mahlerlab
