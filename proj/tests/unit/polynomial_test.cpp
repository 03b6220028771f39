#include <gtest/gtest.h>

#include "mahlerlab/polynomial.hpp"

namespace mahlerlab {
namespace {

TEST(Polynomial, Basics) {
  IntegerPolynomial p({-1, 2, 0, 1});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.height(), 2);
  EXPECT_EQ(p.to_string(), "-1 + 2*X + X^3");
  EXPECT_EQ((-p).to_string(), "1 - 2*X - X^3");
  EXPECT_EQ(IntegerPolynomial({0, 0}).degree(), -1);
  EXPECT_TRUE(IntegerPolynomial({0, 0}).is_zero());
  EXPECT_EQ(IntegerPolynomial({0, 0}).to_string(), "0");
  EXPECT_EQ(IntegerPolynomial({3, 0, 0}).degree(), 0);
  EXPECT_EQ(p.evaluate(make_rational(1, 2)), make_rational(1, 8));
  Ball b = p.evaluate(Ball::from_rational(make_rational(1, 2), 64));
  EXPECT_TRUE(b.contains(make_rational(1, 8)));
}

TEST(Polynomial, Ordering) {
  EXPECT_LT(IntegerPolynomial({-1, 5}), IntegerPolynomial({0, -5}));
  EXPECT_LT(IntegerPolynomial({1, -1}), IntegerPolynomial({1, 0}));
  EXPECT_EQ(IntegerPolynomial({1, 2}), IntegerPolynomial({1, 2}));
}

}  // namespace
}  // namespace mahlerlab
