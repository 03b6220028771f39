#include <gtest/gtest.h>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/number_spec.hpp"
#include "oracle.hpp"

namespace mahlerlab {
namespace {

Rational q(long n, long d) { return make_rational(n, d); }

TEST(ParseNumber, GrammarCases) {
  NumberSpec a = parse_number("rational:1/2");
  ASSERT_TRUE(std::holds_alternative<ExactRational>(a));
  EXPECT_EQ(std::get<ExactRational>(a).value, q(1, 2));

  NumberSpec b = parse_number("liouville:10");
  ASSERT_TRUE(std::holds_alternative<LacunaryNumber>(b));
  EXPECT_EQ(std::get<LacunaryNumber>(b).base(), 10);
  EXPECT_TRUE(std::get<LacunaryNumber>(b).is_liouville_constant());

  NumberSpec c = parse_number("lacunary:3:1,0,2");
  const auto& l = std::get<LacunaryNumber>(c);
  EXPECT_EQ(l.digit(1), 1u);
  EXPECT_EQ(l.digit(2), 0u);
  EXPECT_EQ(l.digit(3), 2u);
  EXPECT_EQ(l.digit(4), 1u);

  EXPECT_EQ(std::get<SqrtRational>(parse_number("sqrt:2/1")).radicand, 2);
  EXPECT_EQ(std::get<SqrtRational>(parse_number("-sqrt:2/1")).sign, -1);
  EXPECT_EQ(std::get<NamedConstant>(parse_number("pi")).kind, NamedConstant::Kind::kPi);
  EXPECT_EQ(std::get<NamedConstant>(parse_number("e")).kind, NamedConstant::Kind::kE);
}

TEST(ParseNumber, ReportsErrorPositions) {
  try {
    parse_number("rational:1/0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
    EXPECT_NE(std::string(e.what()).find("zero denominator"), std::string::npos);
  }
  auto position_of = [](const char* text) -> long {
    try {
      parse_number(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of("rational:1/"), 11);
  EXPECT_EQ(position_of("liouville:1"), 10);
  EXPECT_EQ(position_of("lacunary:10:1,10"), 14);
  EXPECT_EQ(position_of("lacunary:10:0,0"), 15);
  EXPECT_EQ(position_of("sqrt:0/1"), 5);
  EXPECT_EQ(position_of("pie"), 2);
  EXPECT_EQ(position_of("Pi"), 0);
  EXPECT_EQ(position_of(""), 0);
  EXPECT_EQ(position_of("rational:-1/-2"), 12);
}

TEST(ParseNumber, RoundTrip) {
  for (const char* text : {"rational:-3/7", "rational:0/1", "liouville:2", "lacunary:10:1,2,0",
                           "sqrt:8/3", "-sqrt:1/4", "pi", "e", "liouville:10"}) {
    NumberSpec x = parse_number(text);
    EXPECT_EQ(to_string(x), text);
    EXPECT_EQ(parse_number(to_string(x)), x);
  }
  // Non-canonical input prints canonically and is still stable.
  NumberSpec r = parse_number("rational:6/4");
  EXPECT_EQ(to_string(r), "rational:3/2");
  EXPECT_EQ(to_string(parse_number("lacunary:10:1")), "liouville:10");
}

TEST(ToBall, ExactDyadicRational) {
  Ball b = to_ball(parse_number("rational:1/2"), 64);
  EXPECT_TRUE(b.is_exact());
  EXPECT_EQ(b.mid().to_rational(), q(1, 2));
  EXPECT_TRUE(to_ball(parse_number("rational:-5/8"), 2).is_exact());
  EXPECT_THROW(to_ball(parse_number("rational:1/2"), 1), InvalidArgument);
}

TEST(ToBall, LiouvilleConstant) {
  // Independent oracle: exact partial sum through k = 5; the remainder is
  // below 2 * 10^-720.
  Rational s = 0;
  for (unsigned k = 1; k <= 5; ++k) s += Rational(Integer(1), ipow(10, factorial(k)));
  Ball b = to_ball(parse_number("liouville:10"), 128);
  EXPECT_LE(b.rad(), Dyadic::pow2(-128));
  EXPECT_TRUE(b.contains(s));
  EXPECT_TRUE(b.contains(Rational(s + Rational(Integer(2), ipow(10, 720)))));
  EXPECT_EQ(b.to_string().substr(0, 14), "1.100010000000");
}

TEST(ToBall, SquareRootOfTwo) {
  Ball b = to_ball(parse_number("sqrt:2/1"), 64);
  EXPECT_LE(b.rad(), Dyadic::pow2(-63));
  // Long-division digits: floor(sqrt(2) * 10^30).
  Integer scaled = isqrt(Integer(2) * ipow(10, 60));
  Rational lo(scaled, ipow(10, 30));
  Rational hi(scaled + 1, ipow(10, 30));
  EXPECT_LE(b.lower().to_rational(), hi);
  EXPECT_GE(b.upper().to_rational(), lo);
  oracle::Real r(Rational(2), 200);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  EXPECT_TRUE(oracle::consistent(b, r));

  Ball n = to_ball(parse_number("-sqrt:8/1"), 100);
  EXPECT_TRUE(n.is_negative());
  EXPECT_TRUE(n.overlaps(b.mul_2exp(1).with_prec(100) * Ball(-1)));
}

TEST(ToBall, RadiusContractAcrossSpecs) {
  for (const char* text : {"rational:1/3", "rational:-1000001/7", "liouville:2", "lacunary:7:3,0,6",
                           "sqrt:2/1", "sqrt:1000000/3", "-sqrt:5/2", "pi", "e"}) {
    NumberSpec x = parse_number(text);
    for (Precision p : {2L, 17L, 64L, 300L}) {
      Ball b = to_ball(x, p);
      EXPECT_TRUE(meets_accuracy(b, p)) << text << " " << p << " " << b.to_string();
    }
  }
}

TEST(NumberSpec, Classification) {
  EXPECT_EQ(algebraic_degree(parse_number("sqrt:2/1")), 2);
  EXPECT_EQ(algebraic_degree(parse_number("sqrt:9/4")), 1);
  EXPECT_EQ(exact_rational(parse_number("-sqrt:9/4")), q(-3, 2));
  EXPECT_FALSE(algebraic_degree(parse_number("pi")).has_value());
  EXPECT_TRUE(is_transcendental(parse_number("liouville:3")));
  EXPECT_FALSE(is_transcendental(parse_number("sqrt:3/1")));
  QuadraticSurd s = to_surd(SqrtRational{q(8, 3), 1});  // sqrt(24)/3 = (2/3) sqrt(6)
  EXPECT_EQ(s.coefficient, q(2, 3));
  EXPECT_EQ(s.radicand, 6);
  EXPECT_EQ(to_string(negate(parse_number("rational:1/2"))), "rational:-1/2");
  EXPECT_THROW(negate(parse_number("pi")), InvalidArgument);
}

}  // namespace
}  // namespace mahlerlab
