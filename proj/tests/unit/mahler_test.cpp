#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/mahler.hpp"
#include "oracle.hpp"

namespace mahlerlab {
namespace {

Rational q(long n, long d) { return make_rational(n, d); }

struct Brute {
  Rational w;
  std::vector<long> argmin;
};

// Odometer over [-H, H]^(n+1), a0 varying fastest.
bool next_vector(std::vector<long>& a, long h) {
  for (long& c : a) {
    if (c < h) {
      ++c;
      return true;
    }
    c = -h;
  }
  return false;
}

bool lex_before(const std::vector<long>& a, const std::vector<long>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Exact minimum over every coefficient vector, rational arithmetic only.
Brute brute_rational(const Rational& x, unsigned n, long h) {
  std::vector<long> a(n + 1, -h);
  Brute best{-1, {}};
  do {
    Rational v = 0, p = 1;
    for (long c : a) {
      v += c * p;
      p *= x;
    }
    v = abs(v);
    if (sgn(v) == 0) continue;
    if (best.w < 0 || v < best.w || (v == best.w && lex_before(a, best.argmin))) best = {v, a};
  } while (next_vector(a, h));
  return best;
}

// Same minimum for an irrational x given to ~1024 bits by MPFR. Values that
// agree to 900 bits are treated as equal (exact ties such as P and -P).
std::pair<oracle::Real, std::vector<long>> brute_real(const oracle::Real& x, unsigned n, long h) {
  const long prec = 1024;
  std::vector<long> a(n + 1, -h), arg;
  oracle::Real best(prec), v(prec), p(prec), diff(prec);
  bool found = false;
  do {
    mpfr_set_ui(v.get(), 0, MPFR_RNDN);
    mpfr_set_ui(p.get(), 1, MPFR_RNDN);
    for (long c : a) {
      mpfr_mul_si(diff.get(), p.get(), c, MPFR_RNDN);
      mpfr_add(v.get(), v.get(), diff.get(), MPFR_RNDN);
      mpfr_mul(p.get(), p.get(), x.get(), MPFR_RNDN);
    }
    mpfr_abs(v.get(), v.get(), MPFR_RNDN);
    if (mpfr_cmp_d(v.get(), std::ldexp(1.0, -900)) < 0) continue;
    bool take = !found;
    if (found) {
      mpfr_sub(diff.get(), v.get(), best.get(), MPFR_RNDN);
      mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
      mpfr_div(diff.get(), diff.get(), best.get(), MPFR_RNDN);
      const bool tie = mpfr_cmp_d(diff.get(), std::ldexp(1.0, -900)) < 0;
      take = tie ? lex_before(a, arg) : mpfr_less_p(v.get(), best.get());
    }
    if (take) {
      found = true;
      best = v;
      arg = a;
    }
  } while (next_vector(a, h));
  return {best, arg};
}

std::vector<long> as_longs(const IntegerPolynomial& p) {
  std::vector<long> out;
  for (const Integer& c : p.coefficients()) out.push_back(c.get_si());
  return out;
}

oracle::Real sqrt2(long prec) {
  oracle::Real r(prec);
  mpfr_sqrt_ui(r.get(), 2, MPFR_RNDN);
  return r;
}

oracle::Real liouville10(long prec) {
  // Terms beyond 5! are below 10^-700.
  Rational s = 0;
  for (unsigned long f : {1UL, 2UL, 6UL, 24UL, 120UL}) s += Rational(Integer(1), ipow(10, f));
  return oracle::Real(s, prec);
}

void expect_bounds_contain(const WnRecord& r, const oracle::Real& w) {
  Rational v = w.to_rational();
  Rational slack = v * Rational(Integer(1), Integer(1) << 200);
  EXPECT_LE(r.w_lo, v + slack);
  EXPECT_GE(r.w_hi, v - slack);
}

void expect_record_invariants(const WnRecord& r, const NumberSpec& x) {
  ASSERT_GT(r.w_lo, 0);
  ASSERT_LE(r.w_lo, r.w_hi);
  ASSERT_EQ(r.argmin.size(), r.n + 1);
  ASSERT_LE(r.argmin.height(), r.H);
  PolyValue pv = poly_eval_certified(r.argmin, x, r.prec);
  ASSERT_FALSE(pv.exact_zero);
  Ball a = pv.value.abs();
  EXPECT_LE(r.w_lo, a.mag().to_rational());
  EXPECT_GE(r.w_hi, a.mig().to_rational());
}

class VectorSink : public RecordSink {
 public:
  std::optional<WnRecord> find(const std::string& xi, unsigned n, const Integer& H) const override {
    for (const WnRecord& r : records) {
      if (r.xi == xi && r.n == n && r.H == H) return r;
    }
    return std::nullopt;
  }
  void append(const WnRecord& record) override { records.push_back(record); }
  std::vector<WnRecord> records;
};

TEST(PolyEval, Examples) {
  PolyValue z = poly_eval_certified({-2, 0, 1}, parse_number("sqrt:2/1"), 128);
  EXPECT_TRUE(z.exact_zero);
  PolyValue h = poly_eval_certified({-1, 1}, parse_number("rational:1/2"), 128);
  ASSERT_TRUE(h.exact.has_value());
  EXPECT_EQ(*h.exact, q(-1, 2));
  PolyValue l = poly_eval_certified({0, 1}, parse_number("liouville:10"), 128);
  EXPECT_FALSE(l.exact_zero);
  EXPECT_LE(l.value.rad(), Dyadic::pow2(-128));
  EXPECT_TRUE(l.value.contains(Rational(q(110001, 1000000) + Rational(Integer(1), ipow(10, 24)))) ||
              oracle::consistent(l.value, liouville10(256)));
  EXPECT_TRUE(oracle::consistent(l.value, liouville10(256)));
  // (1 + sqrt2)(1 - sqrt2) = -1: heavy cancellation in a + b sqrt(d).
  PolyValue c = poly_eval_certified({-99, 70}, parse_number("sqrt:2/1"), 128);
  oracle::Real ref = sqrt2(512);
  mpfr_mul_ui(ref.get(), ref.get(), 70, MPFR_RNDN);
  mpfr_sub_ui(ref.get(), ref.get(), 99, MPFR_RNDN);
  EXPECT_TRUE(oracle::consistent(c.value, ref));
  EXPECT_LE(c.value.rad(), c.value.mig().ldexp(-120));
}

TEST(WnNaive, ZeroIsOne) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (long h = 1; h <= 7; ++h) {
      WnRecord r = wn_naive(parse_number("rational:0/1"), n, h);
      ASSERT_EQ(*r.exact, 1);
      ASSERT_EQ(r.w_lo, 1);
      ASSERT_EQ(r.w_hi, 1);
      WnRecord s = wn_search(parse_number("rational:0/1"), n, h);
      ASSERT_EQ(*s.exact, 1);
      ASSERT_EQ(s.argmin, r.argmin);
    }
  }
  // Lexicographic tie-break among all P with |P(0)| = 1.
  WnRecord r = wn_naive(parse_number("rational:0/1"), 3, 7);
  EXPECT_EQ(r.argmin, IntegerPolynomial({-1, -7, -7, -7}));
}

TEST(WnNaive, PinnedValues) {
  WnRecord half = wn_naive(parse_number("rational:1/2"), 1, 1);
  EXPECT_EQ(*half.exact, q(1, 2));
  EXPECT_EQ(half.argmin, IntegerPolynomial({-1, 1}));
  WnRecord third = wn_naive(parse_number("rational:1/3"), 1, 2);
  EXPECT_EQ(*third.exact, q(1, 3));
  EXPECT_EQ(third.argmin, IntegerPolynomial({-1, 2}));

  for (bool pruned : {false, true}) {
    NumberSpec s2 = parse_number("sqrt:2/1");
    WnRecord r = pruned ? wn_search(s2, 2, 1) : wn_naive(s2, 2, 1);
    oracle::Real w = sqrt2(512);
    mpfr_sub_ui(w.get(), w.get(), 1, MPFR_RNDN);
    expect_bounds_contain(r, w);
    EXPECT_LE(r.w_hi - r.w_lo, Rational(Integer(1), Integer(1) << 64));
    // Both -1 + X and 1 - X + X^2 attain sqrt2 - 1; the second is lex-smaller.
    EXPECT_EQ(r.argmin, IntegerPolynomial({-1, -1, 1}));
    expect_record_invariants(r, s2);
  }
}

TEST(WnSearch, LiouvilleAtOneMillion) {
  NumberSpec l10 = parse_number("liouville:10");
  WnRecord r = wn_search(l10, 1, 1000000);
  EXPECT_LE(r.w_hi, q(2, 1) * Rational(Integer(1), ipow(10, 18)));
  EXPECT_EQ(r.argmin, IntegerPolynomial({-110001, 1000000}));
  EXPECT_EQ(r.skipped, 0u);
  expect_record_invariants(r, l10);
  // |10^6 L - 110001| = 10^-18 + 10^-114 + ...
  EXPECT_GT(r.w_lo, Rational(Integer(1), ipow(10, 18)) * (1 - Rational(Integer(1), ipow(10, 30))));
  EXPECT_LT(r.w_lo, Rational(Integer(1), ipow(10, 18)) * q(1000001, 1000000));
}

TEST(WnSearch, Preconditions) {
  NumberSpec half = parse_number("rational:1/2");
  EXPECT_THROW(wn_search(half, 1, 0), InvalidArgument);
  EXPECT_THROW(wn_naive(half, 0, 3), InvalidArgument);
  EXPECT_THROW(wn_naive(half, 5, 100), CapExceeded);
  EXPECT_THROW(wn_search(half, 6, 1000), CapExceeded);
  SearchOptions tight;
  tight.enumeration_cap = 100;
  EXPECT_THROW(wn_naive(half, 1, 10, kDefaultPrecision, tight), CapExceeded);
  EXPECT_NO_THROW(wn_search(half, 1, 10, kDefaultPrecision, tight));
}

TEST(WnSearch, OracleEquivalenceOnRationals) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> den(1, 12), num(-30, 30), deg(1, 2), height(1, 6);
  for (int i = 0; i < 200; ++i) {
    Rational x = q(num(rng), den(rng));
    const unsigned n = static_cast<unsigned>(deg(rng));
    const long h = height(rng);
    NumberSpec spec = parse_number("rational:" + to_string(x.get_num()) + "/" + to_string(x.get_den()));
    WnRecord naive = wn_naive(spec, n, h);
    WnRecord search = wn_search(spec, n, h);
    Brute b = brute_rational(x, n, h);
    ASSERT_EQ(*naive.exact, b.w) << to_string(x) << " n=" << n << " H=" << h;
    ASSERT_EQ(as_longs(naive.argmin), b.argmin);
    ASSERT_EQ(*search.exact, *naive.exact) << to_string(x) << " n=" << n << " H=" << h;
    ASSERT_EQ(search.argmin, naive.argmin) << to_string(x) << " n=" << n << " H=" << h;
    ASSERT_LE(naive.w_lo, b.w);
    ASSERT_GE(naive.w_hi, b.w);
  }
}

TEST(WnSearch, OracleEquivalenceOnIrrationals) {
  struct Case {
    const char* spec;
    oracle::Real value;
  };
  oracle::Real s3(1024);
  mpfr_sqrt_ui(s3.get(), 3, MPFR_RNDN);
  mpfr_div_ui(s3.get(), s3.get(), 2, MPFR_RNDN);
  oracle::Real ms5(1024);
  mpfr_sqrt_ui(ms5.get(), 5, MPFR_RNDN);
  mpfr_neg(ms5.get(), ms5.get(), MPFR_RNDN);
  std::vector<Case> cases = {{"sqrt:2/1", sqrt2(1024)},
                             {"sqrt:3/4", s3},
                             {"-sqrt:5/1", ms5},
                             {"pi", oracle::pi(1024)},
                             {"e", oracle::e(1024)},
                             {"liouville:10", liouville10(1024)}};
  for (const Case& c : cases) {
    NumberSpec spec = parse_number(c.spec);
    for (unsigned n = 1; n <= 3; ++n) {
      for (long h : {1L, 2L, 4L}) {
        if (n == 3 && h == 4) continue;
        auto [w, arg] = brute_real(c.value, n, h);
        WnRecord naive = wn_naive(spec, n, h);
        WnRecord search = wn_search(spec, n, h);
        ASSERT_EQ(as_longs(naive.argmin), arg) << c.spec << " n=" << n << " H=" << h;
        ASSERT_EQ(search.argmin, naive.argmin) << c.spec << " n=" << n << " H=" << h;
        expect_bounds_contain(naive, w);
        expect_bounds_contain(search, w);
        expect_record_invariants(search, spec);
      }
    }
  }
}

TEST(WnSearch, SignSymmetry) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(1, 20), num(1, 60), height(1, 9);
  for (int i = 0; i < 60; ++i) {
    const long a = num(rng), b = den(rng), h = height(rng);
    const unsigned n = 1 + i % 3;
    WnRecord pos = wn_search(parse_number("rational:" + std::to_string(a) + "/" + std::to_string(b)), n, h);
    WnRecord neg = wn_search(parse_number("rational:-" + std::to_string(a) + "/" + std::to_string(b)), n, h);
    ASSERT_EQ(*pos.exact, *neg.exact);
  }
  WnRecord p = wn_search(parse_number("sqrt:7/3"), 2, 30);
  WnRecord m = wn_search(parse_number("-sqrt:7/3"), 2, 30);
  EXPECT_EQ(p.w_lo, m.w_lo);
  EXPECT_EQ(p.w_hi, m.w_hi);
}

TEST(WnSearch, DeterministicAcrossThreadCounts) {
  for (const char* s : {"pi", "sqrt:2/1", "rational:5/7"}) {
    NumberSpec spec = parse_number(s);
    SearchOptions one, many;
    one.threads = 1;
    many.threads = 4;
    WnRecord a = wn_search(spec, 2, 40, kDefaultPrecision, one);
    WnRecord b = wn_search(spec, 2, 40, kDefaultPrecision, many);
    EXPECT_EQ(a.argmin, b.argmin) << s;
    EXPECT_EQ(a.w_lo, b.w_lo) << s;
    EXPECT_EQ(a.w_hi, b.w_hi) << s;
  }
}

TEST(WnSearch, MonotoneInDegree) {
  for (const char* s : {"pi", "e", "sqrt:2/1", "rational:3/8"}) {
    NumberSpec spec = parse_number(s);
    std::vector<WnRecord> n1, n2;
    for (long h : {3L, 12L, 48L}) {
      n1.push_back(wn_search(spec, 1, h));
      n2.push_back(wn_search(spec, 2, h));
    }
    EXPECT_NO_THROW(check_monotone_in_degree(n1, n2)) << s;
    EXPECT_NO_THROW(check_monotone_in_height(n1)) << s;
    EXPECT_NO_THROW(check_monotone_in_height(n2)) << s;
  }
  WnRecord a = wn_search(parse_number("pi"), 1, 4);
  WnRecord b = a;
  b.H = 8;
  b.w_lo = a.w_hi * 2;
  b.w_hi = a.w_hi * 3;
  EXPECT_THROW(check_monotone_in_height({a, b}), Error);
}

TEST(WnSweep, SqrtTwoAndResume) {
  NumberSpec s2 = parse_number("sqrt:2/1");
  VectorSink sink;
  SweepStats stats;
  std::vector<Integer> grid = {16, 64, 256, 1024};
  std::vector<WnRecord> rs = wn_sweep(s2, 1, grid, kDefaultPrecision, &sink, &stats);
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(stats.computed, 4u);
  EXPECT_EQ(stats.loaded, 0u);
  for (const WnRecord& r : rs) {
    EXPECT_GE(r.w_lo * Rational(r.H), q(1, 3));
    EXPECT_LE(r.w_hi * Rational(r.H), 3);
  }
  std::vector<WnRecord> again = wn_sweep(s2, 1, grid, kDefaultPrecision, &sink, &stats);
  EXPECT_EQ(stats.computed, 0u);
  EXPECT_EQ(stats.loaded, 4u);
  EXPECT_EQ(sink.records.size(), 4u);
  for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_EQ(again[i].argmin, rs[i].argmin);

  EXPECT_THROW(wn_sweep(s2, 1, {}), InvalidArgument);
  EXPECT_THROW(wn_sweep(s2, 1, {Integer(4), Integer(4)}), InvalidArgument);
}

TEST(WnSweep, LiouvilleRatios) {
  NumberSpec l10 = parse_number("liouville:10");
  std::vector<WnRecord> rs = wn_sweep(l10, 1, {Integer(100), Integer(10000), Integer(1000000)});
  auto ratio = [](const WnRecord& r) { return -log_abs(r.w_hi) / log_abs(r.H); };
  // 11/100 gives w_1(L, 100) = 10^-4, ratio 2. No q < 10^6 does better by
  // much, so at H = 10^4 the ratio falls back to about 1 until H = 10^6.
  EXPECT_GE(ratio(rs[0]), 1.9);
  EXPECT_NEAR(ratio(rs[1]), 1.0, 0.05);
  EXPECT_GE(ratio(rs[2]), 2.9);
}

TEST(Slope, ConstructedCollinear) {
  std::vector<WnRecord> rs(3);
  for (int i = 0; i < 3; ++i) {
    rs[i].n = 1;
    rs[i].H = ipow(10, 2 + i);
    rs[i].w_lo = rs[i].w_hi = Rational(Integer(1), ipow(10, 4 + 2 * i));
  }
  SlopeEstimate e = estimate_wn_exponent(rs);
  EXPECT_NEAR(e.regression_slope, 2.0, 1e-12);
  EXPECT_NEAR(e.max_ratio, 2.0, 1e-12);
  EXPECT_EQ(e.confidence, 3u);
  EXPECT_THROW(estimate_wn_exponent({rs[0]}), InsufficientData);
  EXPECT_THROW(estimate_wn_exponent({rs[0], rs[0]}), InvalidArgument);
}

TEST(Slope, SqrtTwoNearOne) {
  std::vector<WnRecord> rs = wn_sweep(parse_number("sqrt:2/1"), 1, geometric_grid(16, 4096));
  ASSERT_EQ(rs.size(), 5u);
  SlopeEstimate e = estimate_wn_exponent(rs);
  EXPECT_GE(e.regression_slope, 0.8);
  EXPECT_LE(e.regression_slope, 1.2);
}

TEST(Grid, Geometric) {
  EXPECT_EQ(geometric_grid(16, 1024), (std::vector<Integer>{16, 64, 256, 1024}));
  EXPECT_EQ(geometric_grid(1, 100, 10), (std::vector<Integer>{1, 10, 100}));
  EXPECT_THROW(geometric_grid(0, 10), InvalidArgument);
}

}  // namespace
}  // namespace mahlerlab
