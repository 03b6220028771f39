#include "mahlerlab/mahler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/format.hpp"

namespace mahlerlab {
namespace {

// ---------------------------------------------------------------------------
// Shared helpers

void addmul(Integer& acc, const Integer& x, long a) {
  if (a >= 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(a));
  } else {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-a));
  }
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool lex_less(const long* a, const long* b, unsigned len) {
  for (unsigned k = 0; k < len; ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

bool all_zero(const long* a, unsigned len) {
  for (unsigned k = 0; k < len; ++k) {
    if (a[k] != 0) return false;
  }
  return true;
}

long clamp_to(const Integer& v, long h) {
  if (v > h) return h;
  if (v < -h) return -h;
  return v.get_si();
}

// Inclusive integer range [lo, hi] of a0 candidates, clamped to [-h, h].
void push_range(const Integer& lo, const Integer& hi, long h, std::vector<long>& out) {
  out.clear();
  const long a = clamp_to(lo, h);
  const long b = clamp_to(hi, h);
  for (long v = a; v <= b; ++v) out.push_back(v);
}

IntegerPolynomial to_polynomial(const std::vector<long>& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (long v : a) c.emplace_back(v);
  return IntegerPolynomial(std::move(c));
}

// sign(A + B sqrt(D)) for non-square D > 1.
int quad_sign(const Integer& a, const Integer& b, const Integer& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Integer lhs = a * a;
  Integer rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

// Enclosure of (A + B sqrt(D)) / K, free of cancellation.
Ball quad_ball(const Integer& a, const Integer& b, const Integer& d, const Integer& k, Precision prec) {
  const Precision wp = prec + 32;
  Ball root = Ball::exact(d, wp).sqrt();
  Ball bb = Ball::exact(b, wp) * root;
  Ball value;
  if (sgn(a) == 0 || sgn(b) == 0 || sgn(a) == sgn(b)) {
    value = Ball::exact(a, wp) + bb;
  } else {
    // A + B sqrt(D) = (A^2 - B^2 D) / (A - B sqrt(D))
    Integer num = a * a - b * b * d;
    value = Ball::exact(num, wp) / (Ball::exact(a, wp) - bb);
  }
  return (value / Ball::exact(k, wp)).with_prec(prec);
}

// ---------------------------------------------------------------------------
// Evaluators. Each provides
//   Acc, Value
//   accumulate(a, acc)            sum over k >= 1
//   candidates(acc, h, out)       a0 values that can minimize |P(x)|
//   value(a, acc, out) -> bool    false when P(x) = 0 or undecidable
//   compare(x, px, y, py)         sign of |P_x(x)| - |P_y(x)|
//   skipped                       count of undecidable polynomials

class RationalEval {
 public:
  RationalEval(const Rational& x, unsigned n) : n_(n), r_(n + 1) {
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    for (unsigned k = 0; k <= n; ++k) r_[k] = ipow(num, k) * ipow(den, n - k);
  }

  struct Acc {
    Integer t;
  };
  using Value = Integer;

  void accumulate(const long* a, Acc& acc) const {
    acc.t = 0;
    for (unsigned k = 1; k <= n_; ++k) {
      if (a[k] != 0) addmul(acc.t, r_[k], a[k]);
    }
  }

  void candidates(const Acc& acc, long h, std::vector<long>& out) const {
    Integer neg = -acc.t;
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), neg.get_mpz_t(), r_[0].get_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), neg.get_mpz_t(), r_[0].get_mpz_t());
    push_range(f - 1, c + 1, h, out);
  }

  bool value(const long* a, const Acc& acc, Value& out) {
    out = acc.t;
    addmul(out, r_[0], a[0]);
    return sgn(out) != 0;
  }

  int compare(Value& x, const long*, Value& y, const long*) { return cmpabs(x, y); }

  Rational exact(const Value& v) const { return make_rational(abs(v), r_[0]); }

  std::uint64_t skipped = 0;

 private:
  unsigned n_;
  std::vector<Integer> r_;  // num^k den^(n-k)
};

class QuadraticEval {
 public:
  QuadraticEval(const QuadraticSurd& s, unsigned n) : n_(n), d_(s.radicand), k_(n + 1) {
    const Integer& u = s.coefficient.get_num();
    const Integer& v = s.coefficient.get_den();
    for (unsigned k = 0; k <= n; ++k) k_[k] = ipow(u, k) * ipow(v, n - k) * ipow(d_, k / 2);
  }

  struct Acc {
    Integer a;
    Integer b;
  };
  struct Value {
    Integer a;
    Integer b;
  };

  void accumulate(const long* c, Acc& acc) const {
    acc.a = 0;
    acc.b = 0;
    for (unsigned k = 1; k <= n_; ++k) {
      if (c[k] != 0) addmul(k % 2 == 0 ? acc.a : acc.b, k_[k], c[k]);
    }
  }

  void candidates(const Acc& acc, long h, std::vector<long>& out) const {
    // B sqrt(D) lies in [A + lo, A + hi] with hi - lo <= 1.
    Integer q = isqrt(acc.b * acc.b * d_);
    Integer lo = acc.a;
    lo += sgn(acc.b) >= 0 ? q : Integer(-q - 1);
    Integer hi = lo + 1;
    Integer neg_hi = -hi, neg_lo = -lo;
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), neg_hi.get_mpz_t(), k_[0].get_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), neg_lo.get_mpz_t(), k_[0].get_mpz_t());
    push_range(f - 1, c + 1, h, out);
  }

  bool value(const long* c, const Acc& acc, Value& out) {
    out.a = acc.a;
    addmul(out.a, k_[0], c[0]);
    out.b = acc.b;
    return sgn(out.a) != 0 || sgn(out.b) != 0;
  }

  int compare(Value& x, const long*, Value& y, const long*) {
    const int sx = quad_sign(x.a, x.b, d_);
    const int sy = quad_sign(y.a, y.b, d_);
    // sign(|x| - |y|)
    Integer da = sx * x.a - sy * y.a;
    Integer db = sx * x.b - sy * y.b;
    return quad_sign(da, db, d_);
  }

  Ball ball(const Value& v, Precision prec) const { return quad_ball(v.a, v.b, d_, k_[0], prec); }

  std::uint64_t skipped = 0;

 private:
  unsigned n_;
  Integer d_;
  std::vector<Integer> k_;  // u^k v^(n-k) D^(k/2)
};

// Fixed-point evaluation at `wp` fractional bits with exact integer error
// accounting; falls back to ball evaluation with rising precision when a
// value is too close to zero or two values cannot be ordered.
class BallEval {
 public:
  BallEval(NumberSpec x, unsigned n, Precision wp, Precision cap)
      : x_(std::move(x)), n_(n), wp_(wp), cap_(cap), xk_(n + 1), ek_(n + 1) {
    const std::vector<Ball>& pw = powers(wp + 16);
    for (unsigned k = 0; k <= n; ++k) {
      xk_[k] = pw[k].mid().ldexp(wp).floor();
      ek_[k] = pw[k].rad().ldexp(wp).ceil() + 2;
    }
    one_ = Integer(1) << static_cast<mp_bitcnt_t>(wp);
  }

  struct Acc {
    Integer t;
    Integer err;
  };
  struct Value {
    Integer lo;  // |P(x)| in [lo, hi] * 2^-scale, lo > 0
    Integer hi;
    long scale = 0;
  };

  void accumulate(const long* a, Acc& acc) const {
    acc.t = 0;
    acc.err = 0;
    for (unsigned k = 1; k <= n_; ++k) {
      if (a[k] == 0) continue;
      addmul(acc.t, xk_[k], a[k]);
      addmul(acc.err, ek_[k], std::labs(a[k]));
    }
  }

  void candidates(const Acc& acc, long h, std::vector<long>& out) const {
    Integer lo = -(acc.t + acc.err);
    Integer hi = -(acc.t - acc.err);
    Integer f, c;
    mpz_fdiv_q_2exp(f.get_mpz_t(), lo.get_mpz_t(), static_cast<mp_bitcnt_t>(wp_));
    mpz_cdiv_q_2exp(c.get_mpz_t(), hi.get_mpz_t(), static_cast<mp_bitcnt_t>(wp_));
    push_range(f - 1, c + 1, h, out);
  }

  bool value(const long* a, const Acc& acc, Value& out) {
    center_ = acc.t;
    addmul(center_, one_, a[0]);
    if (cmpabs(center_, acc.err) > 0) {
      out.lo = abs(center_) - acc.err;
      out.hi = abs(center_) + acc.err;
      out.scale = wp_;
      return true;
    }
    if (all_zero(a, n_ + 1)) return false;
    for (Precision p = 2 * wp_; p <= cap_; p *= 2) {
      if (refined(a, p, out)) return true;
    }
    ++skipped;
    return false;
  }

  int compare(Value& x, const long* px, Value& y, const long* py) {
    int c = order(x, y);
    for (Precision p = 2 * std::max(x.scale, y.scale); c == 2 && p <= cap_; p *= 2) {
      refined(px, p, x);
      refined(py, p, y);
      c = order(x, y);
    }
    return c == 2 ? 0 : c;
  }

  std::uint64_t skipped = 0;

 private:
  const std::vector<Ball>& powers(Precision p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    std::vector<Ball> pw(n_ + 1);
    Ball xb = to_ball(x_, p);
    pw[0] = Ball(1, p);
    for (unsigned k = 1; k <= n_; ++k) pw[k] = pw[k - 1] * xb;
    return cache_.emplace(p, std::move(pw)).first->second;
  }

  // Ball evaluation at precision p; false if it still meets zero.
  bool refined(const long* a, Precision p, Value& out) {
    const std::vector<Ball>& pw = powers(p + 16);
    Ball acc(0, p + 16);
    for (unsigned k = 0; k <= n_; ++k) {
      if (a[k] != 0) acc += pw[k] * Ball(a[k], p + 16);
    }
    if (acc.contains_zero()) return false;
    Dyadic lo = acc.mig();
    long scale = std::max<long>(p, 40 - lo.msb());
    out.lo = lo.ldexp(scale).floor();
    out.hi = acc.mag().ldexp(scale).ceil();
    out.scale = scale;
    return true;
  }

  // -1, +1, or 2 when the enclosures overlap.
  static int order(const Value& x, const Value& y) {
    Integer xlo = x.lo, xhi = x.hi, ylo = y.lo, yhi = y.hi;
    if (x.scale < y.scale) {
      xlo <<= static_cast<mp_bitcnt_t>(y.scale - x.scale);
      xhi <<= static_cast<mp_bitcnt_t>(y.scale - x.scale);
    } else if (y.scale < x.scale) {
      ylo <<= static_cast<mp_bitcnt_t>(x.scale - y.scale);
      yhi <<= static_cast<mp_bitcnt_t>(x.scale - y.scale);
    }
    if (xhi < ylo) return -1;
    if (xlo > yhi) return 1;
    return 2;
  }

  NumberSpec x_;
  unsigned n_;
  Precision wp_;
  Precision cap_;
  std::vector<Integer> xk_;
  std::vector<Integer> ek_;
  Integer one_;
  Integer center_;
  std::map<Precision, std::vector<Ball>> cache_;
};

// ---------------------------------------------------------------------------
// Enumeration engine

template <class Eval>
struct Best {
  bool found = false;
  std::vector<long> coeffs;
  typename Eval::Value value;
  std::uint64_t skipped = 0;
};

template <class Eval>
void consider(Eval& ev, Best<Eval>& best, const long* cand, typename Eval::Value& v, unsigned len) {
  if (best.found) {
    int c = ev.compare(v, cand, best.value, best.coeffs.data());
    if (c > 0 || (c == 0 && !lex_less(cand, best.coeffs.data(), len))) return;
  }
  best.found = true;
  best.coeffs.assign(cand, cand + len);
  best.value = v;
}

struct Shape {
  unsigned n;
  long h;
  std::uint64_t prefixes;  // (2h+1)^n
};

// Decodes prefix index into a[1..n], a1 varying fastest.
void decode(std::uint64_t index, const Shape& s, long* a) {
  const std::uint64_t radix = static_cast<std::uint64_t>(2 * s.h + 1);
  for (unsigned k = 1; k <= s.n; ++k) {
    a[k] = static_cast<long>(index % radix) - s.h;
    index /= radix;
  }
}

void advance(const Shape& s, long* a) {
  for (unsigned k = 1; k <= s.n; ++k) {
    if (a[k] < s.h) {
      ++a[k];
      return;
    }
    a[k] = -s.h;
  }
}

// Highest nonzero of a[1..n] positive, or all of them zero.
bool canonical_prefix(const long* a, unsigned n) {
  for (unsigned k = n; k >= 1; --k) {
    if (a[k] != 0) return a[k] > 0;
  }
  return true;
}

template <class Eval>
void run_block(Eval& ev, const Shape& s, bool pruned, std::uint64_t begin, std::uint64_t end,
               Best<Eval>& best) {
  const unsigned len = s.n + 1;
  std::vector<long> a(len), neg(len);
  std::vector<long> cands;
  typename Eval::Acc acc;
  typename Eval::Value v;
  decode(begin, s, a.data());
  for (std::uint64_t i = begin; i < end; ++i, advance(s, a.data())) {
    if (pruned && !canonical_prefix(a.data(), s.n)) continue;
    ev.accumulate(a.data(), acc);
    if (pruned) {
      ev.candidates(acc, s.h, cands);
    } else {
      cands.clear();
      for (long a0 = -s.h; a0 <= s.h; ++a0) cands.push_back(a0);
    }
    for (long a0 : cands) {
      a[0] = a0;
      if (!ev.value(a.data(), acc, v)) continue;
      if (pruned) {
        // Representative of {P, -P}: the lexicographically smaller one.
        for (unsigned k = 0; k < len; ++k) neg[k] = -a[k];
        const long* rep = lex_less(neg.data(), a.data(), len) ? neg.data() : a.data();
        consider(ev, best, rep, v, len);
      } else {
        consider(ev, best, a.data(), v, len);
      }
    }
  }
  best.skipped = ev.skipped;
}

template <class Eval>
Best<Eval> enumerate(const Eval& prototype, const Shape& s, bool pruned, unsigned threads) {
  const std::uint64_t blocks = std::min<std::uint64_t>(s.prefixes, 256);
  std::vector<Best<Eval>> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    Eval ev = prototype;
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = s.prefixes * b / blocks;
      const std::uint64_t end = s.prefixes * (b + 1) / blocks;
      ev.skipped = 0;
      run_block(ev, s, pruned, begin, end, results[b]);
    }
  };
  if (threads <= 1 || blocks == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, blocks); ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  // Deterministic reduction in block order.
  Eval ev = prototype;
  Best<Eval> best;
  std::uint64_t skipped = 0;
  for (Best<Eval>& r : results) {
    skipped += r.skipped;
    if (r.found) consider(ev, best, r.coeffs.data(), r.value, s.n + 1);
  }
  best.skipped = skipped;
  return best;
}

Shape make_shape(unsigned n, const Integer& H, const SearchOptions& options, bool pruned) {
  if (n < 1) throw InvalidArgument("degree bound n >= 1 required");
  if (H < 1) throw InvalidArgument("height bound H >= 1 required");
  const double side = 2.0 * H.get_d() + 1.0;
  const double total = std::pow(side, static_cast<double>(n + 1));
  const double work = pruned ? std::pow(side, static_cast<double>(n)) : total;
  if (!H.fits_slong_p() || work > options.enumeration_cap) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", work);
    throw CapExceeded(std::string("enumeration of ") + buf + " coefficient vectors exceeds the cap");
  }
  Shape s{n, H.get_si(), 1};
  for (unsigned k = 0; k < n; ++k) s.prefixes *= static_cast<std::uint64_t>(2 * s.h + 1);
  return s;
}

unsigned thread_count(const SearchOptions& options) {
  if (options.threads != 0) return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_bounds(WnRecord& r, const Rational& lo, const Rational& hi) {
  const int digits = decimal_digits_for(r.prec);
  r.w_lo = to_scientific(lo, digits, Round::kFloor).value;
  r.w_hi = to_scientific(hi, digits, Round::kCeil).value;
}

WnRecord run(const NumberSpec& x, unsigned n, const Integer& H, Precision prec,
             const SearchOptions& options, bool pruned) {
  const Shape s = make_shape(n, H, options, pruned);
  const unsigned threads = thread_count(options);
  WnRecord r;
  r.xi = to_string(x);
  r.n = n;
  r.H = H;
  r.prec = prec;
  auto fail = [](bool found) {
    if (!found) throw Undecided("no polynomial with a certified nonzero value");
  };
  if (auto q = exact_rational(x)) {
    RationalEval ev(*q, n);
    auto best = enumerate(ev, s, pruned, threads);
    fail(best.found);
    r.argmin = to_polynomial(best.coeffs);
    r.exact = ev.exact(best.value);
    set_bounds(r, *r.exact, *r.exact);
    return r;
  }
  if (const auto* sq = std::get_if<SqrtRational>(&x)) {
    QuadraticEval ev(to_surd(*sq), n);
    auto best = enumerate(ev, s, pruned, threads);
    fail(best.found);
    r.argmin = to_polynomial(best.coeffs);
    Ball b = ev.ball(best.value, prec + 8).abs();
    set_bounds(r, b.mig().to_rational(), b.mag().to_rational());
    return r;
  }
  const Precision wp = prec + 32 + static_cast<Precision>(n) * bit_length(H);
  BallEval ev(x, n, wp, options.precision_cap);
  auto best = enumerate(ev, s, pruned, threads);
  fail(best.found);
  r.argmin = to_polynomial(best.coeffs);
  r.skipped = best.skipped;
  PolyValue pv = poly_eval_certified(r.argmin, x, prec + 8, options.precision_cap);
  Ball b = pv.value.abs();
  set_bounds(r, b.mig().to_rational(), b.mag().to_rational());
  return r;
}

}  // namespace

PolyValue poly_eval_certified(const IntegerPolynomial& p, const NumberSpec& x, Precision prec,
                              Precision cap) {
  PolyValue out;
  if (auto q = exact_rational(x)) {
    Rational v = p.evaluate(*q);
    out.exact = v;
    out.exact_zero = sgn(v) == 0;
    out.value = Ball::from_rational(v, prec);
    return out;
  }
  if (p.is_zero()) {
    out.exact_zero = true;
    out.value = Ball(0, prec);
    return out;
  }
  if (const auto* sq = std::get_if<SqrtRational>(&x)) {
    QuadraticSurd s = to_surd(*sq);
    const unsigned n = static_cast<unsigned>(p.size() - 1);
    QuadraticEval ev(s, n);
    std::vector<long> a;
    const bool small = std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                   [](const Integer& c) { return c.fits_slong_p(); });
    if (small) {
      for (const Integer& c : p.coefficients()) a.push_back(c.get_si());
      QuadraticEval::Acc acc;
      QuadraticEval::Value v;
      ev.accumulate(a.data(), acc);
      if (!ev.value(a.data(), acc, v)) {
        out.exact_zero = true;
        out.value = Ball(0, prec);
        return out;
      }
      out.value = ev.ball(v, prec);
      return out;
    }
  }
  for (Precision wp = prec + 32;; wp = std::min(cap, 2 * wp)) {
    Ball v = p.evaluate(to_ball(x, wp));
    const bool separated = !v.contains_zero();
    if (separated && v.rad() <= v.mig().ldexp(-prec)) {
      out.value = v.with_prec(prec);
      return out;
    }
    if (wp >= cap) {
      if (!separated) throw Undecided("P(x) cannot be separated from zero at the precision cap");
      out.value = v.with_prec(prec);
      return out;
    }
  }
}

WnRecord wn_naive(const NumberSpec& x, unsigned n, const Integer& H, Precision prec,
                  const SearchOptions& options) {
  return run(x, n, H, prec, options, false);
}

WnRecord wn_search(const NumberSpec& x, unsigned n, const Integer& H, Precision prec,
                   const SearchOptions& options) {
  return run(x, n, H, prec, options, true);
}

void check_monotone_in_height(const std::vector<WnRecord>& records) {
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const WnRecord& a = records[i];
      const WnRecord& b = records[j];
      if (a.n != b.n || a.xi != b.xi) continue;
      const WnRecord& small = a.H < b.H ? a : b;
      const WnRecord& large = a.H < b.H ? b : a;
      if (large.w_lo > small.w_hi) {
        throw Error("monotonicity in H violated at H = " + large.H.get_str());
      }
    }
  }
}

void check_monotone_in_degree(const std::vector<WnRecord>& lower_n, const std::vector<WnRecord>& higher_n) {
  for (const WnRecord& a : lower_n) {
    for (const WnRecord& b : higher_n) {
      if (a.H == b.H && a.xi == b.xi && b.n > a.n && b.w_lo > a.w_hi) {
        throw Error("monotonicity in n violated at H = " + a.H.get_str());
      }
    }
  }
}

std::vector<WnRecord> wn_sweep(const NumberSpec& x, unsigned n, const std::vector<Integer>& grid,
                               Precision prec, RecordSink* sink, SweepStats* stats,
                               const SearchOptions& options) {
  if (grid.empty()) throw InvalidArgument("height grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1) throw InvalidArgument("grid heights must be >= 1");
    if (i > 0 && grid[i] <= grid[i - 1]) throw InvalidArgument("height grid must be strictly increasing");
  }
  const std::string xi = to_string(x);
  std::vector<WnRecord> out;
  SweepStats local;
  for (const Integer& h : grid) {
    std::optional<WnRecord> hit = sink ? sink->find(xi, n, h) : std::nullopt;
    if (hit) {
      out.push_back(std::move(*hit));
      ++local.loaded;
      continue;
    }
    WnRecord r = wn_search(x, n, h, prec, options);
    if (sink) sink->append(r);
    out.push_back(std::move(r));
    ++local.computed;
  }
  if (stats) *stats = local;
  check_monotone_in_height(out);
  return out;
}

std::vector<Integer> geometric_grid(const Integer& first, const Integer& last, long ratio) {
  if (first < 1 || ratio < 2) throw InvalidArgument("geometric grid needs first >= 1 and ratio >= 2");
  std::vector<Integer> grid;
  for (Integer h = first; h <= last; h *= ratio) grid.push_back(h);
  return grid;
}

SlopeEstimate estimate_wn_exponent(const std::vector<WnRecord>& records) {
  if (records.size() < 2) throw InsufficientData("at least two records are needed for a slope");
  SlopeEstimate e;
  e.n = records.front().n;
  std::vector<Integer> seen;
  for (const WnRecord& r : records) {
    if (r.n != e.n) throw InvalidArgument("records mix different degree bounds");
    if (std::find(seen.begin(), seen.end(), r.H) != seen.end()) {
      throw InvalidArgument("records repeat a height");
    }
    seen.push_back(r.H);
    e.points.emplace_back(log_abs(r.H), -log_abs(r.w_hi));
  }
  std::sort(e.points.begin(), e.points.end());
  const double m = static_cast<double>(e.points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [lx, ly] : e.points) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  e.regression_slope = denom > 0 ? (m * sxy - sx * sy) / denom : 0.0;
  e.max_ratio = -INFINITY;
  for (auto [lx, ly] : e.points) {
    if (lx > 0) e.max_ratio = std::max(e.max_ratio, ly / lx);
  }
  if (!std::isfinite(e.max_ratio)) e.max_ratio = 0;
  e.confidence = e.points.size();
  return e;
}

}  // namespace mahlerlab
