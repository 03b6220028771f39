#ifndef MAHLERLAB_MAHLER_HPP
#define MAHLERLAB_MAHLER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/ball.hpp"
#include "mahlerlab/number_spec.hpp"
#include "mahlerlab/polynomial.hpp"

namespace mahlerlab {

struct SearchOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Largest admissible number of enumerated coefficient vectors.
  double enumeration_cap = 1e8;
  /// Precision ceiling for resolving zero tests and near ties.
  Precision precision_cap = kPrecisionCap;
};

/// Certified value of P(x). For rational and square-root specs zero-ness is
/// decided exactly; otherwise the precision is raised until the enclosure
/// excludes zero (Undecided at the cap).
struct PolyValue {
  bool exact_zero = false;
  /// Exact value when x is rational.
  std::optional<Rational> exact;
  /// Enclosure with relative accuracy about 2^-prec.
  Ball value;
};

PolyValue poly_eval_certified(const IntegerPolynomial& p, const NumberSpec& x, Precision prec,
                              Precision cap = kPrecisionCap);

/// One evaluated point of w_n(xi, H) = min |P(xi)| over integer P with
/// deg P <= n, H(P) <= H and P(xi) != 0.
struct WnRecord {
  std::string xi;
  unsigned n = 0;
  Integer H;
  /// Decimal-representable bounds, w_lo <= w_n(xi, H) <= w_hi, w_lo > 0.
  Rational w_lo;
  Rational w_hi;
  /// Lexicographically smallest minimizer, n + 1 coefficients.
  IntegerPolynomial argmin;
  Precision prec = kDefaultPrecision;
  /// Polynomials whose value could not be separated from zero at the cap.
  std::uint64_t skipped = 0;
  /// The exact minimum for rational specs (not persisted).
  std::optional<Rational> exact;
};

/// Full enumeration of [-H, H]^(n+1). Throws InvalidArgument for n < 1 or
/// H < 1 and CapExceeded when (2H+1)^(n+1) exceeds the cap.
WnRecord wn_naive(const NumberSpec& x, unsigned n, const Integer& H, Precision prec = kDefaultPrecision,
                  const SearchOptions& options = {});

/// Same minimum and argmin as wn_naive, enumerating (a1..an) up to sign and
/// choosing a0 among the integers nearest to -(a1 x + ... + an x^n).
WnRecord wn_search(const NumberSpec& x, unsigned n, const Integer& H, Precision prec = kDefaultPrecision,
                   const SearchOptions& options = {});

/// Destination for sweep results keyed by (xi, n, H).
class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual std::optional<WnRecord> find(const std::string& xi, unsigned n, const Integer& H) const = 0;
  virtual void append(const WnRecord& record) = 0;
};

struct SweepStats {
  std::size_t loaded = 0;
  std::size_t computed = 0;
};

/// One record per grid height (strictly increasing). Records found in the
/// sink are reused; new ones are appended as they are produced. Throws
/// InvalidArgument on a bad grid and Error if monotonicity in H fails.
std::vector<WnRecord> wn_sweep(const NumberSpec& x, unsigned n, const std::vector<Integer>& grid,
                               Precision prec = kDefaultPrecision, RecordSink* sink = nullptr,
                               SweepStats* stats = nullptr, const SearchOptions& options = {});

/// first, first*ratio, ... while <= last.
std::vector<Integer> geometric_grid(const Integer& first, const Integer& last, long ratio = 4);

/// Throws Error when w_lo(H') > w_hi(H) for some H' > H.
void check_monotone_in_height(const std::vector<WnRecord>& records);
/// Throws Error when w_{n+1}(H) > w_n(H) for a shared H.
void check_monotone_in_degree(const std::vector<WnRecord>& lower_n, const std::vector<WnRecord>& higher_n);

struct SlopeEstimate {
  unsigned n = 0;
  /// (log H, -log w) with w taken at its upper bound.
  std::vector<std::pair<double, double>> points;
  double regression_slope = 0;
  double max_ratio = 0;
  std::size_t confidence = 0;
};

/// Least-squares slope of -log w against log H plus the largest ratio.
/// Throws InsufficientData for fewer than two records and InvalidArgument
/// for mixed n or repeated H.
SlopeEstimate estimate_wn_exponent(const std::vector<WnRecord>& records);

}  // namespace mahlerlab

#endif  // MAHLERLAB_MAHLER_HPP
