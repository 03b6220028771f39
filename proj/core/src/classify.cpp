#include "mahlerlab/classify.hpp"

#include <algorithm>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {

std::string_view to_string(Signature s) {
  switch (s) {
    case Signature::kAlgebraicLike:
      return "algebraic-like";
    case Signature::kSLike:
      return "S-like";
    case Signature::kULike:
      return "U-like";
    case Signature::kInconclusive:
      break;
  }
  return "inconclusive";
}

Signature classify_estimates(const std::vector<SlopeEstimate>& estimates, std::optional<int> degree,
                             const ClassThresholds& t) {
  if (estimates.empty()) return Signature::kInconclusive;
  if (degree) {
    const bool all_low = std::all_of(estimates.begin(), estimates.end(), [&](const SlopeEstimate& e) {
      const double cap = std::min<double>(e.n, *degree - 1) + t.algebraic_slack;
      return e.regression_slope <= cap;
    });
    if (all_low) return Signature::kAlgebraicLike;
  }
  for (const SlopeEstimate& e : estimates) {
    if (e.max_ratio > t.u_threshold(e.n)) return Signature::kULike;
  }
  const bool all_s = std::all_of(estimates.begin(), estimates.end(), [&](const SlopeEstimate& e) {
    return e.confidence >= t.s_min_points && e.regression_slope >= e.n - t.s_lower_slack &&
           e.regression_slope < t.u_threshold(e.n);
  });
  return all_s ? Signature::kSLike : Signature::kInconclusive;
}

ClassReport class_signature(const NumberSpec& x, unsigned n_max, const std::vector<Integer>& grid,
                            Precision prec, RecordSink* sink, const ClassThresholds& thresholds,
                            const SearchOptions& options) {
  if (n_max < 1) throw InvalidArgument("n_max >= 1 required");
  if (grid.empty()) throw InvalidArgument("height grid is empty");
  ClassReport report;
  report.xi = to_string(x);
  report.thresholds = thresholds;
  for (unsigned n = 1; n <= n_max; ++n) {
    report.sweeps.push_back(wn_sweep(x, n, grid, prec, sink, nullptr, options));
    if (n > 1) check_monotone_in_degree(report.sweeps[n - 2], report.sweeps[n - 1]);
    report.estimates.push_back(estimate_wn_exponent(report.sweeps.back()));
  }
  std::optional<int> degree;
  if (!is_transcendental(x)) degree = algebraic_degree(x);
  report.signature = classify_estimates(report.estimates, degree, thresholds);
  if (const auto* lac = std::get_if<LacunaryNumber>(&x)) {
    const Integer max_h = *std::max_element(grid.begin(), grid.end());
    unsigned n = 0;
    while (n + 2 <= 20 && ipow(lac->base(), factorial(n + 2)) <= max_h) ++n;
    report.certifiable_exponent = n;
  }
  return report;
}

}  // namespace mahlerlab
