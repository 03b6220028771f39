#ifndef MAHLERLAB_CLASSIFY_HPP
#define MAHLERLAB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahlerlab/mahler.hpp"

namespace mahlerlab {

enum class Signature { kAlgebraicLike, kSLike, kULike, kInconclusive };
std::string_view to_string(Signature s);

/// Heuristic cut-offs applied to per-n estimates.
struct ClassThresholds {
  /// U-like when some max_ratio exceeds u_slope * n + u_offset.
  double u_slope = 1.0;
  double u_offset = 1.5;
  /// Algebraic-like when every slope is <= min(n, d - 1) + algebraic_slack.
  double algebraic_slack = 0.3;
  /// S-like when every slope lies in [n - s_lower_slack, U threshold).
  double s_lower_slack = 0.5;
  std::size_t s_min_points = 3;

  double u_threshold(unsigned n) const { return u_slope * n + u_offset; }
};

inline constexpr std::string_view kClassDisclaimer =
    "Heuristic signature from finitely many heights. The exponents are limits superior over "
    "H -> infinity and cannot be computed from finite data; this report is evidence, not a proof "
    "of class membership.";

struct ClassReport {
  std::string xi;
  std::vector<std::vector<WnRecord>> sweeps;  // index n - 1
  std::vector<SlopeEstimate> estimates;       // index n - 1
  Signature signature = Signature::kInconclusive;
  /// For lacunary specs: the largest n with base^((n+1)!) <= max H, the
  /// highest Liouville exponent the grid can resolve.
  std::optional<unsigned> certifiable_exponent;
  ClassThresholds thresholds;
  std::string disclaimer{kClassDisclaimer};
};

/// Pure decision rule. `algebraic_degree` is set only for exact algebraic
/// specs; for those the algebraic test runs first, since small heights can
/// give a rational a large ratio -log w / log H.
Signature classify_estimates(const std::vector<SlopeEstimate>& estimates, std::optional<int> algebraic_degree,
                             const ClassThresholds& thresholds = {});

/// Sweeps n = 1..n_max over `grid`, estimates exponents and classifies.
/// Throws InvalidArgument for n_max < 1 or an empty grid, and propagates
/// sweep errors.
ClassReport class_signature(const NumberSpec& x, unsigned n_max, const std::vector<Integer>& grid,
                            Precision prec = kDefaultPrecision, RecordSink* sink = nullptr,
                            const ClassThresholds& thresholds = {}, const SearchOptions& options = {});

}  // namespace mahlerlab

#endif  // MAHLERLAB_CLASSIFY_HPP
