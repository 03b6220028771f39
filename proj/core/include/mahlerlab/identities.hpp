#ifndef MAHLERLAB_IDENTITIES_HPP
#define MAHLERLAB_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahlerlab/bivariate.hpp"
#include "mahlerlab/complex_ball.hpp"
#include "mahlerlab/number_spec.hpp"

namespace mahlerlab {

enum class Expectation { kVanishes, kNonVanishing, kUnderTest };
enum class Verdict { kVerified, kRefuted, kUndecided };
std::string_view to_string(Expectation e);
std::string_view to_string(Verdict v);

/// Real sample point alpha, produced at any requested precision.
struct SamplePoint {
  std::string label;
  std::function<Ball(Precision)> at;

  static SamplePoint from_spec(const NumberSpec& x);
};

/// Restriction on alpha checked before any evaluation.
enum class AlphaDomain {
  kReal,
  kUnitInterval,    // |alpha| <= 1
  kTanNonzeroFinite  // tan(alpha) defined and nonzero
};

struct IdentityCase {
  std::string id;
  std::string description;
  AlphaDomain domain = AlphaDomain::kReal;
  /// Log-based cases are checked once per branch index k.
  bool multivalued = false;
  Expectation expected = Expectation::kVanishes;
  /// Residual at alpha (and branch k) with working precision wp; zero iff
  /// the identity holds there.
  std::function<ComplexBall(const Ball& alpha, long branch, Precision wp)> residual;
  /// The dependence polynomial, for the cases that have one.
  std::optional<BivariatePolynomial> polynomial;
};

struct IdentityVerdict {
  std::string case_id;
  std::string alpha;
  std::optional<long> branch;
  Verdict verdict = Verdict::kUndecided;
  ComplexBall residual;
  /// Certified lower bound on |residual| when Refuted.
  Dyadic residual_lower_bound;
  /// Working precision of the deciding evaluation.
  Precision working_prec = 0;
  Precision prec = 0;
};

/// The fixed catalog, in a stable order.
const std::vector<IdentityCase>& list_identity_cases();
/// Throws InvalidArgument for an unknown id.
const IdentityCase& find_identity_case(std::string_view id);

/// Verified: the residual contains 0 with radius <= 2^-(prec/2).
/// Refuted: the residual excludes 0. Otherwise the working precision is
/// doubled up to `cap`, after which the verdict is Undecided.
/// Multivalued cases give one verdict per k in [-branches, branches].
/// Throws InvalidArgument (unknown id) and DomainError (alpha outside the
/// case's domain).
std::vector<IdentityVerdict> verify_identity(std::string_view case_id, const SamplePoint& alpha, Precision prec,
                                             long branches = 3, Precision cap = kPrecisionCap);
std::vector<IdentityVerdict> verify_identity(std::string_view case_id, const NumberSpec& alpha, Precision prec,
                                             long branches = 3, Precision cap = kPrecisionCap);

/// rational 1/3, 1/2, 2/3, 110001/1000000 and liouville:10.
std::vector<NumberSpec> default_identity_samples();

}  // namespace mahlerlab

#endif  // MAHLERLAB_IDENTITIES_HPP
