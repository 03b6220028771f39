#ifndef MAHLERLAB_FUNCTIONS_HPP
#define MAHLERLAB_FUNCTIONS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "mahlerlab/complex_ball.hpp"

namespace mahlerlab {

enum class FunctionTag {
  kExp,
  kLog,
  kSin,
  kCos,
  kTan,
  kSinh,
  kCosh,
  kTanh,
  kArcsin,
  kArctan,
  kArcsinh,
  kArccosh,
  kArtanh,
  kSqrt,
};

inline constexpr std::array<FunctionTag, 14> kAllFunctionTags = {
    FunctionTag::kExp,     FunctionTag::kLog,     FunctionTag::kSin,
    FunctionTag::kCos,     FunctionTag::kTan,     FunctionTag::kSinh,
    FunctionTag::kCosh,    FunctionTag::kTanh,    FunctionTag::kArcsin,
    FunctionTag::kArctan,  FunctionTag::kArcsinh, FunctionTag::kArccosh,
    FunctionTag::kArtanh,  FunctionTag::kSqrt,
};

std::string_view to_string(FunctionTag tag);
std::optional<FunctionTag> parse_function_tag(std::string_view name);

/// One evaluation of the principal value at a fixed working precision.
/// Real arguments inside the real domain use the real kernels; everything
/// else goes through the complex exp/log/sqrt formulas.
ComplexBall apply_function(FunctionTag tag, const ComplexBall& z, Precision wp);

struct Evaluation {
  ComplexBall value;
  Precision working_prec = 0;
  /// The radius target 2^-prec * max(1, |f|) was not met below the cap.
  bool low_precision = false;
};

/// Certified principal value f(z). Working precision starts a little above
/// `prec` and doubles until each component meets the radius target or
/// `cap` is reached. Singular inputs raise SingularInput; inputs on a branch
/// cut that the enclosure cannot resolve raise Undecided.
Evaluation eval_fn(FunctionTag tag, const ComplexBall& z, Precision prec,
                   Precision cap = kPrecisionCap);

}  // namespace mahlerlab

#endif  // MAHLERLAB_FUNCTIONS_HPP
