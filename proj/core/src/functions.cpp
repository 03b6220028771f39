#include "mahlerlab/functions.hpp"

#include <string>

#include "mahlerlab/elementary.hpp"
#include "mahlerlab/errors.hpp"

namespace mahlerlab {
namespace {

struct TagName {
  FunctionTag tag;
  std::string_view name;
};

constexpr std::array<TagName, 14> kNames = {{
    {FunctionTag::kExp, "exp"},         {FunctionTag::kLog, "log"},
    {FunctionTag::kSin, "sin"},         {FunctionTag::kCos, "cos"},
    {FunctionTag::kTan, "tan"},         {FunctionTag::kSinh, "sinh"},
    {FunctionTag::kCosh, "cosh"},       {FunctionTag::kTanh, "tanh"},
    {FunctionTag::kArcsin, "arcsin"},   {FunctionTag::kArctan, "arctan"},
    {FunctionTag::kArcsinh, "arcsinh"}, {FunctionTag::kArccosh, "arccosh"},
    {FunctionTag::kArtanh, "artanh"},   {FunctionTag::kSqrt, "sqrt"},
}};

ComplexBall real(const Ball& x) { return {x, Ball(0, x.prec())}; }

ComplexBall one(Precision p) { return real(Ball(1, p)); }

bool strictly_inside_unit(const Ball& x) {
  return x.lower() > Dyadic(-1) && x.upper() < Dyadic(1);
}

ComplexBall complex_sin(const ComplexBall& z, Precision wp) {
  Ball s, c;
  sin_cos(z.re(), wp, s, c);
  return {s * cosh(z.im(), wp), c * sinh(z.im(), wp)};
}

ComplexBall complex_cos(const ComplexBall& z, Precision wp) {
  Ball s, c;
  sin_cos(z.re(), wp, s, c);
  return {c * cosh(z.im(), wp), -(s * sinh(z.im(), wp))};
}

ComplexBall complex_sinh(const ComplexBall& z, Precision wp) {
  Ball s, c;
  sin_cos(z.im(), wp, s, c);
  return {sinh(z.re(), wp) * c, cosh(z.re(), wp) * s};
}

ComplexBall complex_cosh(const ComplexBall& z, Precision wp) {
  Ball s, c;
  sin_cos(z.im(), wp, s, c);
  return {cosh(z.re(), wp) * c, sinh(z.re(), wp) * s};
}

ComplexBall checked_divide(const ComplexBall& a, const ComplexBall& b,
                           const char* what) {
  if (b.contains_zero()) throw SingularInput(std::string(what) + " at a pole");
  return a / b;
}

}  // namespace

std::string_view to_string(FunctionTag tag) {
  for (const auto& entry : kNames) {
    if (entry.tag == tag) return entry.name;
  }
  return "?";
}

std::optional<FunctionTag> parse_function_tag(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.tag;
  }
  return std::nullopt;
}

ComplexBall apply_function(FunctionTag tag, const ComplexBall& z, Precision wp) {
  const bool is_real = z.is_real();
  const Ball& x = z.re();
  switch (tag) {
    case FunctionTag::kExp:
      return exp(z, wp);
    case FunctionTag::kLog:
      return log(z, wp);
    case FunctionTag::kSqrt:
      return sqrt(z, wp);
    case FunctionTag::kSin:
      return is_real ? real(sin(x, wp)) : complex_sin(z, wp);
    case FunctionTag::kCos:
      return is_real ? real(cos(x, wp)) : complex_cos(z, wp);
    case FunctionTag::kTan:
      if (is_real) return real(tan(x, wp));
      return checked_divide(complex_sin(z, wp), complex_cos(z, wp), "tan");
    case FunctionTag::kSinh:
      return is_real ? real(sinh(x, wp)) : complex_sinh(z, wp);
    case FunctionTag::kCosh:
      return is_real ? real(cosh(x, wp)) : complex_cosh(z, wp);
    case FunctionTag::kTanh:
      if (is_real) return real(tanh(x, wp));
      return checked_divide(complex_sinh(z, wp), complex_cosh(z, wp), "tanh");
    case FunctionTag::kArcsin: {
      if (is_real && strictly_inside_unit(x)) return real(asin(x, wp));
      // Odd symmetry keeps iz + sqrt(1 - z^2) free of cancellation.
      if (x.is_negative()) return -apply_function(tag, -z, wp);
      // -i log(iz + sqrt(1 - z^2))
      ComplexBall w = z.mul_i() + sqrt(one(wp) - z.sqr(), wp);
      ComplexBall l = log(w, wp);
      return {l.im(), -l.re()};
    }
    case FunctionTag::kArctan: {
      if (is_real) return real(atan(x, wp));
      // (i/2) (log(1 - iz) - log(1 + iz))
      ComplexBall iz = z.mul_i();
      ComplexBall d = log(one(wp) - iz, wp) - log(one(wp) + iz, wp);
      return d.mul_i().mul_2exp(-1);
    }
    case FunctionTag::kArcsinh:
      if (is_real) return real(asinh(x, wp));
      if (x.is_negative()) return -apply_function(tag, -z, wp);
      return log(z + sqrt(z.sqr() + one(wp), wp), wp);
    case FunctionTag::kArccosh:
      if (is_real && x.lower() >= Dyadic(1)) return real(acosh(x, wp));
      return log(z + sqrt(z + one(wp), wp) * sqrt(z - one(wp), wp), wp);
    case FunctionTag::kArtanh:
      if (is_real && strictly_inside_unit(x)) return real(atanh(x, wp));
      return (log(one(wp) + z, wp) - log(one(wp) - z, wp)).mul_2exp(-1);
  }
  throw InvalidArgument("unknown function tag");
}

Evaluation eval_fn(FunctionTag tag, const ComplexBall& z, Precision prec,
                   Precision cap) {
  if (prec < 2) throw InvalidArgument("precision must be at least 2 bits");
  Precision wp = prec + 32;
  Evaluation result;
  Dyadic previous_rad;
  bool have_previous = false;
  for (;;) {
    ComplexBall value = apply_function(tag, z, wp);
    result.value = value.with_prec(std::max(prec, value.prec()));
    result.working_prec = wp;
    if (meets_accuracy(value.re(), prec) && meets_accuracy(value.im(), prec)) {
      result.low_precision = false;
      return result;
    }
    Dyadic rad = value.rad();
    // Input radius dominates once doubling the precision stops helping.
    bool stalled = have_previous && rad.ldexp(1) > previous_rad;
    if (stalled || wp >= cap) {
      result.low_precision = true;
      return result;
    }
    previous_rad = rad;
    have_previous = true;
    wp = std::min(cap, wp * 2);
  }
}

}  // namespace mahlerlab
