#include "mahlerlab/identities.hpp"

#include <algorithm>

#include "mahlerlab/elementary.hpp"
#include "mahlerlab/errors.hpp"
#include "mahlerlab/functions.hpp"

namespace mahlerlab {
namespace {

using Residual = std::function<ComplexBall(const Ball&, long, Precision)>;

// Small evaluation context at a fixed working precision.
struct Ctx {
  Precision wp;

  ComplexBall c(long v) const { return ComplexBall(Ball(v, wp), Ball(0, wp)); }
  ComplexBall real(const Ball& b) const { return ComplexBall(b.with_prec(wp), Ball(0, wp)); }
  ComplexBall i() const { return ComplexBall::i(wp); }
  ComplexBall f(FunctionTag tag, const Ball& a) const { return apply_function(tag, real(a), wp); }
  ComplexBall exp(const ComplexBall& z) const { return mahlerlab::exp(z, wp); }
  ComplexBall log(const ComplexBall& z, long k) const { return log_branch(z, k, wp); }
  ComplexBall sqrt(const ComplexBall& z) const { return mahlerlab::sqrt(z, wp); }
  ComplexBall inv(const ComplexBall& z) const { return c(1) / z; }
  ComplexBall half(const ComplexBall& z) const { return z.mul_2exp(-1); }
  // e^{i alpha}
  ComplexBall eia(const Ball& a) const { return exp(real(a).mul_i()); }
};

const BivariatePolynomial& arcsin_poly() {
  static const BivariatePolynomial p{{0, 4, 1}, {2, 2, 4}, {0, 2, -2}, {0, 0, 1}};
  return p;
}
const BivariatePolynomial& arctan_stated_poly() {
  static const BivariatePolynomial p{{2, 2, 1}, {2, 1, 2}, {2, 0, 1}, {0, 2, -1}, {0, 1, 2}, {0, 0, -1}};
  return p;
}
const BivariatePolynomial& arctan_corrected_poly() {
  static const BivariatePolynomial p{{2, 2, 1}, {2, 1, 2}, {2, 0, 1}, {0, 2, 1}, {0, 1, -2}, {0, 0, 1}};
  return p;
}
const BivariatePolynomial& arcsinh_poly() {
  static const BivariatePolynomial p{{0, 2, 1}, {1, 1, -2}, {0, 0, -1}};
  return p;
}

// (t - r+)(t - r-) with r = mu +- sqrt(radicand); zero iff t is one of the roots.
ComplexBall root_pair_residual(const ComplexBall& t, const ComplexBall& center, const ComplexBall& root) {
  return (t - (center + root)) * (t - (center - root));
}

// Y = (i - alpha) / (i + alpha)
ComplexBall arctan_y(const Ctx& c, const Ball& a) { return (c.i() - c.real(a)) / (c.i() + c.real(a)); }

std::vector<IdentityCase> build_catalog() {
  std::vector<IdentityCase> cat;
  auto add = [&](std::string id, std::string desc, AlphaDomain dom, bool multi, Expectation exp, Residual r,
                 std::optional<BivariatePolynomial> poly = std::nullopt) {
    cat.push_back({std::move(id), std::move(desc), dom, multi, exp, std::move(r), std::move(poly)});
  };
  using E = Expectation;
  using D = AlphaDomain;

  add("exp-log-roundtrip", "log_k(exp(alpha)) = alpha; holds for k = 0 only", D::kReal, true, E::kVanishes,
      [](const Ball& a, long k, Precision wp) {
        Ctx c{wp};
        return c.log(c.exp(c.real(a)), k) - c.real(a);
      });
  add("sin-exponential", "2i sin(alpha) = e^{i alpha} - e^{-i alpha}", D::kReal, false, E::kVanishes,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.eia(a);
        return c.f(FunctionTag::kSin, a).mul_i().mul_2exp(1) - (t - c.inv(t));
      });
  add("sin-quadratic-root", "t = e^{i alpha} is a root (beta +- sqrt(4 - beta^2))/2, beta = 2i sin(alpha)",
      D::kReal, false, E::kUnderTest, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.eia(a);
        ComplexBall beta = c.f(FunctionTag::kSin, a).mul_i().mul_2exp(1);
        ComplexBall root = c.sqrt(c.c(4) - beta.sqr());
        return root_pair_residual(t, c.half(beta), c.half(root));
      });
  add("arcsin-log-form", "arcsin(alpha) = -i log_k(i alpha + sqrt(1 - alpha^2)); holds for k = 0 only",
      D::kUnitInterval, true, E::kVanishes, [](const Ball& a, long k, Precision wp) {
        Ctx c{wp};
        ComplexBall x = c.real(a);
        ComplexBall inner = x.mul_i() + c.sqrt(c.c(1) - x.sqr());
        return c.f(FunctionTag::kArcsin, a) + c.log(inner, k).mul_i();
      });
  add("arcsin-dependence", "P(X, Y) = Y^4 + 4X^2Y^2 - 2Y^2 + 1 at X = alpha, Y = sqrt(1 - alpha^2) + i alpha",
      D::kUnitInterval, false, E::kVanishes,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall x = c.real(a);
        ComplexBall y = c.sqrt(c.c(1) - x.sqr()) + x.mul_i();
        return dependence_residual(arcsin_poly(), x, y);
      },
      arcsin_poly());
  add("tan-ratio", "i tan(alpha) = (t - 1/t)/(t + 1/t), t = e^{i alpha}", D::kTanNonzeroFinite, false,
      E::kVanishes, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.eia(a);
        return c.f(FunctionTag::kTan, a).mul_i() - (t - c.inv(t)) / (t + c.inv(t));
      });
  add("tan-cubic-paper", "t^3 + t + i beta t - i beta = 0, t = e^{i alpha}, beta = 1/tan(alpha)",
      D::kTanNonzeroFinite, false, E::kUnderTest, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.eia(a);
        ComplexBall beta = c.inv(c.f(FunctionTag::kTan, a));
        return t.sqr() * t + t + (beta * t).mul_i() - beta.mul_i();
      });
  add("tan-quadratic-derived", "t^2 (i - beta) + (i + beta) = 0, t = e^{i alpha}, beta = 1/tan(alpha)",
      D::kTanNonzeroFinite, false, E::kUnderTest, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.eia(a);
        ComplexBall beta = c.inv(c.f(FunctionTag::kTan, a));
        return t.sqr() * (c.i() - beta) + (c.i() + beta);
      });
  add("arctan-log-form", "2i arctan(alpha) = log_k((i - alpha)/(i + alpha)); holds for k = 0 only", D::kReal,
      true, E::kVanishes, [](const Ball& a, long k, Precision wp) {
        Ctx c{wp};
        return c.f(FunctionTag::kArctan, a).mul_i().mul_2exp(1) - c.log(arctan_y(c, a), k);
      });
  add("arctan-dependence-paper",
      "P(X, Y) = X^2Y^2 + 2X^2Y + X^2 - Y^2 + 2Y - 1 at X = alpha, Y = (i - alpha)/(i + alpha)", D::kReal, false,
      E::kUnderTest,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        return dependence_residual(arctan_stated_poly(), c.real(a), arctan_y(c, a));
      },
      arctan_stated_poly());
  add("arctan-dependence-corrected",
      "P(X, Y) = X^2Y^2 + 2X^2Y + X^2 + Y^2 - 2Y + 1 at X = alpha, Y = (i - alpha)/(i + alpha)", D::kReal, false,
      E::kUnderTest,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        return dependence_residual(arctan_corrected_poly(), c.real(a), arctan_y(c, a));
      },
      arctan_corrected_poly());
  add("sinh-root-paper", "t = e^alpha is a root mu +- sqrt(1 - mu^2), mu = sinh(alpha)", D::kReal, false,
      E::kUnderTest, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.exp(c.real(a));
        ComplexBall mu = c.f(FunctionTag::kSinh, a);
        return root_pair_residual(t, mu, c.sqrt(c.c(1) - mu.sqr()));
      });
  add("sinh-root-corrected", "t = e^alpha is a root mu +- sqrt(1 + mu^2), mu = sinh(alpha)", D::kReal, false,
      E::kUnderTest, [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.exp(c.real(a));
        ComplexBall mu = c.f(FunctionTag::kSinh, a);
        return root_pair_residual(t, mu, c.sqrt(c.c(1) + mu.sqr()));
      });
  add("arcsinh-dependence", "P(X, Y) = Y^2 - 2XY - 1 at X = alpha, Y = alpha + sqrt(1 + alpha^2)", D::kReal, false,
      E::kVanishes,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall x = c.real(a);
        return dependence_residual(arcsinh_poly(), x, x + c.sqrt(c.c(1) + x.sqr()));
      },
      arcsinh_poly());
  add("maillet-cosh", "cosh(alpha) = R(e^alpha), R(t) = (t + 1/t)/2", D::kReal, false, E::kVanishes,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.exp(c.real(a));
        return c.f(FunctionTag::kCosh, a) - c.half(t + c.inv(t));
      });
  add("maillet-sinh", "sinh(alpha) = (t - 1/t)/2, t = e^alpha", D::kReal, false, E::kVanishes,
      [](const Ball& a, long, Precision wp) {
        Ctx c{wp};
        ComplexBall t = c.exp(c.real(a));
        return c.f(FunctionTag::kSinh, a) - c.half(t - c.inv(t));
      });
  return cat;
}

// 1 inside, -1 certainly outside, 0 not yet decidable.
int domain_status(AlphaDomain d, const Ball& a, Precision wp) {
  switch (d) {
    case AlphaDomain::kReal:
      return 1;
    case AlphaDomain::kUnitInterval:
      if (a.mag() <= Dyadic(1)) return 1;
      return a.mig() > Dyadic(1) ? -1 : 0;
    case AlphaDomain::kTanNonzeroFinite: {
      Ball s, co;
      sin_cos(a, wp, s, co);
      if (s.is_exact() && s.mid().is_zero()) return -1;
      if (co.is_exact() && co.mid().is_zero()) return -1;
      return s.contains_zero() || co.contains_zero() ? 0 : 1;
    }
  }
  return 0;
}

}  // namespace

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::kVanishes:
      return "Vanishes";
    case Expectation::kNonVanishing:
      return "NonVanishing";
    case Expectation::kUnderTest:
      break;
  }
  return "UnderTest";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kVerified:
      return "Verified";
    case Verdict::kRefuted:
      return "Refuted";
    case Verdict::kUndecided:
      break;
  }
  return "Undecided";
}

SamplePoint SamplePoint::from_spec(const NumberSpec& x) {
  return {to_string(x), [x](Precision p) { return to_ball(x, p); }};
}

const std::vector<IdentityCase>& list_identity_cases() {
  static const std::vector<IdentityCase> catalog = build_catalog();
  return catalog;
}

const IdentityCase& find_identity_case(std::string_view id) {
  for (const IdentityCase& c : list_identity_cases()) {
    if (c.id == id) return c;
  }
  throw InvalidArgument("unknown identity case '" + std::string(id) + "'");
}

std::vector<IdentityVerdict> verify_identity(std::string_view case_id, const SamplePoint& alpha, Precision prec,
                                             long branches, Precision cap) {
  const IdentityCase& c = find_identity_case(case_id);
  if (prec < 2) throw InvalidArgument("precision must be at least 2 bits");
  if (branches < 0) throw InvalidArgument("branch range must be non-negative");
  const Dyadic tolerance = Dyadic::pow2(-static_cast<long>(prec / 2));

  std::vector<IdentityVerdict> out;
  std::vector<long> ks;
  if (c.multivalued) {
    for (long k = -branches; k <= branches; ++k) ks.push_back(k);
  } else {
    ks.push_back(0);
  }
  for (long k : ks) {
    IdentityVerdict v;
    v.case_id = c.id;
    v.alpha = alpha.label;
    if (c.multivalued) v.branch = k;
    v.prec = prec;
    out.push_back(std::move(v));
  }

  std::vector<std::size_t> pending(out.size());
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;
  for (Precision wp = std::max<Precision>(prec + 32, 64);; wp = std::min(cap, 2 * wp)) {
    const Ball a = alpha.at(wp);
    const int dom = domain_status(c.domain, a, wp);
    if (dom < 0) throw DomainError("alpha = " + alpha.label + " is outside the domain of " + c.id);
    std::vector<std::size_t> still;
    for (std::size_t idx : pending) {
      IdentityVerdict& v = out[idx];
      v.working_prec = wp;
      if (dom == 0) {
        still.push_back(idx);
        continue;
      }
      try {
        v.residual = c.residual(a, ks[idx], wp);
      } catch (const DomainError&) {
        still.push_back(idx);  // a denominator met zero at this precision
        continue;
      } catch (const Undecided&) {
        still.push_back(idx);
        continue;
      }
      if (v.residual.excludes_zero()) {
        v.verdict = Verdict::kRefuted;
        v.residual_lower_bound = v.residual.abs().mig();
      } else if (v.residual.rad() <= tolerance) {
        v.verdict = Verdict::kVerified;
      } else {
        still.push_back(idx);
      }
    }
    pending = std::move(still);
    if (pending.empty()) break;
    if (wp >= cap) {
      if (dom == 0) throw DomainError("cannot certify that alpha = " + alpha.label + " lies in the domain of " + c.id);
      break;  // remaining verdicts stay Undecided
    }
  }
  return out;
}

std::vector<IdentityVerdict> verify_identity(std::string_view case_id, const NumberSpec& alpha, Precision prec,
                                             long branches, Precision cap) {
  return verify_identity(case_id, SamplePoint::from_spec(alpha), prec, branches, cap);
}

std::vector<NumberSpec> default_identity_samples() {
  std::vector<NumberSpec> out;
  for (const char* s : {"rational:1/3", "rational:1/2", "rational:2/3", "rational:110001/1000000", "liouville:10"}) {
    out.push_back(parse_number(s));
  }
  return out;
}

}  // namespace mahlerlab
