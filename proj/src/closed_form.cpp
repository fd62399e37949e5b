#include "kinkwave/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kinkwave/errors.hpp"
#include "kinkwave/profile_numeric.hpp"
#include "kinkwave/roots.hpp"

namespace kinkwave {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

ReducedField normalized_field(const ConstitutiveModel& model, double nu, int c_sign) {
  return ReducedField(WaveProblem{model, nu, BoundaryStates{1.0, 0.0}, c_sign});
}

// Implicit kinds saturate at the boundary states once the root leaves the
// representable bracket.
double invert_or_saturate(const ImplicitRelation& relation, double xi) {
  try {
    return invert_implicit(relation, xi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange) throw;
    // relation is increasing in T for the cubic forms and decreasing for
    // Model B; compare against the value at the lower end of the bracket.
    const double low = relation(kImplicitBracketMargin, xi);
    const double high = relation(1.0 - kImplicitBracketMargin, xi);
    const bool increasing = high > low;
    return (low > 0.0) == increasing ? 0.0 : 1.0;
  }
}

}  // namespace

const char* to_string(ClosedFormKind kind) {
  switch (kind) {
    case ClosedFormKind::Logistic: return "logistic";
    case ClosedFormKind::CubicImplicit: return "cubic-implicit";
    case ClosedFormKind::CubicExplicit: return "cubic-explicit";
    case ClosedFormKind::ModelAN1: return "modelA-n1";
    case ClosedFormKind::ModelBR2: return "modelB-r2";
  }
  return "unknown";
}

RiccatiCoefficients riccati_coefficients(const Quadratic& model, const BoundaryStates& boundary,
                                         double nu, double c) {
  const ReducedField field(WaveProblem{model, nu, boundary, c < 0.0 ? -1 : 1});
  if (std::abs(field.speed() - c) > 1e-10 * std::abs(c)) {
    std::ostringstream os;
    os << "c = " << c << " is inconsistent with c^2 = " << field.speed_squared();
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  RiccatiCoefficients out;
  const double f0 = field(0.0);
  const double fp = field(1.0);
  const double fm = field(-1.0);
  out.a0 = f0;
  out.a1 = 0.5 * (fp - fm);
  out.a2 = 0.5 * (fp + fm) - f0;
  const double sum = boundary.minus + boundary.plus;
  if (sum == 0.0) {
    out.theta = NAN;
  } else {
    const double sq = boundary.minus * boundary.minus + boundary.plus * boundary.plus;
    out.theta = (model.gp0 + 0.5 * model.gpp0 * sq / sum) / (model.gp0 + 0.5 * model.gpp0 * sum);
  }
  return out;
}

CubicShape cubic_shape(const Cubic& model, double nu, int c_sign) {
  if (model.gppp0 == 0.0) {
    throw Error(ErrorKind::Degenerate, "cubic shape requires g'''(0) != 0");
  }
  const ReducedField field = normalized_field(model, nu, c_sign);
  // f(T) / (T (1 - T)) = rate (T + b) is linear in T.
  const double upper = field(0.5) / 0.25;
  const double lower = field(-0.5) / -0.75;
  CubicShape shape;
  shape.rate = upper - lower;
  shape.b = upper / shape.rate - 0.5;
  return shape;
}

ClosedFormSolution ClosedFormSolution::logistic(double a2) {
  if (!(a2 > 0.0)) {
    throw Error(ErrorKind::NoWave, "logistic kink from 1 to 0 requires a2 > 0");
  }
  return {ClosedFormKind::Logistic, a2, 0.0};
}

ClosedFormSolution ClosedFormSolution::cubic(const CubicShape& shape) {
  if (!(shape.b > 0.0)) {
    throw Error(ErrorKind::NoWave,
                "cubic implicit form needs b > 0; otherwise -b lies in [0, 1) or the "
                "factor T + b changes sign");
  }
  if (!(shape.rate < 0.0)) {
    throw Error(ErrorKind::NoWave, "cubic kink from 1 to 0 requires rate < 0");
  }
  return {ClosedFormKind::CubicImplicit, shape.rate, shape.b};
}

ClosedFormSolution ClosedFormSolution::cubic_explicit(double rate) {
  if (!(rate < 0.0)) throw Error(ErrorKind::NoWave, "explicit cubic kink requires rate < 0");
  return {ClosedFormKind::CubicExplicit, rate, 1.0};
}

ClosedFormSolution ClosedFormSolution::model_a_n1(double rate) {
  if (!(rate < 0.0)) throw Error(ErrorKind::NoWave, "Model A (n = 1) kink requires kappa < 0");
  return {ClosedFormKind::ModelAN1, rate, 1.0};
}

ClosedFormSolution ClosedFormSolution::model_b_r2(double nu_c) {
  if (!(nu_c > 0.0)) {
    throw Error(ErrorKind::NoWave,
                "Model B (r = 2) with c < 0 tends to 0 as xi -> -inf: limits reversed");
  }
  return {ClosedFormKind::ModelBR2, nu_c, 0.0};
}

double ClosedFormSolution::stress(double xi) const {
  switch (kind_) {
    case ClosedFormKind::Logistic: {
      const double x = rate_ * xi;
      if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
      }
      return 1.0 / (1.0 + std::exp(x));
    }
    case ClosedFormKind::CubicExplicit:
    case ClosedFormKind::ModelAN1:
      return kinkwave::cubic_explicit(rate_, xi);
    case ClosedFormKind::CubicImplicit:
    case ClosedFormKind::ModelBR2:
      return invert_or_saturate(
          [this](double stress, double x) { return log_relation(stress, x); }, xi);
  }
  return NAN;
}

double ClosedFormSolution::slope_at_stress(double s) const {
  switch (kind_) {
    case ClosedFormKind::Logistic:
      return -rate_ * s * (1.0 - s);
    case ClosedFormKind::CubicImplicit:
      return rate_ * s * (1.0 - s) * (s + b_);
    case ClosedFormKind::CubicExplicit:
    case ClosedFormKind::ModelAN1:
      return rate_ * s * (1.0 - s * s);
    case ClosedFormKind::ModelBR2:
      return s * (1.0 - kSqrt2 / std::sqrt(1.0 + s * s)) / rate_;
  }
  return NAN;
}

double ClosedFormSolution::log_relation(double s, double xi) const {
  switch (kind_) {
    case ClosedFormKind::Logistic:
      return std::log((1.0 - s) / s) - rate_ * xi;
    case ClosedFormKind::CubicImplicit:
    case ClosedFormKind::CubicExplicit:
    case ClosedFormKind::ModelAN1:
      return (1.0 + b_) * std::log(s) - b_ * std::log1p(-s) - std::log(s + b_) +
             std::log1p(2.0 * b_) - b_ * (1.0 + b_) * rate_ * xi;
    case ClosedFormKind::ModelBR2:
      return log_h_function(s) - log_h_function(0.5) - xi / rate_;
  }
  return NAN;
}

ClosedFormSolution logistic_profile(double a2) { return ClosedFormSolution::logistic(a2); }

ClosedFormSolution quadratic_profile(const Quadratic& model, double nu, int c_sign) {
  const ReducedField field = normalized_field(model, nu, c_sign);
  const auto coeffs = riccati_coefficients(model, field.boundary(), nu, field.speed());
  return logistic_profile(coeffs.a2);
}

double effective_width(const ClosedFormSolution& solution) {
  auto magnitude = [&](double s) { return std::abs(solution.slope_at_stress(s)); };
  constexpr int kScan = 1000;
  int best = 1;
  double best_value = 0.0;
  for (int i = 1; i < kScan; ++i) {
    const double v = magnitude(static_cast<double>(i) / kScan);
    if (v > best_value) best_value = v, best = i;
  }
  const auto [arg, peak] = golden_maximize(magnitude, static_cast<double>(best - 1) / kScan,
                                           static_cast<double>(best + 1) / kScan);
  if (!(peak > 0.0)) throw Error(ErrorKind::Degenerate, "flat profile: max |T'| = 0");
  return 1.0 / peak;
}

double cubic_implicit_relation(const CubicShape& shape, double stress, double xi) {
  if (!(stress > 0.0 && stress < 1.0)) {
    throw Error(ErrorKind::Domain, "cubic implicit relation requires T in (0, 1)");
  }
  if (!(shape.b > 0.0)) throw Error(ErrorKind::Domain, "cubic implicit relation requires b > 0");
  const double b = shape.b;
  const double left = std::pow(stress, 1.0 + b) / (std::pow(1.0 - stress, b) * (stress + b));
  const double right = std::exp(b * (1.0 + b) * shape.rate * xi) / (1.0 + 2.0 * b);
  return left - right;
}

double cubic_explicit(double rate, double xi) {
  if (!(rate < 0.0)) throw Error(ErrorKind::NoWave, "explicit cubic kink requires rate < 0");
  const double x = rate * xi;
  if (x > 0.0) return 1.0 / std::sqrt(3.0 * std::exp(-2.0 * x) + 1.0);
  const double e = std::exp(x);
  return e / std::sqrt(3.0 + e * e);
}

double model_a_n1_rate(const ModelA& model, double nu, int c_sign) {
  if (model.n != 1.0) throw Error(ErrorKind::InvalidParameter, "closed form requires n = 1");
  if (!(model.alpha > 0.0) || !(model.gamma > 0.0)) {
    throw Error(ErrorKind::NoWave, "Model A (n = 1) kink requires alpha > 0 and gamma > 0");
  }
  const auto adm = check_g1_positive(model);
  if (!adm.admissible) {
    std::ostringstream os;
    os << "g(1) = " << adm.g1 << " <= 0";
    throw Error(ErrorKind::NoWave, os.str());
  }
  const ReducedField field = normalized_field(model, nu, c_sign);
  return field(0.5) / (0.5 * 0.75);
}

ClosedFormSolution model_a_n1_profile(const ModelA& model, double nu, int c_sign) {
  return ClosedFormSolution::model_a_n1(model_a_n1_rate(model, nu, c_sign));
}

double log_h_function(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorKind::Domain, "H(s) requires s > 0");
  const double root = std::sqrt(1.0 + s * s);
  return 2.0 * std::log(std::abs((1.0 - s) * (1.0 + s))) - std::log(s) -
         2.0 * std::log(root + kSqrt2) + kSqrt2 * std::log((root + 1.0) / s);
}

double h_function(double s) { return std::exp(log_h_function(s)); }

ClosedFormSolution model_b_r2_profile(double nu, int c_sign) {
  if (!(nu > 0.0)) throw Error(ErrorKind::NoWave, "nu must be positive");
  const double c = c_sign * std::pow(2.0, 0.25);
  return ClosedFormSolution::model_b_r2(nu * c);
}

std::optional<ClosedFormSolution> closed_form_for(const ReducedField& field) {
  if (!field.boundary().normalized()) return std::nullopt;
  const auto& model = field.model();
  const int sign = field.speed() > 0.0 ? 1 : -1;
  try {
    if (const auto* q = std::get_if<Quadratic>(&model)) {
      return quadratic_profile(*q, field.nu(), sign);
    }
    if (const auto* c = std::get_if<Cubic>(&model)) {
      if (c->gppp0 == 0.0) return std::nullopt;
      const auto shape = cubic_shape(*c, field.nu(), sign);
      if (c->gpp0 == 0.0) return ClosedFormSolution::cubic_explicit(shape.rate);
      return ClosedFormSolution::cubic(shape);
    }
    if (const auto* a = std::get_if<ModelA>(&model)) {
      if (a->n != 1.0) return std::nullopt;
      return model_a_n1_profile(*a, field.nu(), sign);
    }
    if (const auto* b = std::get_if<ModelB>(&model)) {
      if (b->r != 2.0) return std::nullopt;
      return model_b_r2_profile(field.nu(), sign);
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace kinkwave
