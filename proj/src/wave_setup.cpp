#include "kinkwave/wave_setup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kinkwave/errors.hpp"

namespace kinkwave {

double wave_speed_squared(const ConstitutiveModel& model, const BoundaryStates& boundary) {
  if (!std::isfinite(boundary.minus) || !std::isfinite(boundary.plus) ||
      boundary.minus == boundary.plus) {
    throw Error(ErrorKind::InvalidParameter, "boundary states must be finite and distinct");
  }
  const double dg = eval_g(model, boundary.minus) - eval_g(model, boundary.plus);
  if (dg == 0.0) {
    throw Error(ErrorKind::DegenerateSpeed, "g(T-) = g(T+): wave speed undefined");
  }
  const double c2 = (boundary.minus - boundary.plus) / dg;
  if (!(c2 > 0.0)) {
    std::ostringstream os;
    os << "c^2 = " << c2
       << " <= 0: neither T- > T+ with g(T-) > g(T+) nor T- < T+ with g(T-) < g(T+) holds";
    throw Error(ErrorKind::NoWave, os.str());
  }
  return c2;
}

double integration_constant(const ConstitutiveModel& model, const BoundaryStates& boundary,
                            double c2) {
  return 0.5 * (boundary.minus + boundary.plus -
                c2 * (eval_g(model, boundary.minus) + eval_g(model, boundary.plus)));
}

ReducedField::ReducedField(const WaveProblem& problem) : problem_(problem) {
  if (!(problem.nu > 0.0) || !std::isfinite(problem.nu)) {
    throw Error(ErrorKind::NoWave,
                "nu must be positive: without viscosity only constant states solve T' = f(T)");
  }
  if (problem.c_sign != 1 && problem.c_sign != -1) {
    throw Error(ErrorKind::InvalidParameter, "c_sign must be +1 or -1");
  }
  validate(problem.model);
  c2_ = wave_speed_squared(problem.model, problem.boundary);
  c_ = problem.c_sign * std::sqrt(c2_);
  a_ = integration_constant(problem.model, problem.boundary, c2_);
  g_minus_ = eval_g(problem.model, problem.boundary.minus);
  g_plus_ = eval_g(problem.model, problem.boundary.plus);
}

double ReducedField::operator()(double stress) const {
  const double g = eval_g(problem_.model, stress);
  return ((stress - problem_.boundary.midpoint()) - c2_ * (g - 0.5 * (g_minus_ + g_plus_))) /
         (problem_.nu * c_);
}

double ReducedField::normalized_form(double stress) const {
  const double g1 = eval_g(problem_.model, 1.0);
  return (g1 * stress - eval_g(problem_.model, stress)) / (problem_.nu * c_ * g1);
}

double ReducedField::derivative(double stress) const {
  return (1.0 - c2_ * eval_g_derivative(problem_.model, stress, 1)) / (problem_.nu * c_);
}

ReducedField reduced_field(const WaveProblem& problem) { return ReducedField(problem); }

ExistenceVerdict existence_gate(const WaveProblem& problem) {
  auto no_wave = [](std::string reason) { return ExistenceVerdict{false, std::move(reason)}; };
  if (!(problem.nu > 0.0)) {
    return no_wave("nu = 0: an elastic solid admits no heteroclinic traveling wave");
  }
  try {
    const ReducedField field(problem);
    const auto& b = problem.boundary;
    const double span = b.plus - b.minus;
    const double required = span > 0.0 ? 1.0 : -1.0;
    const double scale = std::abs(span) / (problem.nu * std::abs(field.speed()));

    double max_abs = 0.0;
    int wrong = 0;
    double first_wrong = 0.0;
    constexpr int n = kEquilibriumScanIntervals;
    for (int i = 1; i < n; ++i) {
      const double stress = b.minus + span * i / n;
      const double value = field(stress);
      if (!std::isfinite(value)) return no_wave("reduced field is not finite inside the range");
      max_abs = std::max(max_abs, std::abs(value));
      if (!(value * required > 0.0)) {
        if (wrong == 0) first_wrong = stress;
        ++wrong;
      }
    }
    if (max_abs <= 1e-12 * scale) {
      return no_wave("reduced field vanishes identically (linear law): T' = 0");
    }
    if (wrong == n - 1) {
      std::ostringstream os;
      os << "f has the wrong sign between the states for c_sign = " << problem.c_sign
         << "; the connection runs in the opposite direction";
      return no_wave(os.str());
    }
    if (wrong > 0) {
      std::ostringstream os;
      os << "interior equilibrium near T = " << first_wrong << " blocks the connection";
      return no_wave(os.str());
    }
    return {true, {}};
  } catch (const Error& e) {
    return no_wave(e.what());
  }
}

int preferred_c_sign(const ConstitutiveModel& model, const BoundaryStates& boundary, double nu) {
  // +1 also when neither direction admits a wave.
  if (existence_gate(WaveProblem{model, nu, boundary, +1}).admissible) return +1;
  return existence_gate(WaveProblem{model, nu, boundary, -1}).admissible ? -1 : +1;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Degenerate: return "degenerate";
  }
  return "unknown";
}

Stability classify(double eigenvalue) {
  if (eigenvalue > kEigenvalueTolerance) return Stability::Unstable;
  if (eigenvalue < -kEigenvalueTolerance) return Stability::Stable;
  return Stability::Degenerate;
}

namespace {

double safe_eval(const ReducedField& field, double stress) {
  try {
    return field(stress);
  } catch (const Error&) {
    return NAN;
  }
}

double bisect(const ReducedField& field, double lo, double flo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = field(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (std::abs(fm) <= 1e-12 && hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EquilibriumReport find_equilibria(const ReducedField& field, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorKind::Domain, "equilibrium search interval must be finite with lo < hi");
  }
  EquilibriumReport report;
  constexpr int n = kEquilibriumScanIntervals;
  std::vector<double> nodes(n + 1), values(n + 1);
  double max_abs = 0.0;
  for (int i = 0; i <= n; ++i) {
    nodes[i] = lo + (hi - lo) * i / n;
    values[i] = safe_eval(field, nodes[i]);
    if (std::isfinite(values[i])) max_abs = std::max(max_abs, std::abs(values[i]));
  }
  const auto& b = field.boundary();
  const double scale = std::abs(b.minus - b.plus) / (field.nu() * std::abs(field.speed()));
  if (max_abs <= 1e-12 * scale) {
    report.field_vanishes = true;
    return report;
  }

  std::vector<double> roots;
  for (int i = 0; i <= n; ++i) {
    if (!std::isfinite(values[i])) continue;
    if (std::abs(values[i]) <= 1e-12) {
      roots.push_back(nodes[i]);
      continue;
    }
    if (i < n && std::isfinite(values[i + 1]) && std::abs(values[i + 1]) > 1e-12 &&
        (values[i] > 0.0) != (values[i + 1] > 0.0)) {
      roots.push_back(bisect(field, nodes[i], values[i], nodes[i + 1]));
    }
  }

  // Snap to the exact boundary states, then merge duplicates.
  for (double& r : roots) {
    for (double state : {b.minus, b.plus}) {
      if (std::abs(r - state) <= 1e-9) r = state;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) <= 1e-9; }),
              roots.end());

  for (double r : roots) {
    const double lambda = field.derivative(r);
    report.points.push_back({r, lambda, classify(lambda)});
  }
  return report;
}

EquilibriumReport find_equilibria(const ReducedField& field) {
  const auto& b = field.boundary();
  return find_equilibria(field, std::min(b.minus, b.plus) - 1.25,
                         std::max(b.minus, b.plus) + 1.25);
}

}  // namespace kinkwave
