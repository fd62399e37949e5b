#include "kinkwave/profile_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/integrator.hpp"
#include "kinkwave/quadrature.hpp"
#include "kinkwave/roots.hpp"

namespace kinkwave {
namespace {

ProfileMetadata metadata_for(const ReducedField& field, std::string method, double rel_tol,
                             double abs_tol) {
  ProfileMetadata meta;
  meta.model = model_name(field.model());
  meta.parameters = model_parameters(field.model());
  meta.nu = field.nu();
  meta.c = field.speed();
  meta.boundary = field.boundary();
  meta.method = std::move(method);
  meta.rel_tol = rel_tol;
  meta.abs_tol = abs_tol;
  return meta;
}

void require_wave(const ReducedField& field) {
  const auto verdict = existence_gate(field.problem());
  if (!verdict.admissible) throw Error(ErrorKind::NoWave, verdict.reason);
}

double max_abs_field(const ReducedField& field, double* where = nullptr) {
  const auto& b = field.boundary();
  double best = 0.0;
  constexpr int n = kEquilibriumScanIntervals;
  for (int i = 1; i < n; ++i) {
    const double s = b.minus + (b.plus - b.minus) * i / n;
    const double v = std::abs(field(s));
    if (v > best) {
      best = v;
      if (where) *where = s;
    }
  }
  return best;
}

}  // namespace

void validate(const IntegratorConfig& config) {
  if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0) || !(config.max_step > 0.0) ||
      !(config.equilibrium_cutoff > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "integrator tolerances and step must be positive");
  }
  if (!(config.xi_min < 0.0) || !(config.xi_max > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "integration domain must satisfy xi_min < 0 < xi_max");
  }
  if (config.samples < 2) throw Error(ErrorKind::InvalidParameter, "samples must be >= 2");
}

double pilot_width(const ReducedField& field) {
  const auto& b = field.boundary();
  const double peak = max_abs_field(field);
  if (!(peak > 0.0)) throw Error(ErrorKind::Degenerate, "reduced field vanishes");
  return std::abs(b.minus - b.plus) / peak;
}

IntegratorConfig default_config(const ReducedField& field) {
  IntegratorConfig config;
  const double d = pilot_width(field);
  config.xi_min = -20.0 * d;
  config.xi_max = 20.0 * d;
  config.max_step = d / 10.0;
  return config;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    // Weighted form keeps the grid symmetric, so a centered grid hits 0 exactly.
    const double w = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    grid[i] = count == 1 ? lo : (1.0 - w) * lo + w * hi;
  }
  return grid;
}

Profile integrate_at(const ReducedField& field, const IntegratorConfig& config,
                     std::vector<double> xis) {
  validate(config);
  require_wave(field);
  std::sort(xis.begin(), xis.end());

  const auto& b = field.boundary();
  const double anchor = b.midpoint();
  const double margin = 1e-6;
  StepControl control{config.rel_tol, config.abs_tol, config.max_step};

  std::vector<double> forward_t, backward_t;
  for (double xi : xis) {
    if (xi >= 0.0) forward_t.push_back(xi);
  }
  for (auto it = xis.rbegin(); it != xis.rend(); ++it) {
    if (*it < 0.0) backward_t.push_back(-*it);
  }

  const double lower = std::min(b.minus, b.plus) - margin;
  const double upper = std::max(b.minus, b.plus) + margin;
  const auto forward = integrate_scalar([&](double s) { return field(s); }, anchor, forward_t,
                                        control,
                                        {b.plus, config.equilibrium_cutoff, lower, upper});
  const auto backward = integrate_scalar([&](double s) { return -field(s); }, anchor,
                                         backward_t, control,
                                         {b.minus, config.equilibrium_cutoff, lower, upper});

  Profile profile;
  profile.meta = metadata_for(field, "ode", config.rel_tol, config.abs_tol);
  profile.samples.reserve(xis.size());
  for (std::size_t i = backward.values.size(); i-- > 0;) {
    const double s = backward.values[i];
    profile.samples.push_back({-backward_t[i], s, eval_g(field.model(), s)});
  }
  for (std::size_t i = 0; i < forward.values.size(); ++i) {
    const double s = forward.values[i];
    profile.samples.push_back({forward_t[i], s, eval_g(field.model(), s)});
  }
  return profile;
}

Profile integrate_profile(const ReducedField& field, const IntegratorConfig& config) {
  validate(config);
  return integrate_at(field, config, uniform_grid(config.xi_min, config.xi_max, config.samples));
}

std::vector<double> default_stress_grid(const BoundaryStates& boundary, int count) {
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (double s : uniform_grid(-20.0, 20.0, std::max(count, 2))) {
    grid.push_back(boundary.plus + (boundary.minus - boundary.plus) / (1.0 + std::exp(s)));
  }
  if (std::find(grid.begin(), grid.end(), boundary.midpoint()) == grid.end()) {
    grid.push_back(boundary.midpoint());
  }
  return grid;
}

Profile quadrature_profile(const ReducedField& field, std::vector<double> stress_grid) {
  require_wave(field);
  const auto& b = field.boundary();
  const double anchor = b.midpoint();
  const double lo = std::min(b.minus, b.plus) + kQuadratureClip;
  const double hi = std::max(b.minus, b.plus) - kQuadratureClip;
  for (double& s : stress_grid) s = std::clamp(s, lo, hi);
  stress_grid.push_back(anchor);
  std::sort(stress_grid.begin(), stress_grid.end());
  stress_grid.erase(std::unique(stress_grid.begin(), stress_grid.end()), stress_grid.end());

  const double orientation = field(anchor) > 0.0 ? 1.0 : -1.0;
  for (double s : stress_grid) {
    const double v = field(s);
    if (!(v * orientation > 0.0)) {
      std::ostringstream os;
      os << "reduced field vanishes or changes sign at T = " << s;
      throw Error(ErrorKind::BlockedConnection, os.str());
    }
  }

  const auto inverse = [&](double s) { return 1.0 / field(s); };
  const auto m = static_cast<std::size_t>(
      std::lower_bound(stress_grid.begin(), stress_grid.end(), anchor) - stress_grid.begin());
  std::vector<double> xi(stress_grid.size(), 0.0);
  for (std::size_t i = m + 1; i < stress_grid.size(); ++i) {
    xi[i] = xi[i - 1] +
            integrate_adaptive(inverse, stress_grid[i - 1], stress_grid[i], 1e-12, 1e-12).value;
  }
  for (std::size_t i = m; i-- > 0;) {
    xi[i] = xi[i + 1] +
            integrate_adaptive(inverse, stress_grid[i + 1], stress_grid[i], 1e-12, 1e-12).value;
  }

  Profile profile;
  profile.meta = metadata_for(field, "quadrature", kQuadratureTolerance, kQuadratureTolerance);
  for (std::size_t i = 0; i < stress_grid.size(); ++i) {
    profile.samples.push_back({xi[i], stress_grid[i], eval_g(field.model(), stress_grid[i])});
  }
  std::sort(profile.samples.begin(), profile.samples.end(),
            [](const ProfileSample& a, const ProfileSample& c) { return a.xi < c.xi; });
  return profile;
}

double invert_implicit(const ImplicitRelation& relation, double xi) {
  const double lo = kImplicitBracketMargin;
  const double hi = 1.0 - kImplicitBracketMargin;
  const double flo = relation(lo, xi);
  const double fhi = relation(hi, xi);
  if (!((flo < 0.0) != (fhi < 0.0)) && flo != 0.0 && fhi != 0.0) {
    std::ostringstream os;
    os << "xi = " << xi << " maps outside (" << lo << ", " << hi << ")";
    throw Error(ErrorKind::OutOfRange, os.str());
  }
  return find_root_bracketed([&](double s) { return relation(s, xi); }, lo, hi,
                             kImplicitResidualTolerance);
}

namespace {

std::vector<double> central_slopes(const Profile& profile) {
  const auto& p = profile.samples;
  std::vector<double> slopes(p.size(), 0.0);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double h0 = p[i].xi - p[i - 1].xi;
    const double h1 = p[i + 1].xi - p[i].xi;
    slopes[i] = (h0 * h0 * p[i + 1].stress - h1 * h1 * p[i - 1].stress +
                 (h1 * h1 - h0 * h0) * p[i].stress) /
                (h0 * h1 * (h0 + h1));
  }
  return slopes;
}

std::size_t peak_index(const std::vector<double>& slopes) {
  std::size_t best = 1;
  for (std::size_t i = 1; i + 1 < slopes.size(); ++i) {
    if (std::abs(slopes[i]) > std::abs(slopes[best])) best = i;
  }
  return best;
}

void require_samples(const Profile& profile) {
  if (profile.samples.size() < 16) {
    throw Error(ErrorKind::InvalidParameter, "width measurement needs at least 16 samples");
  }
}

double jump(const Profile& profile) {
  return std::abs(profile.meta.boundary.minus - profile.meta.boundary.plus);
}

}  // namespace

double measure_width(const Profile& profile) {
  require_samples(profile);
  const auto slopes = central_slopes(profile);
  const std::size_t i = peak_index(slopes);
  double peak = std::abs(slopes[i]);
  if (!(peak > 0.0)) throw Error(ErrorKind::Degenerate, "flat profile: max |T'| = 0");
  if (i >= 2 && i + 2 < slopes.size()) {
    const auto& p = profile.samples;
    const double x0 = p[i - 1].xi, x1 = p[i].xi, x2 = p[i + 1].xi;
    const double y0 = std::abs(slopes[i - 1]), y1 = peak, y2 = std::abs(slopes[i + 1]);
    // Vertex of the parabola through the three points.
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (curvature < 0.0) {
      const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
      if (vertex > x0 && vertex < x2) {
        peak = y1 + d01 * (vertex - x1) + curvature * (vertex - x0) * (vertex - x1);
      }
    }
  }
  return jump(profile) / peak;
}

double measure_width(const Profile& profile, const ReducedField& field) {
  require_samples(profile);
  const auto& p = profile.samples;
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = std::abs(field(p[i].stress));
    if (v > best_value) best_value = v, best = i;
  }
  if (!(best_value > 0.0)) throw Error(ErrorKind::Degenerate, "flat profile: max |T'| = 0");
  const double a = p[best == 0 ? 0 : best - 1].stress;
  const double c = p[std::min(best + 1, p.size() - 1)].stress;
  const auto [arg, peak] = golden_maximize([&](double s) { return std::abs(field(s)); },
                                           std::min(a, c), std::max(a, c));
  return jump(profile) / std::max(peak, best_value);
}

Profile sample_closed_form(const ClosedFormSolution& solution, const ReducedField& field,
                           std::span<const double> xis) {
  Profile profile;
  profile.meta = metadata_for(field, "closed-form", 0.0, 0.0);
  for (double xi : xis) {
    const double s = solution.stress(xi);
    profile.samples.push_back({xi, s, eval_g(field.model(), s)});
  }
  std::sort(profile.samples.begin(), profile.samples.end(),
            [](const ProfileSample& a, const ProfileSample& c) { return a.xi < c.xi; });
  return profile;
}

std::vector<Profile> sweep_profiles(const WaveProblem& base, std::span<const double> nus,
                                    const ConfigureFn& configure) {
  std::vector<std::future<Profile>> jobs;
  jobs.reserve(nus.size());
  for (double nu : nus) {
    jobs.push_back(std::async(std::launch::async, [base, nu, &configure] {
      WaveProblem problem = base;
      problem.nu = nu;
      const ReducedField field(problem);
      return integrate_profile(field, configure ? configure(field) : default_config(field));
    }));
  }
  std::vector<Profile> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace kinkwave
