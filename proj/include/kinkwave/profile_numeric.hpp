#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kinkwave/wave_setup.hpp"

namespace kinkwave {

class ClosedFormSolution;

struct ProfileSample {
  double xi = 0.0;
  double stress = 0.0;  // T
  double strain = 0.0;  // g(T)
};

struct ProfileMetadata {
  std::string model;
  std::vector<std::pair<std::string, double>> parameters;
  double nu = 0.0;
  double c = 0.0;
  BoundaryStates boundary{};
  std::string method;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
};

struct Profile {
  std::vector<ProfileSample> samples;
  ProfileMetadata meta;
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = 0.25;
  double xi_min = -15.0;
  double xi_max = 15.0;
  double equilibrium_cutoff = 1e-10;
  int samples = 2001;
};

/// Throws InvalidParameter unless tolerances > 0, xi_min < 0 < xi_max and
/// samples >= 2.
void validate(const IntegratorConfig& config);

/// Width estimate (T- - T+) / max|f| from a scan of the field.
double pilot_width(const ReducedField& field);

/// Default configuration with the domain set to +-20 pilot widths.
IntegratorConfig default_config(const ReducedField& field);

/// Profile of T' = f(T) anchored at T(0) = (T- + T+)/2 on the uniform grid
/// of config.samples points spanning [xi_min, xi_max].
/// Throws NoWave when the existence gate rejects the problem.
Profile integrate_profile(const ReducedField& field, const IntegratorConfig& config);

/// As above, sampled at caller-chosen xi (any order; returned sorted).
Profile integrate_at(const ReducedField& field, const IntegratorConfig& config,
                     std::vector<double> xis);

/// Stress grid clustered like a kink: T = T+ + (T- - T+) / (1 + exp(s)),
/// s uniform on [-20, 20], always containing the midpoint.
std::vector<double> default_stress_grid(const BoundaryStates& boundary, int count);

inline constexpr double kQuadratureClip = 1e-9;
inline constexpr double kQuadratureTolerance = 1e-10;

/// xi(T) = integral from the midpoint to T of ds / f(s), for every T in the
/// grid (clipped to 1e-9 inside the states). Throws BlockedConnection if f
/// vanishes inside the grid.
Profile quadrature_profile(const ReducedField& field, std::vector<double> stress_grid);

using ImplicitRelation = std::function<double(double stress, double xi)>;

inline constexpr double kImplicitBracketMargin = 1e-14;
inline constexpr double kImplicitResidualTolerance = 1e-12;

/// Solves relation(T, xi) = 0 for T on (1e-14, 1 - 1e-14). Throws OutOfRange
/// when the relation does not change sign on that bracket.
double invert_implicit(const ImplicitRelation& relation, double xi);

/// d = (T- - T+) / max|T'|, with T' from central differences on the samples
/// and the peak refined by a parabola through the three largest neighbours.
double measure_width(const Profile& profile);

/// Same definition; the peak is refined with the field itself, which is the
/// exact slope along the profile.
double measure_width(const Profile& profile, const ReducedField& field);

/// Samples a closed-form solution on the given xi, tagged with the field's
/// model, viscosity and speed.
Profile sample_closed_form(const ClosedFormSolution& solution, const ReducedField& field,
                           std::span<const double> xis);

/// Uniform grid of `count` points on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int count);

using ConfigureFn = std::function<IntegratorConfig(const ReducedField&)>;

/// Profiles for several viscosities computed concurrently; results are in the
/// order of `nus`. `configure` picks each run's settings (default_config if
/// empty).
std::vector<Profile> sweep_profiles(const WaveProblem& base, std::span<const double> nus,
                                    const ConfigureFn& configure = {});

}  // namespace kinkwave
