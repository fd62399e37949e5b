#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinkwave/constitutive.hpp"
#include "kinkwave/profile_numeric.hpp"
#include "kinkwave/wave_setup.hpp"

namespace kinkwave {

enum class ProfileMethod { ClosedForm, Ode, Quadrature };
const char* to_string(ProfileMethod method);
ProfileMethod parse_method(std::string_view text);

/// Everything a CLI run needs. Defaults: nu = 0.5, boundary (1, 0), c_sign
/// chosen by the existence gate, ODE method, catalog parameters.
struct RunConfig {
  std::string model_name = "quadratic";
  std::map<std::string, double> params;  // overrides of the catalog defaults
  std::vector<double> nu{0.5};
  BoundaryStates boundary{};
  std::optional<int> c_sign;
  ProfileMethod method = ProfileMethod::Ode;
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  std::optional<double> max_step;
  std::optional<double> xi_min;
  std::optional<double> xi_max;
  double equilibrium_cutoff = 1e-10;
  int samples = 2001;
  std::string profile_path = "profile.csv";
  std::string out_dir = "sweep";
  std::string report_path;

  ConstitutiveModel model() const { return make_model(model_name, params); }
  /// c_sign if set, otherwise the sign the existence gate prefers.
  WaveProblem problem(double nu_value) const;
  IntegratorConfig integrator(const ReducedField& field) const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the sectioned key = value format ([model], [wave], [numeric],
/// [output]). Unknown keys and malformed values throw Error(Parse) with the
/// line number; parameter range violations throw with the field name.
RunConfig parse_config(std::string_view text);

/// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// "quadratic" or "quadratic:gp0=1,gpp0=-0.6" from the command line.
void apply_model_spec(RunConfig& config, std::string_view spec);

}  // namespace kinkwave
