#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kinkwave {

// Constitutive laws g(T) relating the strain measure to the stress. All
// parameters are dimensionless.

struct Linear {
  double gp0 = 1.0;
};

struct Quadratic {
  double gp0 = 1.0;
  double gpp0 = -0.6;
};

struct Cubic {
  double gp0 = 1.0;
  double gpp0 = 0.0;
  double gppp0 = 0.5;
};

/// g(T) = beta*T + alpha*(1 + gamma*T^2/2)^n * T
struct ModelA {
  double alpha = 0.5;
  double beta = -0.01;
  double gamma = 1.0;
  double n = -0.5;
};

/// g(T) = T / (1 + |T|^r)^(1/r)
struct ModelB {
  double r = 2.0;
};

/// g(T) = alpha*{[1 - exp(-beta*T/(1 + delta*|T|))] + gamma*T/(1 + |T|)}
struct ModelC {
  double alpha = 0.5;
  double beta = 0.01;
  double gamma = 1.0;
  double delta = 1.0;
};

/// g(T) = alpha*(1 - 1/(1 + T/(1 + delta*|T|))) + beta*(1 + 1/(1 + gamma*T^2))^n * T
struct ModelD {
  double alpha = 0.5;
  double beta = 0.01;
  double gamma = 1.0;
  double delta = 1.0;
  double n = 0.5;
};

using ConstitutiveModel =
    std::variant<Linear, Quadratic, Cubic, ModelA, ModelB, ModelC, ModelD>;

/// Catalog name of the variant ("linear", "quadratic", ..., "modelD").
std::string model_name(const ConstitutiveModel& model);

/// Ordered (name, value) pairs of the variant's parameters.
std::vector<std::pair<std::string, double>> model_parameters(
    const ConstitutiveModel& model);

/// Parameter names accepted by the named variant, in declaration order.
std::vector<std::string> parameter_names(std::string_view name);

/// Names of every catalog law.
const std::vector<std::string>& catalog_names();

/// Builds a variant from its catalog name. Parameters not given keep the
/// catalog defaults; unknown names throw Error(InvalidParameter).
ConstitutiveModel make_model(std::string_view name,
                             const std::map<std::string, double>& params = {});

/// Throws Error(InvalidParameter) naming the offending field.
void validate(const ConstitutiveModel& model);

double eval_g(const ConstitutiveModel& model, double stress);

/// Analytic derivative of g of order 1, 2 or 3. At T = 0 the one-sided
/// (right-hand) derivative is returned for laws containing |T|.
double eval_g_derivative(const ConstitutiveModel& model, double stress,
                         int order);

struct Admissibility {
  double g1 = 0.0;
  bool admissible = false;
  // Models C and D lose the small-strain property for large compressive
  // stress; set when |g(T)| > 1 somewhere on [-compressive_probe_limit, 0).
  bool compressive_advisory = false;
  double compressive_probe_stress = 0.0;
};

inline constexpr double compressive_probe_limit = 100.0;

Admissibility check_g1_positive(const ConstitutiveModel& model);

struct PhysicalScales {
  double length = 1.0;          // L
  double stress = 1.0;          // mu
  double density = 1.0;         // rho
  double nu_dimensional = 0.0;  // viscosity time scale
};

struct PhysicalState {
  double x = 0.0;
  double t = 0.0;
  double stress = 0.0;
  double displacement = 0.0;
  double nu = 0.0;
};

/// nu_dimensional scaled like any other viscosity.
double dimensionless_viscosity(const PhysicalScales& scales);

PhysicalState nondimensionalize(const PhysicalScales& scales,
                                const PhysicalState& state);
PhysicalState dimensionalize(const PhysicalScales& scales,
                             const PhysicalState& state);

}  // namespace kinkwave
