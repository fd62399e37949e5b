#include "kinkwave/constitutive.hpp"

#include <cmath>
#include <sstream>

#include "kinkwave/errors.hpp"
#include "kinkwave/jet.hpp"

namespace kinkwave {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Laws written once over the scalar type; instantiated with double for
// values and with detail::Jet for derivatives.
template <class S>
S law(const Linear& m, const S& T) {
  return m.gp0 * T;
}

template <class S>
S law(const Quadratic& m, const S& T) {
  return m.gp0 * T + 0.5 * m.gpp0 * (T * T);
}

template <class S>
S law(const Cubic& m, const S& T) {
  return m.gp0 * T + 0.5 * m.gpp0 * (T * T) + (m.gppp0 / 6.0) * (T * T * T);
}

template <class S>
S law(const ModelA& m, const S& T) {
  using std::pow;
  return m.beta * T + m.alpha * (pow(1.0 + 0.5 * m.gamma * (T * T), m.n) * T);
}

template <class S>
S law(const ModelC& m, const S& T) {
  using std::abs;
  using std::exp;
  const S decay = exp(-(m.beta * T) / (1.0 + m.delta * abs(T)));
  return m.alpha * ((1.0 - decay) + m.gamma * T / (1.0 + abs(T)));
}

template <class S>
S law(const ModelD& m, const S& T) {
  using std::abs;
  using std::pow;
  const S limited = T / (1.0 + m.delta * abs(T));
  const S bracket = 1.0 + 1.0 / (1.0 + m.gamma * (T * T));
  return m.alpha * (1.0 - 1.0 / (1.0 + limited)) + m.beta * (pow(bracket, m.n) * T);
}

// Model B has |T|^r, which Taylor arithmetic cannot expand at T = 0 for
// non-integer r, so its derivatives are written out.
double model_b_value(const ModelB& m, double T) {
  return T / std::pow(1.0 + std::pow(std::abs(T), m.r), 1.0 / m.r);
}

double model_b_derivative(const ModelB& m, double T, int order) {
  const double r = m.r;
  const double s = T < 0.0 ? -1.0 : 1.0;
  const double a = std::abs(T);
  const double w = 1.0 + std::pow(a, r);
  const double e = (1.0 + r) / r;
  switch (order) {
    case 1:
      return std::pow(w, -e);
    case 2:
      return -(1.0 + r) * s * std::pow(a, r - 1.0) * std::pow(w, -e - 1.0);
    default: {
      const double tail = (e + 1.0) * r * std::pow(a, 2.0 * r - 2.0) * std::pow(w, -e - 2.0);
      // (r - 1)|T|^(r-2) vanishes identically for r = 1.
      const double head = r == 1.0 ? 0.0 : (r - 1.0) * std::pow(a, r - 2.0) * std::pow(w, -e - 1.0);
      return -(1.0 + r) * (head - tail);
    }
  }
}

double checked(const ConstitutiveModel& model, double value, double stress) {
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << model_name(model) << ": non-finite constitutive value at T = " << stress;
    throw Error(ErrorKind::DomainOverflow, os.str());
  }
  return value;
}

void require(bool ok, const char* model, const char* field, const char* rule) {
  if (!ok) {
    throw Error(ErrorKind::InvalidParameter,
                std::string(model) + "." + field + " must be " + rule);
  }
}

}  // namespace

std::string model_name(const ConstitutiveModel& model) {
  return std::visit(Overloaded{
                        [](const Linear&) { return "linear"; },
                        [](const Quadratic&) { return "quadratic"; },
                        [](const Cubic&) { return "cubic"; },
                        [](const ModelA&) { return "modelA"; },
                        [](const ModelB&) { return "modelB"; },
                        [](const ModelC&) { return "modelC"; },
                        [](const ModelD&) { return "modelD"; },
                    },
                    model);
}

std::vector<std::pair<std::string, double>> model_parameters(
    const ConstitutiveModel& model) {
  using P = std::vector<std::pair<std::string, double>>;
  return std::visit(
      Overloaded{
          [](const Linear& m) { return P{{"gp0", m.gp0}}; },
          [](const Quadratic& m) { return P{{"gp0", m.gp0}, {"gpp0", m.gpp0}}; },
          [](const Cubic& m) {
            return P{{"gp0", m.gp0}, {"gpp0", m.gpp0}, {"gppp0", m.gppp0}};
          },
          [](const ModelA& m) {
            return P{{"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma}, {"n", m.n}};
          },
          [](const ModelB& m) { return P{{"r", m.r}}; },
          [](const ModelC& m) {
            return P{{"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma},
                     {"delta", m.delta}};
          },
          [](const ModelD& m) {
            return P{{"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma},
                     {"delta", m.delta}, {"n", m.n}};
          },
      },
      model);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "linear", "quadratic", "cubic", "modelA", "modelB", "modelC", "modelD"};
  return names;
}

std::vector<std::string> parameter_names(std::string_view name) {
  std::vector<std::string> out;
  for (const auto& [key, value] : model_parameters(make_model(name))) out.push_back(key);
  return out;
}

ConstitutiveModel make_model(std::string_view name,
                             const std::map<std::string, double>& params) {
  ConstitutiveModel model;
  if (name == "linear") model = Linear{};
  else if (name == "quadratic") model = Quadratic{};
  else if (name == "cubic") model = Cubic{};
  else if (name == "modelA") model = ModelA{};
  else if (name == "modelB") model = ModelB{};
  else if (name == "modelC") model = ModelC{};
  else if (name == "modelD") model = ModelD{};
  else
    throw Error(ErrorKind::InvalidParameter, "unknown model '" + std::string(name) + "'");

  auto assign = [&](const std::string& key, double value) {
    bool found = std::visit(
        [&](auto& m) {
          using M = std::decay_t<decltype(m)>;
          double* slot = nullptr;
          if constexpr (requires { m.gp0; }) if (key == "gp0") slot = &m.gp0;
          if constexpr (requires { m.gpp0; }) if (key == "gpp0") slot = &m.gpp0;
          if constexpr (requires { m.gppp0; }) if (key == "gppp0") slot = &m.gppp0;
          if constexpr (requires { m.alpha; }) if (key == "alpha") slot = &m.alpha;
          if constexpr (requires { m.beta; }) if (key == "beta") slot = &m.beta;
          if constexpr (requires { m.gamma; }) if (key == "gamma") slot = &m.gamma;
          if constexpr (requires { m.delta; }) if (key == "delta") slot = &m.delta;
          if constexpr (requires { m.n; }) if (key == "n") slot = &m.n;
          if constexpr (std::is_same_v<M, ModelB>) if (key == "r") slot = &m.r;
          if (slot) *slot = value;
          return slot != nullptr;
        },
        model);
    if (!found) {
      throw Error(ErrorKind::InvalidParameter,
                  std::string(name) + " has no parameter '" + key + "'");
    }
  };
  for (const auto& [key, value] : params) assign(key, value);
  validate(model);
  return model;
}

void validate(const ConstitutiveModel& model) {
  const std::string name = model_name(model);
  for (const auto& [key, value] : model_parameters(model)) {
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::InvalidParameter, name + "." + key + " must be finite");
    }
  }
  if (const auto* a = std::get_if<ModelA>(&model)) {
    require(a->alpha >= 0.0, "modelA", "alpha", ">= 0");
    require(a->gamma >= 0.0, "modelA", "gamma", ">= 0");
  } else if (const auto* b = std::get_if<ModelB>(&model)) {
    require(b->r > 0.0, "modelB", "r", "> 0");
  }
}

double eval_g(const ConstitutiveModel& model, double stress) {
  const double value = std::visit(
      Overloaded{
          [&](const ModelB& m) { return model_b_value(m, stress); },
          [&](const auto& m) { return law(m, stress); },
      },
      model);
  return checked(model, value, stress);
}

double eval_g_derivative(const ConstitutiveModel& model, double stress, int order) {
  if (order < 1 || order > 3) {
    throw Error(ErrorKind::InvalidParameter, "derivative order must be 1, 2 or 3");
  }
  const double value = std::visit(
      Overloaded{
          [&](const ModelB& m) { return model_b_derivative(m, stress, order); },
          [&](const auto& m) {
            return law(m, detail::Jet::variable(stress)).derivative(order);
          },
      },
      model);
  return checked(model, value, stress);
}

Admissibility check_g1_positive(const ConstitutiveModel& model) {
  Admissibility out;
  out.g1 = eval_g(model, 1.0);
  out.admissible = out.g1 > 0.0;
  if (std::holds_alternative<ModelC>(model) || std::holds_alternative<ModelD>(model)) {
    // Log-spaced probe of the compressive range.
    constexpr int kProbes = 2000;
    for (int i = 0; i <= kProbes; ++i) {
      const double stress =
          -std::pow(10.0, -3.0 + (std::log10(compressive_probe_limit) + 3.0) * i / kProbes);
      double g = 0.0;
      try {
        g = eval_g(model, stress);
      } catch (const Error&) {
        g = INFINITY;
      }
      if (!(std::abs(g) <= 1.0)) {
        out.compressive_advisory = true;
        out.compressive_probe_stress = stress;
        break;
      }
    }
  }
  return out;
}

namespace {
void validate_scales(const PhysicalScales& s) {
  if (!(s.length > 0.0) || !(s.stress > 0.0) || !(s.density > 0.0) ||
      !(s.nu_dimensional >= 0.0) || !std::isfinite(s.length) ||
      !std::isfinite(s.stress) || !std::isfinite(s.density) ||
      !std::isfinite(s.nu_dimensional)) {
    throw Error(ErrorKind::InvalidScale,
                "scales require L > 0, mu > 0, rho > 0 and nu >= 0");
  }
}
}  // namespace

double dimensionless_viscosity(const PhysicalScales& scales) {
  validate_scales(scales);
  return scales.nu_dimensional / scales.length * std::sqrt(scales.stress / scales.density);
}

PhysicalState nondimensionalize(const PhysicalScales& scales, const PhysicalState& state) {
  validate_scales(scales);
  const double rate = std::sqrt(scales.stress / scales.density) / scales.length;
  return {state.x / scales.length, state.t * rate, state.stress / scales.stress,
          state.displacement / scales.length, state.nu * rate};
}

PhysicalState dimensionalize(const PhysicalScales& scales, const PhysicalState& state) {
  validate_scales(scales);
  const double rate = std::sqrt(scales.stress / scales.density) / scales.length;
  return {state.x * scales.length, state.t / rate, state.stress * scales.stress,
          state.displacement * scales.length, state.nu / rate};
}

}  // namespace kinkwave
