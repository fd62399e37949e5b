#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/config.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/profile_numeric.hpp"
#include "kinkwave/validation.hpp"
#include "kinkwave/wave_setup.hpp"

namespace py = pybind11;
using namespace kinkwave;

namespace {

using Params = std::map<std::string, double>;

WaveProblem make_problem(const std::string& model, const Params& params, double nu,
                         double tminus, double tplus, std::optional<int> c_sign) {
  const ConstitutiveModel m = make_model(model, params);
  const BoundaryStates b{tminus, tplus};
  return WaveProblem{m, nu, b, c_sign ? *c_sign : preferred_c_sign(m, b, nu)};
}

py::dict profile_dict(const Profile& p, double width) {
  std::vector<double> xi, t, g;
  for (const auto& s : p.samples) {
    xi.push_back(s.xi);
    t.push_back(s.stress);
    g.push_back(s.strain);
  }
  py::dict d;
  d["xi"] = xi;
  d["T"] = t;
  d["gT"] = g;
  d["model"] = p.meta.model;
  d["nu"] = p.meta.nu;
  d["c"] = p.meta.c;
  d["method"] = p.meta.method;
  d["width"] = width;
  return d;
}

}  // namespace

PYBIND11_MODULE(_kinkwave, m) {
  m.doc() = "Kink-type traveling waves of strain-rate dependent viscoelastic laws";

  static py::exception<Error> error(m, "KinkwaveError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("catalog_names", &catalog_names);
  m.def("parameter_names", [](const std::string& name) { return parameter_names(name); });
  m.def("model_parameters",
        [](const std::string& name, const Params& params) {
          return model_parameters(make_model(name, params));
        },
        py::arg("model"), py::arg("params") = Params{});

  m.def("eval_g",
        [](const std::string& name, double t, const Params& params) {
          return eval_g(make_model(name, params), t);
        },
        py::arg("model"), py::arg("T"), py::arg("params") = Params{});
  m.def("eval_g_derivative",
        [](const std::string& name, double t, int order, const Params& params) {
          return eval_g_derivative(make_model(name, params), t, order);
        },
        py::arg("model"), py::arg("T"), py::arg("order"), py::arg("params") = Params{});

  m.def("wave_speed_squared",
        [](const std::string& name, const Params& params, double tminus, double tplus) {
          return wave_speed_squared(make_model(name, params), {tminus, tplus});
        },
        py::arg("model"), py::arg("params") = Params{}, py::arg("tminus") = 1.0,
        py::arg("tplus") = 0.0);

  m.def("existence",
        [](const std::string& name, const Params& params, double nu, std::optional<int> c_sign,
           double tminus, double tplus) {
          const ConstitutiveModel model = make_model(name, params);
          const WaveProblem p{model, nu, {tminus, tplus}, c_sign ? *c_sign : 1};
          const auto v = existence_gate(p);
          return py::make_tuple(v.admissible, v.reason);
        },
        py::arg("model"), py::arg("params") = Params{}, py::arg("nu") = 0.5,
        py::arg("c_sign") = std::optional<int>{}, py::arg("tminus") = 1.0, py::arg("tplus") = 0.0);

  m.def("equilibria",
        [](const std::string& name, const Params& params, double nu, std::optional<int> c_sign,
           double tminus, double tplus) {
          const ReducedField f(make_problem(name, params, nu, tminus, tplus, c_sign));
          py::list out;
          for (const auto& e : find_equilibria(f).points) {
            py::dict d;
            d["T"] = e.stress;
            d["eigenvalue"] = e.eigenvalue;
            d["stability"] = to_string(e.stability);
            out.append(d);
          }
          return out;
        },
        py::arg("model"), py::arg("params") = Params{}, py::arg("nu") = 0.5,
        py::arg("c_sign") = std::optional<int>{}, py::arg("tminus") = 1.0, py::arg("tplus") = 0.0);

  m.def("profile",
        [](const std::string& name, const Params& params, double nu, const std::string& method,
           std::optional<int> c_sign, double tminus, double tplus, int samples) {
          const ReducedField f(make_problem(name, params, nu, tminus, tplus, c_sign));
          Profile p;
          const ProfileMethod how = parse_method(method);
          IntegratorConfig cfg = default_config(f);
          cfg.samples = samples;
          if (how == ProfileMethod::Ode) {
            p = integrate_profile(f, cfg);
          } else if (how == ProfileMethod::Quadrature) {
            p = quadrature_profile(f, default_stress_grid(f.boundary(), samples));
          } else {
            const auto s = closed_form_for(f);
            if (!s) throw Error(ErrorKind::InvalidParameter, "no closed form for " + name);
            p = sample_closed_form(*s, f, uniform_grid(cfg.xi_min, cfg.xi_max, samples));
          }
          return profile_dict(p, measure_width(p, f));
        },
        py::arg("model"), py::arg("params") = Params{}, py::arg("nu") = 0.5,
        py::arg("method") = "ode", py::arg("c_sign") = std::optional<int>{},
        py::arg("tminus") = 1.0, py::arg("tplus") = 0.0, py::arg("samples") = 2001);

  m.def("h_function", &h_function, py::arg("s"));
  m.def("validate_catalog_json", [] { return validate_catalog().to_json(); });
  m.def("printed_formula_audit", [] {
    py::list out;
    for (const auto& e : printed_formula_audit()) {
      py::dict d;
      d["location"] = e.location;
      d["published"] = e.published;
      d["derived"] = e.derived;
      d["adopted"] = e.adopted;
      d["flagged"] = e.flagged;
      out.append(d);
    }
    return out;
  });
}
