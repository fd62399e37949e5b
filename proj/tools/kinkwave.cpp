// Command-line front end: speed, profile, sweep, equilibria, validate.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/config.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/io.hpp"
#include "kinkwave/profile_numeric.hpp"
#include "kinkwave/validation.hpp"
#include "kinkwave/wave_setup.hpp"

namespace fs = std::filesystem;
using namespace kinkwave;

namespace {

// Raw command-line values; only the ones given override the config file.
struct Options {
  std::string config_path;
  std::string model_spec;
  std::vector<double> nu;
  std::optional<double> tminus, tplus;
  std::optional<int> c_sign;
  std::string method;
  std::optional<double> rel_tol, abs_tol, max_step, xi_min, xi_max;
  std::optional<int> samples;
  std::string out, out_dir, report;
};

void add_common(CLI::App* cmd, Options& o, bool numeric) {
  cmd->add_option("--config", o.config_path, "Configuration file")->check(CLI::ExistingFile);
  cmd->add_option("-m,--model", o.model_spec, "Model, e.g. quadratic or cubic:gpp0=0.25");
  cmd->add_option("--nu", o.nu, "Viscosity parameter(s), comma separated")->delimiter(',');
  cmd->add_option("--tminus", o.tminus, "Stress state behind the wave");
  cmd->add_option("--tplus", o.tplus, "Stress state ahead of the wave");
  cmd->add_option("--c-sign", o.c_sign, "Sign of the wave speed (1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  if (!numeric) return;
  cmd->add_option("--method", o.method, "closed-form, ode or quadrature")
      ->check(CLI::IsMember({"closed-form", "ode", "quadrature"}));
  cmd->add_option("--rel-tol", o.rel_tol, "Integrator relative tolerance");
  cmd->add_option("--abs-tol", o.abs_tol, "Integrator absolute tolerance");
  cmd->add_option("--max-step", o.max_step, "Largest integrator step");
  cmd->add_option("--xi-min", o.xi_min, "Left end of the xi domain");
  cmd->add_option("--xi-max", o.xi_max, "Right end of the xi domain");
  cmd->add_option("--samples", o.samples, "Number of output samples");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig build_config(const Options& o, bool model_required = true) {
  if (model_required && o.config_path.empty() && o.model_spec.empty()) {
    throw Error(ErrorKind::Parse, "missing model: pass --model <spec> or --config <file>");
  }
  RunConfig c = o.config_path.empty() ? RunConfig{} : parse_config(read_file(o.config_path));
  if (!o.model_spec.empty()) apply_model_spec(c, o.model_spec);
  if (!o.nu.empty()) c.nu = o.nu;
  if (o.tminus) c.boundary.minus = *o.tminus;
  if (o.tplus) c.boundary.plus = *o.tplus;
  if (o.c_sign) c.c_sign = o.c_sign;
  if (!o.method.empty()) c.method = parse_method(o.method);
  if (o.rel_tol) c.rel_tol = *o.rel_tol;
  if (o.abs_tol) c.abs_tol = *o.abs_tol;
  if (o.max_step) c.max_step = o.max_step;
  if (o.xi_min) c.xi_min = o.xi_min;
  if (o.xi_max) c.xi_max = o.xi_max;
  if (o.samples) c.samples = *o.samples;
  if (!o.out.empty()) c.profile_path = o.out;
  if (!o.out_dir.empty()) c.out_dir = o.out_dir;
  if (!o.report.empty()) c.report_path = o.report;
  return c;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string describe(const RunConfig& c, double nu) {
  return c.model_name + " (nu=" + num(nu) + ", T-=" + num(c.boundary.minus) +
         ", T+=" + num(c.boundary.plus) + ")";
}

// Builds the profile with the configured method and checks it against the
// field before anything is written.
Profile compute_profile(const RunConfig& c, const ReducedField& field) {
  Profile profile;
  switch (c.method) {
    case ProfileMethod::Ode:
      profile = integrate_profile(field, c.integrator(field));
      break;
    case ProfileMethod::Quadrature:
      profile = quadrature_profile(field, default_stress_grid(field.boundary(), c.samples));
      break;
    case ProfileMethod::ClosedForm: {
      const auto solution = closed_form_for(field);
      if (!solution) {
        throw Error(ErrorKind::InvalidParameter,
                    "no closed form for " + c.model_name +
                        " with these parameters; use --method ode or quadrature");
      }
      const IntegratorConfig grid = c.integrator(field);
      const auto xis = uniform_grid(grid.xi_min, grid.xi_max, grid.samples);
      profile = sample_closed_form(*solution, field, xis);
      break;
    }
  }
  const double residual = residual_check(profile, field);
  if (!(residual <= 1e-5)) {
    throw Error(ErrorKind::Stiffness, "profile fails the residual check (" + num(residual) + ")");
  }
  return profile;
}

int run_speed(const RunConfig& c) {
  for (double nu : c.nu) {
    const WaveProblem problem = c.problem(nu);
    std::cout << describe(c, nu) << "\n";
    const double c2 = wave_speed_squared(problem.model, problem.boundary);
    std::cout << "  c^2      = " << num(c2) << "\n"
              << "  c        = " << num(problem.c_sign * std::sqrt(c2)) << "\n"
              << "  A        = " << num(integration_constant(problem.model, problem.boundary, c2))
              << "\n";
    const ExistenceVerdict verdict = existence_gate(problem);
    std::cout << "  wave     = " << (verdict.admissible ? "yes" : "no: " + verdict.reason) << "\n";
  }
  return 0;
}

int run_equilibria(const RunConfig& c) {
  for (double nu : c.nu) {
    const ReducedField field(c.problem(nu));
    std::cout << describe(c, nu) << ", c=" << num(field.speed()) << "\n";
    const EquilibriumReport report = find_equilibria(field);
    if (report.field_vanishes) {
      std::cout << "  f vanishes identically: every state is an equilibrium\n";
      continue;
    }
    for (const auto& e : report.points) {
      std::cout << "  T*=" << num(e.stress) << "  lambda=" << num(e.eigenvalue) << "  "
                << to_string(e.stability) << "\n";
    }
  }
  return 0;
}

// A missing wave is a valid answer, not a failure: report it and move on.
bool report_no_wave(const RunConfig& c, const WaveProblem& problem) {
  const ExistenceVerdict verdict = existence_gate(problem);
  if (verdict.admissible) return false;
  std::cout << describe(c, problem.nu) << ": no traveling wave (" << verdict.reason
            << "); nothing written\n";
  return true;
}

int run_profile(const RunConfig& c) {
  const double nu = c.nu.front();
  const WaveProblem problem = c.problem(nu);
  if (report_no_wave(c, problem)) return 0;
  const ReducedField field(problem);
  const Profile profile = compute_profile(c, field);
  const double width = measure_width(profile, field);
  write_profile_csv(profile, c.profile_path, width);
  std::cout << describe(c, nu) << ": c=" << num(field.speed()) << " width=" << num(width)
            << " method=" << to_string(c.method) << " -> " << c.profile_path << "\n";
  return 0;
}

int run_sweep(RunConfig c, bool nu_given) {
  if (!nu_given) c.nu = {0.25, 0.5, 1.0};
  std::vector<Profile> profiles;
  std::vector<double> nus;
  for (double nu : c.nu) {
    if (!report_no_wave(c, c.problem(nu))) nus.push_back(nu);
  }
  if (nus.empty()) return 0;
  WaveProblem base = c.problem(nus.front());
  if (c.method == ProfileMethod::Ode && !c.c_sign) {
    // The preferred sign does not depend on nu > 0.
    profiles = sweep_profiles(base, nus, [&c](const ReducedField& f) { return c.integrator(f); });
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      WaveProblem p = base;
      p.nu = nus[i];
      const double residual = residual_check(profiles[i], ReducedField(p));
      if (!(residual <= 1e-5)) {
        throw Error(ErrorKind::Stiffness, "profile fails the residual check (" + num(residual) + ")");
      }
    }
  } else {
    for (double nu : nus) profiles.push_back(compute_profile(c, ReducedField(c.problem(nu))));
  }

  fs::create_directories(c.out_dir);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const std::string name = "profile_nu" + num(nus[i]) + ".csv";
    const ReducedField field(c.problem(nus[i]));
    const double width = measure_width(profiles[i], field);
    write_profile_csv(profiles[i], (fs::path(c.out_dir) / name).string(), width);
    names.push_back(name);
    std::cout << describe(c, nus[i]) << ": width=" << num(width) << " -> "
              << (fs::path(c.out_dir) / name).string() << "\n";
  }
  const std::string script = (fs::path(c.out_dir) / "plot.gp").string();
  emit_plot_script(profiles, names, script);
  std::cout << "plot script -> " << script << " (run gnuplot from " << c.out_dir << ")\n";
  return 0;
}

int run_validate(const RunConfig& c, bool all) {
  ValidationReport report;
  if (all) {
    report = validate_catalog();
  } else {
    for (double nu : c.nu) {
      const std::string prefix = c.model_name + "@nu=" + num(nu);
      ValidationReport part = validate_problem(c.problem(nu), std::nullopt, prefix);
      for (auto& r : part.checks) report.add(std::move(r));
    }
    std::vector<AuditEntry> audit = printed_formula_audit();
    report.discrepancies = std::move(audit);
    report.finalize();
  }
  std::cout << report.to_text();
  if (!c.report_path.empty()) {
    std::ofstream out(c.report_path);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + c.report_path + "' for writing");
    out << report.to_json() << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kink-type traveling waves in strain-rate dependent viscoelastic solids"};
  app.require_subcommand(1);

  Options speed_o, eq_o, profile_o, sweep_o, validate_o;
  auto* speed = app.add_subcommand("speed", "Wave speed, integration constant and existence");
  add_common(speed, speed_o, false);
  auto* equilibria = app.add_subcommand("equilibria", "Equilibria of the reduced field");
  add_common(equilibria, eq_o, false);
  auto* profile = app.add_subcommand("profile", "Compute one wave profile and write CSV");
  add_common(profile, profile_o, true);
  profile->add_option("-o,--out", profile_o.out, "Output CSV path");
  auto* sweep = app.add_subcommand("sweep", "Profiles for several nu plus a plot script");
  add_common(sweep, sweep_o, true);
  sweep->add_option("--out-dir", sweep_o.out_dir, "Output directory");
  auto* validate = app.add_subcommand("validate", "Run the residual, oracle and audit checks");
  add_common(validate, validate_o, false);
  bool all = false;
  validate->add_flag("--all", all, "Validate every catalog model");
  validate->add_option("--report", validate_o.report, "Write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (speed->parsed()) return run_speed(build_config(speed_o));
    if (equilibria->parsed()) return run_equilibria(build_config(eq_o));
    if (profile->parsed()) return run_profile(build_config(profile_o));
    if (sweep->parsed()) {
      const RunConfig c = build_config(sweep_o);
      const bool nu_given = !sweep_o.nu.empty() || !sweep_o.config_path.empty();
      return run_sweep(c, nu_given);
    }
    if (validate->parsed()) return run_validate(build_config(validate_o, !all), all);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
