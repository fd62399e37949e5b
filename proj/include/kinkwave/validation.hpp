#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/profile_numeric.hpp"
#include "kinkwave/wave_setup.hpp"

namespace kinkwave {

struct CheckRecord {
  std::string name;
  double target = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// One audited published formula: its published form, what the reduced
/// field gives, and which of the two the library uses.
struct AuditEntry {
  std::string location;
  std::string published;
  std::string derived;
  std::string adopted;
  bool flagged = false;
};

struct ValidationReport {
  std::vector<CheckRecord> checks;
  std::vector<AuditEntry> discrepancies;

  bool all_passed() const;
  void add(CheckRecord record);
  /// |measured - target| <= tolerance.
  void add_close(std::string name, double target, double measured, double tolerance);
  /// measured <= tolerance (target 0).
  void add_bound(std::string name, double measured, double tolerance);
  /// Sorts checks by name; discrepancies keep audit order.
  void finalize();
  std::string to_json() const;
  std::string to_text() const;
};

inline constexpr double kResidualTolerance = 1e-5;

/// max |dT/dxi - f(T)| over `samples` points of [xi_lo, xi_hi]; dT/dxi by a
/// five-point central stencil with step 1e-5 * d.
double residual_check(const ClosedFormSolution& solution, const ReducedField& field,
                      double xi_lo, double xi_hi, int samples = 500);

/// Same on the profile's own nodes, with five-point finite-difference weights
/// for the (possibly nonuniform) grid.
double residual_check(const Profile& profile, const ReducedField& field);

/// Largest gap between the analytic eigenvalue f'(T*) and fourth-order
/// one-sided finite differences of f taken from either side of T*.
double eigenvalue_mismatch(const ReducedField& field, const Equilibrium& equilibrium);

/// Records that c^2 [g(T-) - g(T+)] = T- - T+ and that f vanishes at both
/// states with A from the boundary conditions.
std::vector<CheckRecord> speed_consistency_check(const ConstitutiveModel& model,
                                                 const BoundaryStates& boundary);

enum class AuditFamily { Quadratic, Cubic, ModelAN1, ModelBR2, EquilibriumRule };

std::vector<AuditEntry> printed_formula_audit(AuditFamily family);
std::vector<AuditEntry> printed_formula_audit();

/// Every check the library can run for one problem: constitutive derivative
/// audit, speed identities, equilibria, existence, and (for admissible
/// problems) profile residuals, method agreement and closed-form agreement.
/// `expect_wave`, when given, turns the existence verdict into a pass/fail
/// check; otherwise it is recorded as informational.
ValidationReport validate_problem(const WaveProblem& problem,
                                  std::optional<bool> expect_wave = std::nullopt,
                                  const std::string& prefix = "");

/// validate_problem over the catalog defaults plus the published-formula audit.
ValidationReport validate_catalog();

/// Max relative deviation |analytic - finite difference| / max(1, |analytic|)
/// of g^(order) over `count` seeded uniform draws in [lo, hi], skipping
/// |T| < 1e-3 for order >= 2.
double derivative_audit(const ConstitutiveModel& model, int order, int count = 1000,
                        double lo = -5.0, double hi = 5.0, unsigned seed = 12345);

/// Five-point derivative of g^(order-1) at T with step h.
double finite_difference_derivative(const ConstitutiveModel& model, double stress, int order,
                                    double step);

}  // namespace kinkwave
