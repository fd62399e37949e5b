#pragma once

#include <string>
#include <vector>

#include "kinkwave/constitutive.hpp"

namespace kinkwave {

/// Stress limits of the kink: T(xi) -> minus as xi -> -inf, -> plus as xi -> +inf.
struct BoundaryStates {
  double minus = 1.0;
  double plus = 0.0;

  bool normalized() const { return minus == 1.0 && plus == 0.0; }
  double midpoint() const { return 0.5 * (minus + plus); }
  bool operator==(const BoundaryStates&) const = default;
};

struct WaveProblem {
  ConstitutiveModel model = Quadratic{};
  double nu = 0.5;
  BoundaryStates boundary{};
  int c_sign = +1;  // selects c = c_sign * sqrt(c^2)
};

/// c^2 = (T- - T+) / (g(T-) - g(T+)).
/// Throws DegenerateSpeed when g(T-) = g(T+) and NoWave when c^2 <= 0.
double wave_speed_squared(const ConstitutiveModel& model, const BoundaryStates& boundary);

/// A = (T- + T+ - c^2 [g(T-) + g(T+)]) / 2.
double integration_constant(const ConstitutiveModel& model, const BoundaryStates& boundary,
                            double c2);

/// Right-hand side f of the first-order wave equation T' = f(T).
class ReducedField {
 public:
  /// Throws NoWave for nu <= 0 or c^2 <= 0, DegenerateSpeed for g(T-) = g(T+).
  explicit ReducedField(const WaveProblem& problem);

  double operator()(double stress) const;
  /// (g(1) T - g(T)) / (nu c g(1)); equals operator() for the normalized boundary.
  double normalized_form(double stress) const;
  /// f'(T) = (1 - c^2 g'(T)) / (nu c).
  double derivative(double stress) const;

  const WaveProblem& problem() const { return problem_; }
  const ConstitutiveModel& model() const { return problem_.model; }
  const BoundaryStates& boundary() const { return problem_.boundary; }
  double nu() const { return problem_.nu; }
  double speed() const { return c_; }
  double speed_squared() const { return c2_; }
  double constant() const { return a_; }
  double g_minus() const { return g_minus_; }
  double g_plus() const { return g_plus_; }

 private:
  WaveProblem problem_;
  double c2_ = 0.0;
  double c_ = 0.0;
  double a_ = 0.0;
  double g_minus_ = 0.0;
  double g_plus_ = 0.0;
};

ReducedField reduced_field(const WaveProblem& problem);

struct ExistenceVerdict {
  bool admissible = false;
  std::string reason;  // empty when admissible
};

/// +1 if the gate admits c > 0 for this model and boundary, else -1.
int preferred_c_sign(const ConstitutiveModel& model, const BoundaryStates& boundary, double nu);

/// Never throws; every failure becomes a no-wave verdict with a reason.
ExistenceVerdict existence_gate(const WaveProblem& problem);

enum class Stability { Stable, Unstable, Degenerate };
const char* to_string(Stability s);

struct Equilibrium {
  double stress = 0.0;
  double eigenvalue = 0.0;
  Stability stability = Stability::Degenerate;
};

struct EquilibriumReport {
  std::vector<Equilibrium> points;
  bool field_vanishes = false;  // f identically zero on the interval
};

inline constexpr double kEigenvalueTolerance = 1e-10;
inline constexpr int kEquilibriumScanIntervals = 4096;

/// Sign-change scan of f on [lo, hi] followed by bisection. Boundary states
/// found inside a final bracket are reported exactly.
EquilibriumReport find_equilibria(const ReducedField& field, double lo, double hi);
/// Default interval [min(T-,T+) - 1.25, max(T-,T+) + 1.25].
EquilibriumReport find_equilibria(const ReducedField& field);

Stability classify(double eigenvalue);

}  // namespace kinkwave
