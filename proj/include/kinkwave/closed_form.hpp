#pragma once

#include <optional>
#include <string>

#include "kinkwave/constitutive.hpp"
#include "kinkwave/wave_setup.hpp"

namespace kinkwave {

/// T' = a2 T^2 + a1 T + a0 for the quadratic law. Coefficients are read off
/// the reduced field; theta is the auxiliary ratio of the published a0
/// expression (NaN when T- + T+ = 0, where that expression is singular).
struct RiccatiCoefficients {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
  double theta = 0.0;
};

RiccatiCoefficients riccati_coefficients(const Quadratic& model, const BoundaryStates& boundary,
                                         double nu, double c);

/// Shape of the cubic wave equation T' = rate * T (1 - T) (T + b).
struct CubicShape {
  double rate = 0.0;
  double b = 0.0;
};

/// Fits `rate` and `b` from the normalized reduced field of a cubic law.
/// Throws Degenerate when g'''(0) = 0.
CubicShape cubic_shape(const Cubic& model, double nu, int c_sign);

enum class ClosedFormKind { Logistic, CubicImplicit, CubicExplicit, ModelAN1, ModelBR2 };
const char* to_string(ClosedFormKind kind);

/// A traveling wave known in closed (explicit or implicit) form, centered so
/// that T(0) = 1/2 and decreasing from 1 to 0.
class ClosedFormSolution {
 public:
  static ClosedFormSolution logistic(double a2);
  static ClosedFormSolution cubic(const CubicShape& shape);
  static ClosedFormSolution cubic_explicit(double rate);
  static ClosedFormSolution model_a_n1(double rate);
  static ClosedFormSolution model_b_r2(double nu_c);

  ClosedFormKind kind() const { return kind_; }
  /// Rate constant of the solved equation (a2 for the logistic, rate for the
  /// cubic and Model A forms, nu*c for Model B).
  double rate() const { return rate_; }
  double shape_b() const { return b_; }

  /// T(xi); implicit kinds are inverted by bracketed root finding.
  double stress(double xi) const;
  /// The right-hand side of the equation this solution satisfies, at stress T.
  double slope_at_stress(double stress) const;
  double slope(double xi) const { return slope_at_stress(stress(xi)); }
  /// Residual of the implicit relation at (T, xi) in log form; zero on the wave.
  double log_relation(double stress, double xi) const;

 private:
  ClosedFormSolution(ClosedFormKind kind, double rate, double b)
      : kind_(kind), rate_(rate), b_(b) {}

  ClosedFormKind kind_;
  double rate_;
  double b_;
};

/// Logistic kink T = 1 / (1 + exp(a2 xi)); throws NoWave unless a2 > 0.
ClosedFormSolution logistic_profile(double a2);

/// Logistic profile for a normalized quadratic problem, rate from the field.
ClosedFormSolution quadratic_profile(const Quadratic& model, double nu, int c_sign);

/// d = (T- - T+) / max|T'| over the wave.
double effective_width(const ClosedFormSolution& solution);

/// T^(1+b) / ((1-T)^b (T+b)) - exp(b(1+b) rate xi) / (1+2b).
/// Throws Domain unless T in (0, 1), b > 0.
double cubic_implicit_relation(const CubicShape& shape, double stress, double xi);

/// exp(rate xi) / sqrt(3 + exp(2 rate xi)); throws NoWave unless rate < 0.
double cubic_explicit(double rate, double xi);

/// Closed-form kink for Model A with n = 1 (T' = kappa T (1 - T^2)).
ClosedFormSolution model_a_n1_profile(const ModelA& model, double nu, int c_sign);

/// kappa of T' = kappa T (1 - T^2) read off the normalized reduced field.
double model_a_n1_rate(const ModelA& model, double nu, int c_sign);

/// H(s) = (1-s^2)^2 / (s (sqrt(1+s^2) + sqrt 2)^2) * ((sqrt(1+s^2) + 1)/s)^sqrt 2
/// with |1 - s^2| in the first factor; defined for s > 0, throws Domain
/// otherwise. The wave uses s in (0, 1].
double h_function(double s);
double log_h_function(double s);

/// Implicit kink for Model B with r = 2: ln H(T) = ln H(1/2) + xi/(nu c).
/// c_sign = -1 swaps the limits and is reported as NoWave.
ClosedFormSolution model_b_r2_profile(double nu, int c_sign = +1);

/// The closed form matching the field's model, when one exists: quadratic,
/// cubic, Model A with n = 1 and Model B with r = 2, normalized boundary
/// only. Empty when no closed form applies or the wave does not exist.
std::optional<ClosedFormSolution> closed_form_for(const ReducedField& field);

}  // namespace kinkwave
