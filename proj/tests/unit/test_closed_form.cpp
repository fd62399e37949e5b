#include <doctest.h>

#include <cmath>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/validation.hpp"

using namespace kinkwave;
using doctest::Approx;

namespace {

const double kA2 = 0.6 * std::sqrt(10.0 / 7.0);  // -c g''(0)/(2 nu) at nu = 0.5

ReducedField field_of(ConstitutiveModel m, double nu, int sign) {
  return ReducedField(WaveProblem{std::move(m), nu, {}, sign});
}

void check_closed_form_properties(const ClosedFormSolution& s, const ReducedField& f) {
  const double d = effective_width(s);
  CHECK(s.stress(0.0) == Approx(0.5).epsilon(1e-12));
  CHECK(residual_check(s, f, -10 * d, 10 * d) <= 1e-5);
  double prev = 2.0;
  for (int i = 0; i <= 500; ++i) {
    const double xi = -5 * d + 10 * d * i / 500.0;
    const double t = s.stress(xi);
    CHECK(t < prev);
    prev = t;
  }
}

}  // namespace

TEST_CASE("Riccati coefficients of the quadratic law") {
  const auto r = riccati_coefficients(Quadratic{}, {}, 0.5, std::sqrt(10.0 / 7.0));
  CHECK(r.a2 == Approx(kA2).epsilon(1e-12));
  CHECK(r.a2 == Approx(0.7171372).epsilon(1e-7));
  CHECK(r.a1 == Approx(-kA2).epsilon(1e-12));
  CHECK(std::abs(r.a0) < 1e-14);
  const auto other = riccati_coefficients(Quadratic{2.0, 0.3}, {}, 1.2, -std::sqrt(1 / 2.15));
  CHECK(std::abs(other.a0) < 1e-14);
  const auto flat = riccati_coefficients(Quadratic{1.0, 0.0}, {}, 0.5, 1.0);
  CHECK(flat.a2 == 0.0);
}

TEST_CASE("logistic profile") {
  const auto s = logistic_profile(kA2);
  CHECK(s.stress(0.0) == 0.5);
  CHECK(s.stress(4.0 / kA2) == Approx(1.0 / (1.0 + std::exp(4.0))).epsilon(1e-12));
  CHECK(s.stress(4.0 / kA2) == Approx(0.0179862).epsilon(1e-6));
  CHECK(effective_width(s) == Approx(4.0 / kA2).epsilon(1e-10));
  CHECK(effective_width(logistic_profile(4.0)) == Approx(1.0).epsilon(1e-10));
  // No shock: the slope is bounded by a2/4 everywhere.
  for (double xi = -30; xi <= 30; xi += 0.1) CHECK(std::abs(s.slope(xi)) <= kA2 / 4 + 1e-15);
  CHECK_THROWS_AS(logistic_profile(-1.0), Error);
}

TEST_CASE("quadratic width law") {
  const Quadratic q{};
  const double c = std::sqrt(10.0 / 7.0);
  const double d = effective_width(quadratic_profile(q, 0.5, 1));
  CHECK(d == Approx(8 * 0.5 / (0.6 * c)).epsilon(1e-9));
  CHECK(effective_width(quadratic_profile(q, 1.0, 1)) == Approx(2 * d).epsilon(1e-9));
  CHECK_THROWS_AS(quadratic_profile(q, 0.5, -1), Error);
}

TEST_CASE("cubic closed forms") {
  SUBCASE("implicit relation at the anchor") {
    CHECK(cubic_implicit_relation(CubicShape{-0.3, 1.0}, 0.5, 0.0) == Approx(0.0).epsilon(1e-15));
    CHECK(cubic_implicit_relation(CubicShape{-0.3, 2.5}, 0.5, 0.0) == Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(cubic_implicit_relation(CubicShape{-0.3, 1.0}, 1.5, 0.0), Error);
    CHECK_THROWS_AS(cubic_implicit_relation(CubicShape{-0.3, -0.5}, 0.5, 0.0), Error);
  }
  SUBCASE("explicit solution values") {
    CHECK(cubic_explicit(-1.0, 0.0) == 0.5);
    CHECK(cubic_explicit(-1.0, 1.0) == Approx(std::exp(-1.0) / std::sqrt(3 + std::exp(-2.0))));
    CHECK(cubic_explicit(-1.0, 1.0) == Approx(0.2077608).epsilon(1e-6));
    CHECK(cubic_explicit(-1.0, -3.0) == Approx(0.9963025).epsilon(1e-6));
    CHECK(cubic_explicit(-1.0, -1000.0) == 1.0);
    CHECK(cubic_explicit(-1.0, 1000.0) == 0.0);
    CHECK_THROWS_AS(cubic_explicit(1.0, 0.0), Error);
  }
  SUBCASE("explicit and implicit forms agree at b = 1") {
    const CubicShape shape{-0.4, 1.0};
    const auto implicit = ClosedFormSolution::cubic(shape);
    for (double xi = -20; xi <= 20; xi += 0.25) {
      CHECK(std::abs(implicit.stress(xi) - cubic_explicit(shape.rate, xi)) <= 1e-10);
    }
  }
  SUBCASE("shape read off the field") {
    const Cubic m{1.0, 0.25, 0.5};
    const auto s = cubic_shape(m, 0.5, -1);
    CHECK(s.b == Approx(2.5).epsilon(1e-12));
    const double c = -std::sqrt(1.0 / eval_g(m, 1.0));
    CHECK(s.rate == Approx(c * 0.5 / (6 * 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("closed forms satisfy their fields") {
  check_closed_form_properties(quadratic_profile(Quadratic{}, 0.5, 1),
                               field_of(Quadratic{}, 0.5, 1));
  for (double gpp : {0.0, 0.25, 0.75}) {
    CAPTURE(gpp);
    const Cubic m{1.0, gpp, 0.5};
    const auto f = field_of(m, 0.5, -1);
    const auto sol = closed_form_for(f);
    REQUIRE(sol.has_value());
    check_closed_form_properties(*sol, f);
  }
  const ModelA a{1.0, 0.0, 2.0, 1.0};
  check_closed_form_properties(model_a_n1_profile(a, 0.5, -1), field_of(a, 0.5, -1));
  for (double nu : {0.25, 0.5, 1.0}) {
    check_closed_form_properties(model_b_r2_profile(nu), field_of(ModelB{2.0}, nu, 1));
  }
}

TEST_CASE("Model A with n = 1") {
  const ModelA a{1.0, 0.0, 2.0, 1.0};
  const double kappa = model_a_n1_rate(a, 0.5, -1);
  CHECK(kappa == Approx(-std::sqrt(2.0)).epsilon(1e-12));
  const auto s = model_a_n1_profile(a, 0.5, -1);
  CHECK(s.stress(0.0) == Approx(0.5));
  for (double xi = -10; xi <= 10; xi += 0.5) {
    CHECK(s.stress(xi) == Approx(cubic_explicit(kappa, xi)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(model_a_n1_profile(a, 0.5, 1), Error);
}

TEST_CASE("H function") {
  CHECK(h_function(1.0) == 0.0);
  CHECK(h_function(1e-6) > 1e6);
  // Independent evaluation of the corrected expression.
  const double s = 0.5;
  const double root = std::sqrt(1 + s * s);
  const double expected = std::pow(1 - s * s, 2) / (s * std::pow(root + std::sqrt(2.0), 2)) *
                          std::pow((root + 1) / s, std::sqrt(2.0));
  CHECK(h_function(0.5) == Approx(expected).epsilon(1e-13));
  CHECK(h_function(0.5) == Approx(1.3514490224).epsilon(1e-9));
  CHECK(std::isfinite(log_h_function(1e-300)));
  CHECK_THROWS_AS(h_function(0.0), Error);
  CHECK_THROWS_AS(h_function(-0.5), Error);
  CHECK(h_function(1.5) > 0.0);
}

TEST_CASE("Model B implicit profile") {
  const auto s = model_b_r2_profile(0.5);
  CHECK(s.stress(0.0) == Approx(0.5).epsilon(1e-12));
  CHECK(s.log_relation(0.5, 0.0) == Approx(0.0).epsilon(1e-14));
  const double nu_c = 0.5 * std::pow(2.0, 0.25);
  CHECK(s.stress(40 * nu_c) < 1e-3);
  CHECK(s.stress(-40 * nu_c) > 1 - 1e-3);
  CHECK_THROWS_AS(model_b_r2_profile(0.5, -1), Error);
}

TEST_CASE("closed form dispatch") {
  CHECK(closed_form_for(field_of(Quadratic{}, 0.5, 1)).has_value());
  CHECK_FALSE(closed_form_for(field_of(ModelB{3.0}, 0.5, 1)).has_value());
  CHECK_FALSE(closed_form_for(field_of(ModelC{}, 0.5, 1)).has_value());
  CHECK_FALSE(closed_form_for(ReducedField(WaveProblem{Quadratic{}, 0.5, {2.0, 0.0}, 1})));
}
