#include <doctest.h>

#include <cmath>
#include <random>

#include "kinkwave/errors.hpp"
#include "kinkwave/wave_setup.hpp"

using namespace kinkwave;
using doctest::Approx;

namespace {

WaveProblem normalized(ConstitutiveModel m, double nu, int sign) {
  return WaveProblem{std::move(m), nu, BoundaryStates{}, sign};
}

}  // namespace

TEST_CASE("wave speed squared") {
  CHECK(wave_speed_squared(ModelB{2.0}, {}) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(wave_speed_squared(Quadratic{}, {}) == Approx(10.0 / 7.0).epsilon(1e-15));
  CHECK(wave_speed_squared(Linear{}, {}) == 1.0);
  CHECK(wave_speed_squared(Linear{2.0}, BoundaryStates{3.0, -1.0}) == Approx(0.5));
}

TEST_CASE("wave speed errors") {
  // g(2) = g(0) for this quadratic: the jump is degenerate.
  CHECK_THROWS_AS(wave_speed_squared(Quadratic{1.0, -1.0}, BoundaryStates{2.0, 0.0}), Error);
  // g decreasing across the jump gives c^2 < 0.
  CHECK_THROWS_AS(wave_speed_squared(Quadratic{1.0, -1.0}, BoundaryStates{3.0, 0.0}), Error);
}

TEST_CASE("integration constant") {
  CHECK(integration_constant(Quadratic{}, {}, 10.0 / 7.0) == Approx(0.0).epsilon(1e-15));
  CHECK(integration_constant(Linear{}, BoundaryStates{2.0, -2.0}, 1.0) == 0.0);
  const BoundaryStates b{2.0, 1.0};
  const double c2 = wave_speed_squared(Quadratic{}, b);
  CHECK(c2 == Approx(10.0));
  CHECK(integration_constant(Quadratic{}, b, c2) == Approx(-6.0));
}

TEST_CASE("reduced field values") {
  const ReducedField lin(normalized(Linear{}, 0.5, 1));
  for (double t = -2; t <= 2; t += 0.25) CHECK(lin(t) == 0.0);

  const ReducedField q(normalized(Quadratic{}, 0.5, 1));
  CHECK(q.speed() == Approx(std::sqrt(10.0 / 7.0)));
  CHECK(q(0.5) == Approx(-0.1792843).epsilon(1e-6));
  CHECK(q(0.0) == 0.0);
  CHECK(std::abs(q(1.0)) < 1e-15);
}

TEST_CASE("boundary states are equilibria of random problems") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0), s(-3.0, 3.0);
  int tested = 0;
  while (tested < 100) {
    const Quadratic m{1.0 + 0.5 * u(rng), u(rng)};
    const BoundaryStates b{s(rng), s(rng)};
    try {
      const ReducedField f(WaveProblem{m, 0.5, b, 1});
      const double scale = std::abs(b.minus) + std::abs(b.plus) + 1.0;
      CHECK(std::abs(f(b.minus)) <= 1e-12 * scale / std::abs(f.nu() * f.speed()));
      CHECK(std::abs(f(b.plus)) <= 1e-12 * scale / std::abs(f.nu() * f.speed()));
      ++tested;
    } catch (const Error&) {
    }
  }
}

TEST_CASE("general and normalized fields agree") {
  for (const auto& name : catalog_names()) {
    if (name == "linear") continue;
    CAPTURE(name);
    const ReducedField f(normalized(make_model(name), 0.5, 1));
    for (double t = -1.5; t <= 2.0; t += 0.01) {
      CHECK(std::abs(f(t) - f.normalized_form(t)) <= 1e-12 * std::max(1.0, std::abs(f(t))));
    }
  }
}

TEST_CASE("c^2 is symmetric in the states") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0), s(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Cubic m{1.0, u(rng), u(rng)};
    const double a = s(rng), b = s(rng);
    if (a == b) continue;
    try {
      const double c2 = wave_speed_squared(m, {a, b});
      CHECK(wave_speed_squared(m, {b, a}) == Approx(c2).epsilon(1e-15));
    } catch (const Error&) {
      CHECK_THROWS_AS(wave_speed_squared(m, {b, a}), Error);
    }
  }
}

TEST_CASE("existence gate") {
  CHECK(existence_gate(normalized(Quadratic{}, 0.5, 1)).admissible);
  const auto wrong = existence_gate(normalized(Quadratic{}, 0.5, -1));
  CHECK_FALSE(wrong.admissible);
  CHECK_FALSE(wrong.reason.empty());
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    CHECK_FALSE(existence_gate(normalized(make_model(name), 0.0, 1)).admissible);
    CHECK_FALSE(existence_gate(normalized(make_model(name), -1.0, 1)).admissible);
  }
  CHECK_FALSE(existence_gate(normalized(Linear{}, 0.5, 1)).admissible);
  CHECK_FALSE(existence_gate(normalized(Linear{}, 0.5, -1)).admissible);
  // Cubic with b in (0, 1) inverted: interior root at -b = 0.5 blocks the wave.
  const Cubic blocked{1.0, -1.0, 2.0};  // b = 1 + 3(-1)/2 = -1/2
  CHECK_FALSE(existence_gate(normalized(blocked, 0.5, 1)).admissible);
  CHECK_FALSE(existence_gate(normalized(blocked, 0.5, -1)).admissible);
}

TEST_CASE("waves travel in one direction only") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const ConstitutiveModel models[] = {Quadratic{1.0, u(rng)},
                                        ModelA{pos(rng), 0.2 * u(rng), pos(rng), u(rng)},
                                        ModelB{pos(rng)}};
    for (const auto& m : models) {
      const WaveProblem plus = normalized(m, 0.5, 1);
      const WaveProblem minus = normalized(m, 0.5, -1);
      if (existence_gate(plus).admissible) CHECK_FALSE(existence_gate(minus).admissible);
      if (existence_gate(minus).admissible) CHECK_FALSE(existence_gate(plus).admissible);
    }
  }
}

TEST_CASE("preferred sign") {
  CHECK(preferred_c_sign(Quadratic{}, {}, 0.5) == 1);
  CHECK(preferred_c_sign(Quadratic{1.0, 0.6}, {}, 0.5) == -1);
  CHECK(preferred_c_sign(Cubic{}, {}, 0.5) == -1);
  CHECK(preferred_c_sign(ModelB{}, {}, 0.5) == 1);
}

TEST_CASE("equilibria of the quadratic and cubic laws") {
  const ReducedField q(normalized(Quadratic{}, 0.5, 1));
  const auto eq = find_equilibria(q);
  REQUIRE(eq.points.size() == 2);
  CHECK(eq.points[0].stress == 0.0);
  CHECK(eq.points[1].stress == 1.0);
  CHECK(eq.points[0].eigenvalue == Approx(-0.7171372).epsilon(1e-7));
  CHECK(eq.points[0].stability == Stability::Stable);
  CHECK(eq.points[1].stability == Stability::Unstable);

  const ReducedField c(normalized(Cubic{}, 0.5, -1));
  const auto ec = find_equilibria(c);
  REQUIRE(ec.points.size() == 3);
  CHECK(ec.points[0].stress == Approx(-1.0).epsilon(1e-12));
  CHECK(ec.points[1].stress == 0.0);
  CHECK(ec.points[2].stress == 1.0);

  const auto el = find_equilibria(ReducedField(normalized(Linear{}, 0.5, 1)));
  CHECK(el.field_vanishes);
}

TEST_CASE("eigenvalue formula at equilibria of random problems") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0), nu(0.1, 2.0);
  int tested = 0;
  while (tested < 200) {
    const ConstitutiveModel m =
        tested % 2 ? ConstitutiveModel{Quadratic{1.0 + 0.5 * u(rng), u(rng)}}
                   : ConstitutiveModel{Cubic{1.0 + 0.5 * u(rng), u(rng), u(rng)}};
    const double v = nu(rng);
    const int sign = preferred_c_sign(m, {}, v);
    if (!existence_gate(normalized(m, v, sign)).admissible) continue;
    const ReducedField f(normalized(m, v, sign));
    const double g1 = eval_g(m, 1.0);
    for (const auto& e : find_equilibria(f).points) {
      const double expected = (g1 - eval_g_derivative(m, e.stress, 1)) / (v * f.speed() * g1);
      CHECK(std::abs(e.eigenvalue - expected) <= 1e-8);
    }
    ++tested;
  }
}

TEST_CASE("stability classification") {
  CHECK(classify(-1e-3) == Stability::Stable);
  CHECK(classify(1e-3) == Stability::Unstable);
  CHECK(classify(1e-14) == Stability::Degenerate);
}
