#include <doctest.h>

#include <cmath>
#include <random>

#include "kinkwave/constitutive.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/validation.hpp"

using namespace kinkwave;
using doctest::Approx;

TEST_CASE("g evaluations") {
  CHECK(eval_g(ModelB{2.0}, 1.0) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(eval_g(ModelA{}, 1.0) == Approx(-0.01 + 0.5 / std::sqrt(1.5)).epsilon(1e-15));
  CHECK(eval_g(ModelA{}, 1.0) == Approx(0.3982481).epsilon(1e-6));
  CHECK(eval_g(Quadratic{}, 0.5) == Approx(0.425).epsilon(1e-15));
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    CHECK(eval_g(make_model(name), 0.0) == 0.0);
  }
}

TEST_CASE("analytic derivatives") {
  CHECK(eval_g_derivative(Quadratic{}, 0.3, 1) == Approx(0.82).epsilon(1e-15));
  CHECK(eval_g_derivative(Linear{}, 4.2, 2) == 0.0);
  CHECK(eval_g_derivative(ModelB{2.0}, 1.0, 1) == Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
  CHECK(eval_g_derivative(Cubic{1.0, 0.25, 0.5}, 0.0, 3) == Approx(0.5));
  CHECK_THROWS_AS(eval_g_derivative(Linear{}, 0.0, 4), Error);
}

TEST_CASE("right-hand derivative at the kink of |T|") {
  // Model B r = 1: g = T/(1+|T|), g'' = -2 sign(T)/(1+|T|)^3.
  CHECK(eval_g_derivative(ModelB{1.0}, 0.0, 2) == Approx(-2.0));
  CHECK(eval_g_derivative(ModelB{1.0}, -1e-12, 2) == Approx(2.0));
}

TEST_CASE("derivatives agree with finite differences away from 0") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const ConstitutiveModel m = make_model(name);
    for (int order = 1; order <= 3; ++order) {
      CAPTURE(order);
      CHECK(derivative_audit(m, order, 1000, -5.0, 5.0, 7u) <= 1e-6);
    }
  }
}

TEST_CASE("g(0) = 0 across random parameter draws") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.01, 3.0);
  for (int i = 0; i < 200; ++i) {
    CHECK(eval_g(Quadratic{u(rng), u(rng)}, 0.0) == 0.0);
    CHECK(eval_g(ModelA{pos(rng), u(rng), pos(rng), u(rng)}, 0.0) == 0.0);
    CHECK(eval_g(ModelB{pos(rng)}, 0.0) == 0.0);
    CHECK(eval_g(ModelC{pos(rng), u(rng), pos(rng), pos(rng)}, 0.0) == 0.0);
    CHECK(eval_g(ModelD{pos(rng), u(rng), pos(rng), pos(rng), u(rng)}, 0.0) == 0.0);
  }
}

TEST_CASE("Model A reduces to Model B with r = 2") {
  const ModelA a{1.0, 0.0, 2.0, -0.5};
  for (double t = -3.0; t <= 3.0; t += 0.01) {
    CHECK(std::abs(eval_g(a, t) - eval_g(ModelB{2.0}, t)) <= 1e-12);
  }
}

TEST_CASE("Model C reduces to Model B with r = 1") {
  const ModelC c{1.0, 0.0, 1.0, 1.0};
  for (double t = -0.99; t <= 3.0; t += 0.01) {
    CHECK(std::abs(eval_g(c, t) - eval_g(ModelB{1.0}, t)) <= 1e-12);
  }
}

TEST_CASE("Model B strain is bounded by one") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> r(0.2, 6.0), t(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const ModelB m{r(rng)};
    CHECK(std::abs(eval_g(m, t(rng))) < 1.0);
  }
  CHECK(std::abs(eval_g(ModelB{2.0}, 1e300)) <= 1.0);
}

TEST_CASE("admissibility through g(1)") {
  const auto b = check_g1_positive(ModelB{2.0});
  CHECK(b.admissible);
  CHECK(b.g1 == Approx(std::pow(2.0, -0.5)));
  CHECK(check_g1_positive(ModelA{}).admissible);
  const auto bad = check_g1_positive(ModelA{0.0, -0.01, 1.0, 1.0});
  CHECK_FALSE(bad.admissible);
  CHECK(bad.g1 == Approx(-0.01));
  CHECK_FALSE(check_g1_positive(ModelB{2.0}).compressive_advisory);
}

TEST_CASE("compressive advisory for models C and D") {
  // Large compressive stress drives the exponential term of Model C past 1.
  const auto c = check_g1_positive(ModelC{0.5, 0.5, 1.0, 0.01});
  CHECK(c.admissible);
  CHECK(c.compressive_advisory);
  CHECK(c.compressive_probe_stress < 0.0);
}

TEST_CASE("parameter validation names the field") {
  CHECK_THROWS_WITH_AS(make_model("modelB", {{"r", 0.0}}), doctest::Contains("r"), Error);
  CHECK_THROWS_AS(make_model("modelA", {{"alpha", -1.0}}), Error);
  CHECK_THROWS_AS(make_model("modelA", {{"gamma", -1.0}}), Error);
  CHECK_THROWS_AS(make_model("quadratic", {{"gpp0", NAN}}), Error);
  CHECK_THROWS_AS(make_model("quadratic", {{"bogus", 1.0}}), Error);
  CHECK_THROWS_AS(make_model("nonsense"), Error);
  // beta is left unconstrained for Model A.
  CHECK_NOTHROW(make_model("modelA", {{"beta", 0.3}}));
  CHECK_NOTHROW(make_model("modelD", {{"alpha", 0.5}, {"beta", 0.01}, {"gamma", 1}, {"delta", 1},
                                      {"n", 0.5}}));
}

TEST_CASE("catalog names and parameters") {
  CHECK(catalog_names().size() == 7);
  for (const auto& name : catalog_names()) {
    const auto m = make_model(name);
    CHECK(model_name(m) == name);
    const auto params = model_parameters(m);
    const auto names = parameter_names(name);
    REQUIRE(params.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(params[i].first == names[i]);
  }
}

TEST_CASE("overflow is reported, not propagated") {
  CHECK_THROWS_AS(eval_g(ModelC{0.5, 1.0, 1.0, 0.0}, -1e6), Error);
}

TEST_CASE("nondimensionalization") {
  const PhysicalScales s{2.0, 4.0, 1.0, 0.0};
  PhysicalState x;
  x.x = 2.0;
  x.t = 1.0;
  const auto bar = nondimensionalize(s, x);
  CHECK(bar.x == Approx(1.0));
  CHECK(bar.t == Approx(1.0));
  const PhysicalState back = dimensionalize(s, bar);
  CHECK(back.x == Approx(x.x));
  CHECK(back.t == Approx(x.t));

  const PhysicalScales unit{};
  PhysicalState y{0.3, 0.7, 1.1, -0.2, 0.4};
  const auto same = nondimensionalize(unit, y);
  CHECK(same.x == y.x);
  CHECK(same.t == y.t);
  CHECK(same.stress == y.stress);
  CHECK(same.displacement == y.displacement);
  CHECK(same.nu == y.nu);

  CHECK_THROWS_AS(nondimensionalize(PhysicalScales{0.0, 1.0, 1.0, 0.0}, y), Error);
}
