#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "kinkwave/closed_form.hpp"
#include "kinkwave/config.hpp"
#include "kinkwave/errors.hpp"
#include "kinkwave/io.hpp"
#include "kinkwave/profile_numeric.hpp"

using namespace kinkwave;
using doctest::Approx;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

Profile logistic_samples(double nu) {
  const ReducedField f(WaveProblem{Quadratic{}, nu, {}, 1});
  return sample_closed_form(quadratic_profile(Quadratic{}, nu, 1), f, uniform_grid(-15, 15, 301));
}

}  // namespace

TEST_CASE("minimal config takes the defaults") {
  const RunConfig c = parse_config("[model]\nmodel = \"quadratic\"\ngp0 = 1\ngpp0 = -0.6\n");
  CHECK(c.model_name == "quadratic");
  CHECK(c.nu == std::vector<double>{0.5});
  CHECK(c.boundary.minus == 1.0);
  CHECK(c.boundary.plus == 0.0);
  CHECK_FALSE(c.c_sign.has_value());
  CHECK(c.method == ProfileMethod::Ode);
  CHECK(std::get<Quadratic>(c.model()).gpp0 == -0.6);
}

TEST_CASE("inline params and every section") {
  const char* text = R"(# sample
model = "modelD"
params = { alpha = 0.5, beta = 0.01, gamma = 1, delta = 1, n = 0.5 }

[wave]
nu = [0.25, 0.5, 1.0]
tminus = 1
tplus = 0
c_sign = 1

[numeric]
method = "quadrature"
rel_tol = 1e-9
abs_tol = 1e-11
max_step = 0.1
xi_min = -30
xi_max = 30
equilibrium_cutoff = 1e-12
samples = 501

[output]
profile = "out.csv"
out_dir = "dir"
report = "r.json"
)";
  const RunConfig c = parse_config(text);
  CHECK(c.model_name == "modelD");
  CHECK(c.params.at("n") == 0.5);
  CHECK(c.nu.size() == 3);
  CHECK(c.c_sign == 1);
  CHECK(c.method == ProfileMethod::Quadrature);
  CHECK(c.samples == 501);
  CHECK(c.max_step == 0.1);
  CHECK(c.report_path == "r.json");
  CHECK(parse_config(serialize_config(c)) == c);
}

TEST_CASE("config round trip preserves awkward values") {
  RunConfig c;
  c.model_name = "cubic";
  c.params = {{"gpp0", 0.1 + 0.2}, {"gppp0", 1.0 / 3.0}};
  c.nu = {0.1, 1e-7};
  c.boundary = {2.5, -0.75};
  c.profile_path = "a \"quoted\" path";
  CHECK(parse_config(serialize_config(c)) == c);
  CHECK(serialize_config(parse_config(serialize_config(c))) == serialize_config(c));
}

TEST_CASE("config errors carry their location") {
  CHECK_THROWS_WITH_AS(parse_config("[wave]\nnu = 0.5\n"), doctest::Contains("missing model"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_config("model = \"modelB\"\nr = 0\n"), doctest::Contains("r"), Error);
  CHECK_THROWS_WITH_AS(parse_config("model = \"quadratic\"\n[wave]\nnu = 0.5x\n"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse_config("model = \"quadratic\"\nfoo = 1\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_config("model = \"quadratic\"\n[numeric]\nbogus = 1\n"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_AS(parse_config("model = \"quadratic\"\n[nope]\n"), Error);
  CHECK_THROWS_AS(parse_config("model = \"quadratic\"\n[wave]\nc_sign = 2\n"), Error);
  CHECK_THROWS_AS(parse_config("model = \"unknown\"\n"), Error);
  CHECK_NOTHROW(parse_config(
      "model = \"modelD\"\nalpha = 0.5\nbeta = 0.01\ngamma = 1\ndelta = 1\nn = 0.5\n"));
}

TEST_CASE("model spec from the command line") {
  RunConfig c;
  apply_model_spec(c, "cubic:gpp0=0.25,gppp0=0.5");
  CHECK(c.model_name == "cubic");
  CHECK(std::get<Cubic>(c.model()).gpp0 == 0.25);
  apply_model_spec(c, "modelB");
  CHECK(c.params.empty());
  CHECK_THROWS_AS(apply_model_spec(c, "modelB:r=abc"), Error);
  CHECK_THROWS_AS(apply_model_spec(c, "modelB:r"), Error);
  CHECK_THROWS_AS(apply_model_spec(c, "modelB:r=-1"), Error);
}

TEST_CASE("method names") {
  for (auto m : {ProfileMethod::ClosedForm, ProfileMethod::Ode, ProfileMethod::Quadrature}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("euler"), Error);
}

TEST_CASE("CSV layout") {
  const Profile p = logistic_samples(0.5);
  const std::string csv = format_profile_csv(p, 5.5);
  CHECK(csv.find("# model: quadratic\n") != std::string::npos);
  CHECK(csv.find("# method: closed-form\n") != std::string::npos);
  CHECK(csv.find("# width: 5.5\n") != std::string::npos);
  CHECK(csv.find("\nxi,T,gT\n") != std::string::npos);
  CHECK(csv.find("\n0.000000000000,0.5,0.425\n") != std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(count(csv, "\n") == p.samples.size() + 1 + count(csv, "# "));
}

TEST_CASE("CSV round trip") {
  const Profile p = logistic_samples(0.25);
  const std::string csv = format_profile_csv(p);
  const Profile back = parse_profile_csv(csv);
  REQUIRE(back.samples.size() == p.samples.size());
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    CHECK(back.samples[i].xi == Approx(p.samples[i].xi).epsilon(1e-12));
    CHECK(back.samples[i].stress == Approx(p.samples[i].stress).epsilon(1e-11));
  }
  CHECK(back.meta.model == "quadratic");
  CHECK(back.meta.nu == 0.25);
  CHECK(back.meta.c == p.meta.c);
  CHECK(back.meta.parameters == p.meta.parameters);
  CHECK(format_profile_csv(back) == csv);
  CHECK_THROWS_AS(parse_profile_csv("nope\n1,2,3\n"), Error);
  CHECK_THROWS_AS(parse_profile_csv("xi,T,gT\n1,2\n"), Error);
}

TEST_CASE("CSV files") {
  const auto dir = std::filesystem::temp_directory_path() / "kinkwave_cli_io_test";
  std::filesystem::create_directories(dir);
  const Profile p = logistic_samples(0.5);
  const std::string path = (dir / "p.csv").string();
  write_profile_csv(p, path);
  CHECK(read_profile_csv(path).samples.size() == p.samples.size());
  write_profile_csv(p, path);
  CHECK(format_profile_csv(read_profile_csv(path)) == format_profile_csv(p));
  CHECK_THROWS_AS(write_profile_csv(p, (dir / "missing" / "p.csv").string()), Error);
  CHECK_THROWS_AS(read_profile_csv((dir / "absent.csv").string()), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("plot script layout") {
  std::vector<Profile> ps{logistic_samples(0.25), logistic_samples(0.5), logistic_samples(1.0)};
  std::vector<std::string> paths{"a.csv", "b.csv", "c.csv"};
  const std::string s = format_plot_script(ps, paths);
  CHECK(count(s, "\nplot ") == 2);
  CHECK(count(s, "using 1:2") == 3);
  CHECK(count(s, "using 1:3") == 3);
  CHECK(s.find("title 'nu=0.25'") != std::string::npos);
  CHECK(s.find("layout 1,2") != std::string::npos);

  const std::string one = format_plot_script(std::span(ps).first(1), std::span(paths).first(1));
  CHECK(count(one, "using 1:2") == 1);
  CHECK(count(one, "using 1:3") == 1);

  ps[1].meta.model = "modelC";
  CHECK_THROWS_AS(format_plot_script(ps, paths), Error);
  CHECK_THROWS_AS(format_plot_script({}, {}), Error);
}
