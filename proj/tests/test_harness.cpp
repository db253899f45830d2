#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "quatmax/errors.hpp"
#include "quatmax/harness.hpp"

using namespace quatmax;

namespace {

RunConfig small_config(const std::string& target) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.target = target;
  cfg.points = 50;
  cfg.algebra_samples = 2000;
  return cfg;
}

std::string temp_stem(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("quatmax_test_" + name)).string();
}

}  // namespace

TEST_CASE("random points are reproducible and avoid singularities") {
  const std::vector<Point> avoid = {Point::Zero()};
  const auto a = random_points(42, 500, -1.0, 1.0, avoid, 0.3);
  const auto b = random_points(42, 500, -1.0, 1.0, avoid, 0.3);
  const auto c = random_points(43, 500, -1.0, 1.0, avoid, 0.3);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& x : a) {
    CHECK(x.norm() > 0.3);
    CHECK(x.cwiseAbs().maxCoeff() <= 1.0);
  }
}

TEST_CASE("tolerances") {
  Tolerances t;
  CHECK(t["riccati"] == 1e-10);
  t.override_with("riccati=1e-8");
  CHECK(t["riccati"] == 1e-8);
  CHECK_THROWS_AS(t.override_with("nope=1"), ConfigError);
  CHECK_THROWS_AS(t.override_with("riccati=-1"), ConfigError);
  CHECK_THROWS_AS(t.override_with("riccati=abc"), ConfigError);
  CHECK_THROWS_AS(t.override_with("riccati"), ConfigError);
  CHECK_THROWS_AS(t["nope"], ConfigError);
}

TEST_CASE("checks") {
  Check c{"x", Check::Kind::AtMost, 1.0, 2.0, 0.0, "", ""};
  CHECK(c.passed());
  c.observed = 3.0;
  CHECK_FALSE(c.passed());
  c.observed = std::nan("");
  CHECK_FALSE(c.passed());
  Check w{"y", Check::Kind::Within, 2.0, 1.8, 2.2, "", ""};
  CHECK(w.passed());
  w.observed = 2.3;
  CHECK_FALSE(w.passed());
}

TEST_CASE("every suite passes on a small sample and reports its seed") {
  for (const auto& name : kSuites) {
    CAPTURE(name);
    const SuiteReport rep = run_verify(small_config(name));
    CHECK(rep.passed());
    CHECK_FALSE(rep.checks.empty());
    const auto j = rep.to_json(false);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("suite") == name);
    CHECK_FALSE(j.contains("timing"));
  }
  CHECK_THROWS_AS(run_verify(small_config("quantum")), ConfigError);
}

TEST_CASE("reports are deterministic apart from timing") {
  RunConfig cfg = small_config("identities");
  const auto a = run_verify(cfg).to_json(false).dump();
  const auto b = run_verify(cfg).to_json(false).dump();
  CHECK(a == b);
  cfg.seed = 7;
  CHECK(run_verify(cfg).to_json(false).dump() != a);
  CHECK(run_verify(cfg).to_json(true).contains("timing"));
}

TEST_CASE("a tightened tolerance fails with a location") {
  RunConfig cfg = small_config("identities");
  cfg.profile = "product-exp";
  cfg.tol.override_with("identities=1e-300");
  const SuiteReport rep = run_verify(cfg);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK_FALSE(rep.first_failure()->location.empty());
}

TEST_CASE("psi selection") {
  const Point x(0.2, 0.1, 0.5);
  CHECK(make_psi("x2").value(x) == Complex(0.1));
  CHECK(std::abs(make_psi("planewave:c=1,0,0").value(x) - std::exp(Complex(0, 0.2))) < 1e-15);
  CHECK_THROWS_AS(make_psi("planewave:c=1"), ConfigError);
  CHECK_THROWS_AS(make_psi("bessel"), ConfigError);
  CHECK(default_psi(make_profile("vacuum")) == "x1");
  CHECK(default_psi(make_profile("planewave-phi:c=0,0,2")) == "planewave:c=2,0,0");
  CHECK(default_psi(make_profile("exp:a=2,0,0")) == "exp:a=-1,-0,-0");
}

TEST_CASE("generate writes the CSV schema and a sidecar") {
  RunConfig cfg;
  cfg.command = "generate";
  cfg.target = "fundamental";
  cfg.out = temp_stem("fundamental");
  const GenerateResult r = run_generate(cfg);
  REQUIRE(r.files.size() == 2);
  std::ifstream csv(r.files[0]);
  std::string line;
  std::getline(csv, line);
  CHECK(line == kCsvHeader);
  std::size_t rows = 0, invalid = 0;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.back() == '0') {
      ++invalid;
      CHECK(line.rfind("0,0,0,", 0) == 0);
    }
  }
  CHECK(rows == 33u * 33u * 33u);
  CHECK(invalid == 1u);
  CHECK(r.metadata.at("report").at("residuals").at("dirac").at("linf").get<double>() <= 1e-8);
  CHECK(r.metadata.at("report").at("grid").at("exclusion").at("radius") == 0.1);

  cfg.target = "planewave";
  cfg.out = temp_stem("planewave");
  const GenerateResult p = run_generate(cfg);
  CHECK(p.files.size() == 3);
  for (const auto& [name, n] : p.metadata.at("report").at("residuals").items()) {
    CHECK(n.at("linf").get<double>() <= 1e-13);
  }

  cfg.target = "darboux";
  cfg.profile = "planewave-phi:c=0,0,1";
  cfg.psi = "spherical:c=1";
  cfg.out = temp_stem("darboux");
  CHECK_THROWS_AS(run_generate(cfg), ConfigError);
  cfg.exclusion = Ball{Point::Zero(), 0.1};
  CHECK_NOTHROW(run_generate(cfg));

  cfg.out.reset();
  CHECK_THROWS_AS(run_generate(cfg), ConfigError);
  for (const auto& f : r.files) std::filesystem::remove(f);
  for (const auto& f : p.files) std::filesystem::remove(f);
}

TEST_CASE("convergence statuses") {
  RunConfig cfg;
  cfg.command = "convergence";
  cfg.h = 0.1;
  cfg.levels = 3;
  cfg.target = "d-sin";
  const auto s = run_convergence(cfg);
  CHECK(s.status == "pass");
  for (double o : s.study.order) CHECK(o == doctest::Approx(2.0).epsilon(0.02));
  cfg.target = "d-linear";
  CHECK(run_convergence(cfg).status == "exact");
  cfg.target = "darboux";
  CHECK(run_convergence(cfg).status == "pass");
  cfg.target = "maxwell";
  CHECK(run_convergence(cfg).status == "pass");
  cfg.target = "curl";
  CHECK_THROWS_AS(run_convergence(cfg), ConfigError);
}

TEST_CASE("convergence classification") {
  ConvergenceStudy st;
  st.error = {4e-3, 1e-3, 2.5e-4};
  st.order = {2.0, 2.0};
  CHECK(classify(st, 1.8, 2.2) == "pass");
  st.order = {1.0, 2.0};
  CHECK(classify(st, 1.8, 2.2) == "fail");
  st.monotone = false;
  CHECK(classify(st, 1.8, 2.2) == "inconclusive");
  st.exact = true;
  CHECK(classify(st, 1.8, 2.2) == "exact");
}
