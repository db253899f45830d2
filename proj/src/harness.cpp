#include "quatmax/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "quatmax/calculus.hpp"
#include "quatmax/darboux.hpp"
#include "quatmax/errors.hpp"
#include "quatmax/maxwell.hpp"

namespace quatmax {

std::vector<Point> random_points(std::uint64_t seed, std::size_t count, double lo, double hi,
                                 const std::vector<Point>& avoid, double min_distance) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    Point x;
    for (int k = 0; k < 3; ++k) x(k) = lo + (hi - lo) * unit_uniform(rng);
    bool ok = true;
    for (const Point& p : avoid) ok = ok && (x - p).norm() > min_distance;
    if (ok) pts.push_back(x);
  }
  return pts;
}

double Tolerances::operator[](const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw ConfigError("no tolerance named '" + key + "'");
  return it->second;
}

void Tolerances::override_with(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("tolerance override must be name=value");
  const std::string key = assignment.substr(0, eq);
  auto it = values.find(key);
  if (it == values.end()) throw ConfigError("no tolerance named '" + key + "'");
  double v = 0.0;
  try {
    v = std::stod(assignment.substr(eq + 1));
  } catch (const std::exception&) {
    throw ConfigError("bad tolerance value in '" + assignment + "'");
  }
  if (!(v > 0.0)) throw ConfigError("tolerances must be positive");
  it->second = v;
}

bool Check::passed() const {
  if (!std::isfinite(observed)) return false;
  switch (kind) {
    case Kind::AtMost:
      return observed <= bound;
    case Kind::AtLeast:
      return observed >= bound;
    case Kind::Within:
      return observed >= bound && observed <= upper;
  }
  return false;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const Check* SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed()) return &c;
  }
  return nullptr;
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["profile"] = profile;
  j["omega"] = {{"re", omega.real()}, {"im", omega.imag()}};
  j["passed"] = passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["observed"] = std::isfinite(c.observed) ? nlohmann::json(c.observed) : nlohmann::json(nullptr);
    switch (c.kind) {
      case Check::Kind::AtMost:
        e["at_most"] = c.bound;
        break;
      case Check::Kind::AtLeast:
        e["at_least"] = c.bound;
        break;
      case Check::Kind::Within:
        e["within"] = {c.bound, c.upper};
        break;
    }
    e["passed"] = c.passed();
    if (!c.location.empty()) e["location"] = c.location;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (with_timing) j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
  return j;
}

SuiteReport run_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  // reject a bad profile even for suites that do not use one
  if (cfg.profile) make_profile(*cfg.profile);
  SuiteReport rep;
  auto run_one = [&](const std::string& name) -> SuiteReport {
    if (name == "algebra") return verify_algebra(cfg);
    if (name == "identities") return verify_identities(cfg);
    if (name == "riccati") return verify_riccati(cfg);
    if (name == "darboux") return verify_darboux(cfg);
    if (name == "equivalence") return verify_equivalence(cfg);
    if (name == "fundamental") return verify_fundamental(cfg);
    throw ConfigError("unknown suite '" + name + "'");
  };
  if (cfg.target == "all") {
    rep.suite = "all";
    for (const auto& name : kSuites) {
      SuiteReport part = run_one(name);
      for (auto& c : part.checks) {
        c.name = name + "/" + c.name;
        rep.checks.push_back(std::move(c));
      }
    }
  } else {
    rep = run_one(cfg.target);
  }
  rep.seed = cfg.seed;
  rep.profile = cfg.profile.value_or("catalog");
  rep.omega = cfg.omega;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// ψ selection

ScalarField make_psi(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const ParamMap p = colon == std::string::npos ? ParamMap{} : parse_params(spec.substr(colon + 1));
  auto vec3 = [&](const std::string& key) {
    auto it = p.find(key);
    if (it == p.end() || it->second.size() != 3) {
      throw ConfigError("psi '" + name + "' needs " + key + "=<three values>");
    }
    return Eigen::Vector3d(it->second[0], it->second[1], it->second[2]);
  };
  auto scalar = [&](const std::string& key, double fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    if (it->second.size() != 1) throw ConfigError("psi parameter '" + key + "' takes one value");
    return it->second[0];
  };
  if (name == "x1" || name == "x2" || name == "x3") return coordinate(name[1] - '1');
  if (name == "planewave") return exp_linear(kImag * vec3("c").cast<Complex>()).labeled("psi");
  if (name == "exp") return exp_linear(vec3("a").cast<Complex>(), scalar("d", 0.0)).labeled("psi");
  if (name == "spherical") return fundamental_psi(Complex(scalar("c", 1.0), scalar("ci", 0.0)));
  throw ConfigError("unknown psi '" + spec + "'");
}

std::string default_psi(const MediumProfile& m) {
  char buf[160];
  const std::string spec = m.spec;
  const auto params = spec.find(':') == std::string::npos ? ParamMap{}
                                                          : parse_params(spec.substr(spec.find(':') + 1));
  if (m.name == "vacuum") return "x1";
  if (m.name == "exp" || m.name == "product-exp") {
    const auto& a = params.at("a");
    std::snprintf(buf, sizeof buf, "exp:a=%.17g,%.17g,%.17g", -0.5 * a[0], -0.5 * a[1], -0.5 * a[2]);
    return buf;
  }
  if (m.name == "planewave-phi") {
    const auto& c = params.at("c");
    const double len = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    int k = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(c[i]) < std::abs(c[k])) k = i;
    }
    double v[3] = {0, 0, 0};
    v[k] = len;
    std::snprintf(buf, sizeof buf, "planewave:c=%.17g,%.17g,%.17g", v[0], v[1], v[2]);
    return buf;
  }
  if (m.name == "spherical") {
    const double c = params.at("c")[0];
    const double ci = params.count("ci") ? params.at("ci")[0] : 0.0;
    if (ci != 0.0) throw ConfigError("no default psi for complex c; pass --psi");
    std::snprintf(buf, sizeof buf, "planewave:c=%.17g,0,0", c);
    return buf;
  }
  throw ConfigError("no default psi for profile '" + m.name + "'");
}

// ---------------------------------------------------------------------------
// generate

namespace {

std::string stem_of(const std::string& out) {
  std::filesystem::path p(out);
  if (p.extension() == ".csv" || p.extension() == ".json") p.replace_extension();
  return p.string();
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path + " for writing");
  os << j.dump(2) << '\n';
}

GridSpec with_exclusion(GridSpec g, const std::optional<Ball>& b) {
  if (b) g.exclusion = b;
  g.validate();
  return g;
}

}  // namespace

GenerateResult run_generate(const RunConfig& cfg) {
  if (!cfg.out) throw ConfigError("generate needs --out");
  const std::string stem = stem_of(*cfg.out);
  GenerateResult res;
  nlohmann::json meta;
  meta["solution"] = cfg.target;
  meta["seed"] = cfg.seed;

  if (cfg.target == "darboux") {
    const MediumProfile m = make_profile(cfg.profile.value_or("planewave-phi:c=0,0,1"));
    const std::string psi_spec = cfg.psi.value_or(default_psi(m));
    const GridSpec grid = with_exclusion(cfg.grid.value_or(GridSpec{}), cfg.exclusion);
    const GeneratingFunction g(m.phi());
    const QuatField f = darboux_transform(g, {make_psi(psi_spec), g.v});
    const GridField sampled = sample(f, grid);
    write_csv(stem + ".csv", sampled);
    res.files.push_back(stem + ".csv");
    meta["profile"] = m.spec;
    meta["psi"] = psi_spec;
    meta["report"] = sweep(grid, {"dirac"}, [&](const Point& x) {
                       return std::vector<Biquat>{dirac_residual(f, g.alpha, x)};
                     }, m.spec, 0.0).to_json();
  } else if (cfg.target == "fundamental") {
    const MediumProfile m = make_profile(cfg.profile.value_or("planewave-phi:c=0,0,1"));
    const Complex c = cfg.c.value_or(1.0);
    GridSpec grid;
    if (cfg.grid) {
      grid = with_exclusion(*cfg.grid, cfg.exclusion);
    } else {
      grid = GridSpec::Cube(-2.0, 2.0, 0.125, cfg.exclusion.value_or(Ball{Point::Zero(), 0.1}));
    }
    const GeneratingFunction g(m.phi());
    const QuatField f = fundamental_solution_field(g, c);
    const GridField sampled = sample(f, grid);
    write_csv(stem + ".csv", sampled);
    res.files.push_back(stem + ".csv");
    meta["profile"] = m.spec;
    meta["c"] = {{"re", c.real()}, {"im", c.imag()}};
    meta["report"] = sweep(grid, {"dirac"}, [&](const Point& x) {
                       return std::vector<Biquat>{dirac_residual(f, g.alpha, x)};
                     }, m.spec, 0.0).to_json();
  } else if (cfg.target == "planewave") {
    const GridSpec grid = with_exclusion(cfg.grid.value_or(GridSpec{}), cfg.exclusion);
    const Complex w = cfg.omega;
    const MediumProfile m = vacuum();
    const ScalarField wave = exp_linear(Vec3C(-kImag * w, 0.0, 0.0));
    const ScalarField zero = constant_field(0.0);
    const QuatField E = vector_field(zero, zero, wave);
    const QuatField H = vector_field(zero, -wave, zero);
    write_csv(stem + "_E.csv", sample(E, grid));
    write_csv(stem + "_H.csv", sample(H, grid));
    res.files.push_back(stem + "_E.csv");
    res.files.push_back(stem + "_H.csv");
    meta["profile"] = m.spec;
    meta["report"] = sweep_maxwell(E, H, m, SourceData::Zero(w), grid).to_json();
  } else {
    throw ConfigError("unknown solution '" + cfg.target + "'");
  }
  write_json(stem + ".json", meta);
  res.files.push_back(stem + ".json");
  res.metadata = std::move(meta);
  return res;
}

// ---------------------------------------------------------------------------
// convergence

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["op"] = op;
  j["h"] = study.h;
  j["error"] = study.error;
  j["order"] = study.order;
  j["exact"] = study.exact;
  j["monotone"] = study.monotone;
  j["status"] = status;
  return j;
}

std::string classify(const ConvergenceStudy& study, double lo, double hi) {
  if (study.exact) return "exact";
  if (!study.monotone) return "inconclusive";
  const bool ok = std::all_of(study.order.begin(), study.order.end(),
                              [&](double o) { return o >= lo && o <= hi; });
  return ok ? "pass" : "fail";
}

ConvergenceReport run_convergence(const RunConfig& cfg) {
  const GridSpec coarse = GridSpec::Cube(-1.0, 1.0, cfg.h);
  std::function<GridField(const GridSpec&)> error_field;

  // grid D of f minus exact D f
  auto d_error = [](const QuatField& f) {
    return [f](const GridSpec& s) {
      const GridField approx = apply_D_grid(sample(f, s));
      const GridField exact = sample(D(f), s);
      return combine(approx, exact, [](const Biquat& a, const Biquat& b) { return a - b; });
    };
  };

  if (cfg.target == "d-sin") {
    error_field = d_error(embed(sin_linear(Vec3C(1.0, 0.0, 0.0))));
  } else if (cfg.target == "d-linear") {
    const ScalarField x1 = coordinate(0), x2 = coordinate(1), x3 = coordinate(2);
    error_field = d_error(quat_field(x1 + 2.0, Complex(2.0) * x2, x3 - x1, Complex(0.5, 1.0) * x1));
  } else if (cfg.target == "darboux") {
    const MediumProfile m = make_profile(cfg.profile.value_or("exp:a=2,0,0"));
    const std::string psi_spec = cfg.psi.value_or(default_psi(m));
    const GeneratingFunction g(m.phi());
    const QuatField f = darboux_transform(g, {make_psi(psi_spec), g.v});
    error_field = [f, g](const GridSpec& s) { return grid_dirac_residual(f, g.alpha, s); };
  } else if (cfg.target == "maxwell") {
    const MediumProfile m = make_profile(cfg.profile.value_or("product-exp"));
    // Curl-free E at ω = 0 keeps Faraday's law exact there too.
    const QuatField E = cfg.omega == Complex(0.0)
                            ? gradient(sin_linear(Vec3C(1.0, 0.5, 0.0)) * coordinate(2))
                            : vector_field(sin_linear(Vec3C(0.0, 1.0, 0.0)), cos_linear(Vec3C(1.0, 0.0, 1.0)),
                                           coordinate(0) * coordinate(1));
    const QuatField H = cfg.omega == Complex(0.0) ? constant_quat(Biquat::Zero())
                                                  : faraday_partner(E, m, cfg.omega);
    const SourceData s = manufacture_sources(E, H, m, cfg.omega);
    const TransformedQuantities t = transform(m, cfg.omega, default_probe_points());
    const auto [se, sh] = scale_fields(E, H, t);
    error_field = [se, sh, t, s](const GridSpec& g) {
      auto [r1, r2] = grid_quaternionic_residuals(se, sh, t, s, g);
      return combine(r1, r2, [](const Biquat& a, const Biquat& b) {
        return norm_inf(a) >= norm_inf(b) ? a : b;
      });
    };
  } else {
    throw ConfigError("unknown convergence op '" + cfg.target + "'");
  }

  ConvergenceReport rep{cfg.target, convergence_study(coarse, cfg.levels, error_field), ""};
  rep.status = classify(rep.study, cfg.tol["order.lo"], cfg.tol["order.hi"]);
  return rep;
}

}  // namespace quatmax
