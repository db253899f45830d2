// quatmax: verification suites, field generation and convergence studies.
//
// Exit status: 0 pass, 1 failed check / inconclusive study / runtime error,
// 2 usage or configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "quatmax/errors.hpp"
#include "quatmax/harness.hpp"

namespace {

using namespace quatmax;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<double>& require(const ParamMap& p, const std::string& key, std::size_t n,
                                   const std::string& what) {
  auto it = p.find(key);
  if (it == p.end()) throw ConfigError(what + ": missing '" + key + "='");
  if (it->second.size() != n && !(n == 3 && it->second.size() == 1)) {
    throw ConfigError(what + ": '" + key + "' needs " + std::to_string(n) + " value(s)");
  }
  return it->second;
}

Point point_of(const std::vector<double>& v) {
  return v.size() == 1 ? Point::Constant(v[0]) : Point(v[0], v[1], v[2]);
}

void reject_unknown(const ParamMap& p, std::initializer_list<const char*> known, const std::string& what) {
  for (const auto& [k, _] : p) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw ConfigError(what + ": unknown key '" + k + "'");
  }
}

/// "o=-1,-1,-1,h=0.0625,n=33" (o and n take one or three values).
GridSpec parse_grid(const std::string& text) {
  const ParamMap p = parse_params(text);
  reject_unknown(p, {"o", "h", "n"}, "--grid");
  GridSpec g;
  if (p.count("o")) g.origin = point_of(require(p, "o", 3, "--grid"));
  if (p.count("h")) g.h = require(p, "h", 1, "--grid")[0];
  if (p.count("n")) {
    const auto& n = require(p, "n", 3, "--grid");
    for (int k = 0; k < 3; ++k) {
      const double v = n.size() == 1 ? n[0] : n[std::size_t(k)];
      if (v != double(int(v))) throw ConfigError("--grid: counts must be integers");
      g.counts[std::size_t(k)] = int(v);
    }
  }
  g.validate();
  return g;
}

/// "c=0,0,0,r=0.1".
Ball parse_ball(const std::string& text) {
  const ParamMap p = parse_params(text);
  reject_unknown(p, {"c", "r"}, "--exclude");
  Ball b;
  if (p.count("c")) b.center = point_of(require(p, "c", 3, "--exclude"));
  b.radius = require(p, "r", 1, "--exclude")[0];
  if (!(b.radius > 0.0)) throw ConfigError("--exclude: radius must be positive");
  return b;
}

/// "1" or "1,0.5" for 1 + 0.5i.
Complex parse_complex(const std::string& text, const std::string& what) {
  std::vector<double> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw ConfigError(what + ": cannot parse '" + text + "'");
    v.push_back(d);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() > 2) throw ConfigError(what + ": expected re or re,im");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path + " for writing");
  os << j.dump(2) << '\n';
}

int report_verify(const SuiteReport& rep, const RunConfig& cfg) {
  if (cfg.out) write_json(*cfg.out, rep.to_json());
  for (const auto& c : rep.checks) {
    std::printf("%-4s %-60s %.3e%s%s\n", c.passed() ? "ok" : "FAIL", c.name.c_str(), c.observed,
                c.location.empty() ? "" : "  at ", c.location.c_str());
  }
  if (const Check* f = rep.first_failure()) {
    std::fprintf(stderr, "first failure: %s observed %.6e%s%s%s%s\n", f->name.c_str(), f->observed,
                 f->location.empty() ? "" : " at ", f->location.c_str(),
                 f->detail.empty() ? "" : ": ", f->detail.c_str());
    return kExitFail;
  }
  std::printf("%s: %zu checks passed in %.2f s\n", rep.suite.c_str(), rep.checks.size(),
              rep.elapsed_seconds);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biquaternionic Maxwell equations in inhomogeneous media"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string profile, grid, exclude, omega, c, psi, out;
  std::vector<std::string> tol;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--profile", profile, "medium, e.g. exp:a=1,0,0");
    sub->add_option("--omega", omega, "frequency, re or re,im");
    sub->add_option("--grid", grid, "o=x[,y,z],h=..,n=n[,n,n]");
    sub->add_option("--exclude", exclude, "exclusion ball c=x,y,z,r=..");
    sub->add_option("--seed", cfg.seed, "seed for sampled suites");
    sub->add_option("--out", out, "report path (verify, convergence) or output stem (generate)");
    sub->add_option("--c", c, "wavenumber for spherical waves, re or re,im");
    sub->add_option("--psi", psi, "Schrodinger solution, e.g. planewave:c=1,0,0");
    sub->add_option("--points", cfg.points, "random points per check")->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol, "tolerance override name=value (repeatable)");
  };

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", cfg.target, "algebra | identities | riccati | darboux | equivalence | fundamental | all")
      ->required();
  common(verify);

  auto* generate = app.add_subcommand("generate", "sample an exact solution onto a grid");
  generate->add_option("solution", cfg.target, "darboux | fundamental | planewave")->required();
  common(generate);

  auto* convergence = app.add_subcommand("convergence", "observed order of grid-differenced D");
  convergence->add_option("op", cfg.target, "d-sin | d-linear | darboux | maxwell")->required();
  common(convergence);
  convergence->set_help_flag("--help", "print this help message and exit");
  convergence->add_option("--h", cfg.h, "coarsest spacing")->check(CLI::PositiveNumber);
  convergence->add_option("--levels", cfg.levels, "number of refinements")->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!profile.empty()) cfg.profile = profile;
    if (!omega.empty()) cfg.omega = parse_complex(omega, "--omega");
    if (!grid.empty()) cfg.grid = parse_grid(grid);
    if (!exclude.empty()) cfg.exclusion = parse_ball(exclude);
    if (!c.empty()) cfg.c = parse_complex(c, "--c");
    if (!psi.empty()) cfg.psi = psi;
    if (!out.empty()) cfg.out = out;
    for (const auto& t : tol) cfg.tol.override_with(t);

    if (verify->parsed()) {
      cfg.command = "verify";
      return report_verify(run_verify(cfg), cfg);
    }
    if (generate->parsed()) {
      cfg.command = "generate";
      const GenerateResult r = run_generate(cfg);
      for (const auto& f : r.files) std::printf("wrote %s\n", f.c_str());
      return kExitPass;
    }
    cfg.command = "convergence";
    const ConvergenceReport r = run_convergence(cfg);
    if (cfg.out) write_json(*cfg.out, r.to_json());
    std::printf("%-8s %-14s %s\n", "h", "error", "order");
    for (std::size_t l = 0; l < r.study.h.size(); ++l) {
      std::printf("%-8.5g %-14.6e", r.study.h[l], r.study.error[l]);
      if (l > 0) std::printf(" %.4f", r.study.order[l - 1]);
      std::printf("\n");
    }
    std::printf("%s: %s\n", r.op.c_str(), r.status.c_str());
    return r.status == "pass" || r.status == "exact" ? kExitPass : kExitFail;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "quatmax: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "quatmax: %s\n", e.what());
    return kExitFail;
  }
}
