#pragma once

// Verification suites, field generation and convergence studies behind the
// `quatmax` command line tool.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quatmax/biquaternion.hpp"
#include "quatmax/field.hpp"
#include "quatmax/grid.hpp"
#include "quatmax/media.hpp"

namespace quatmax {

/// Deterministic uniform points in [lo, hi]^3, keeping at least `min_distance`
/// from every point in `avoid`. Identical for identical arguments on every platform.
std::vector<Point> random_points(std::uint64_t seed, std::size_t count, double lo, double hi,
                                 const std::vector<Point>& avoid = {}, double min_distance = 0.0);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

struct Tolerances {
  std::map<std::string, double> values = {
      {"algebra.table", 0.0},
      {"algebra.assoc", 1e-12},
      {"algebra.formula", 1e-14},
      {"algebra.anticommutator", 1e-14},
      {"identities", 1e-10},
      {"identities.vector_form", 1e-13},
      {"riccati", 1e-10},
      {"riccati.witness", 1e-3},
      {"riccati.perturbed_floor", 1e-5},
      {"factorization", 1e-9},
      {"darboux", 1e-10},
      {"order.lo", 1.8},
      {"order.hi", 2.2},
      {"equivalence", 1e-11},
      {"equivalence.bookkeeping", 1e-13},
      {"exact_solution", 1e-10},
      {"fundamental.route", 1e-11},
      {"fundamental.dirac", 1e-8},
      {"fundamental.helmholtz", 1e-9},
      {"static", 1e-9},
  };

  double operator[](const std::string& key) const;
  /// "name=value"; unknown names and non-positive values throw ConfigError.
  void override_with(const std::string& assignment);
};

struct RunConfig {
  std::string command;
  /// Suite, solution or convergence operation name.
  std::string target;
  std::optional<std::string> profile;
  Complex omega{1.0, 0.0};
  std::optional<GridSpec> grid;
  std::optional<Ball> exclusion;
  std::optional<Complex> c;
  std::optional<std::string> psi;
  std::uint64_t seed = 42;
  std::size_t points = 1000;
  std::size_t algebra_samples = 100000;
  double h = 0.1;
  int levels = 3;
  std::optional<std::string> out;
  Tolerances tol;
};

struct Check {
  enum class Kind { AtMost, AtLeast, Within };

  std::string name;
  Kind kind = Kind::AtMost;
  double observed = 0.0;
  double bound = 0.0;
  /// Upper end for Kind::Within.
  double upper = 0.0;
  std::string location;
  std::string detail;

  bool passed() const;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string profile;
  Complex omega{0};
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;

  bool passed() const;
  const Check* first_failure() const;
  /// Timing lives under "timing" so the rest is reproducible byte for byte.
  nlohmann::json to_json(bool with_timing = true) const;
};

inline const std::vector<std::string> kSuites = {"algebra",     "identities", "riccati",
                                                 "darboux",     "equivalence", "fundamental"};

/// Runs a suite by name, or every suite for "all". Unknown names throw ConfigError.
SuiteReport run_verify(const RunConfig& cfg);

SuiteReport verify_algebra(const RunConfig& cfg);
SuiteReport verify_identities(const RunConfig& cfg);
SuiteReport verify_riccati(const RunConfig& cfg);
SuiteReport verify_darboux(const RunConfig& cfg);
SuiteReport verify_equivalence(const RunConfig& cfg);
SuiteReport verify_fundamental(const RunConfig& cfg);

/// Scalar ψ from "planewave:c=..", "exp:a=..,d=..", "spherical:c=..", "x1", "x2", "x3".
ScalarField make_psi(const std::string& spec);
/// A ψ sharing the potential of the profile's generating function, distinct from it.
std::string default_psi(const MediumProfile& m);

struct GenerateResult {
  std::vector<std::string> files;
  nlohmann::json metadata;
};

/// Samples darboux | fundamental | planewave onto the grid and writes CSV plus
/// a JSON sidecar next to cfg.out.
GenerateResult run_generate(const RunConfig& cfg);

struct ConvergenceReport {
  std::string op;
  ConvergenceStudy study;
  /// "pass", "fail", "exact" or "inconclusive".
  std::string status;

  nlohmann::json to_json() const;
};

/// "exact" when every error is at rounding level, "inconclusive" when the
/// errors do not decrease, otherwise "pass" iff every order lies in [lo, hi].
std::string classify(const ConvergenceStudy& study, double lo, double hi);

/// d-sin | d-linear | darboux | maxwell over [-1, 1]^3 at h, h/2, ...
ConvergenceReport run_convergence(const RunConfig& cfg);

}  // namespace quatmax
