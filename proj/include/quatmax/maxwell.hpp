#pragma once

// Residuals of the time-harmonic Maxwell system in inhomogeneous media, in
// classical form
//
//   s1 = div(εE) - ρ          s2 = rot E + iωμH
//   s3 = div(μH)              s4 = rot H - iωεE - j
//
// and in quaternionic form for ℰ = √ε E, ℋ = √μ H, k = ω√ε√μ
//
//   R1 = (D + M^ε⃗)ℰ + ikℋ + ρ/√ε
//   R2 = (D + M^μ⃗)ℋ - ikℰ - √μ j
//
// where M^p q = q p. The two are related pointwise by
//
//   R1 = -s1/√ε + √ε s2,   R2 = -s3/√μ + √μ s4
//
// for arbitrary fields, not only solutions.

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quatmax/grid.hpp"
#include "quatmax/media.hpp"

namespace quatmax {

struct ClassicalResiduals {
  Complex s1{0};
  Vec3C s2 = Vec3C::Zero();
  Complex s3{0};
  Vec3C s4 = Vec3C::Zero();
};

struct QuaternionicResiduals {
  Biquat R1;
  Biquat R2;
};

ClassicalResiduals classical_residuals(const QuatField& E, const QuatField& H,
                                       const MediumProfile& m, const SourceData& s, const Point& x);

/// Arguments are the rescaled fields ℰ, ℋ.
QuaternionicResiduals quaternionic_residuals(const QuatField& scaled_E, const QuatField& scaled_H,
                                             const TransformedQuantities& t, const SourceData& s,
                                             const Point& x);

QuaternionicResiduals equivalence_map(const ClassicalResiduals& c, const Complex& sqrt_eps,
                                      const Complex& sqrt_mu);
QuaternionicResiduals equivalence_map(const ClassicalResiduals& c, const TransformedQuantities& t,
                                      const Point& x);

/// s1 = -√ε Sc(R1), s2 = Vec(R1)/√ε, and likewise for R2.
ClassicalResiduals inverse_map(const QuaternionicResiduals& q, const Complex& sqrt_eps,
                               const Complex& sqrt_mu);

enum class StaticEquation { Electric, Magnetic };

/// (D + M^ε⃗)ℰ + ρ/√ε or (D + M^μ⃗)ℋ - √μ j. Requires ω = 0.
Biquat static_residual(StaticEquation which, const QuatField& field, const TransformedQuantities& t,
                       const SourceData& s, const Point& x);

/// Sources that make (E, H) an exact solution: ρ = div(εE), j = rot H - iωεE.
SourceData manufacture_sources(const QuatField& E, const QuatField& H, const MediumProfile& m,
                               const Complex& omega);

/// H = (i/ω) rot E / μ, which makes s2 and s3 vanish identically. Requires ω ≠ 0;
/// H is one derivative order below E.
QuatField faraday_partner(const QuatField& E, const MediumProfile& m, const Complex& omega);

struct ResidualReport {
  std::string profile;
  Complex omega{0};
  GridSpec grid;
  std::size_t valid_nodes = 0;
  std::vector<std::pair<std::string, Norms>> residuals;

  const Norms& at(const std::string& name) const;
  nlohmann::json to_json() const;
};

using PointResiduals = std::function<std::vector<Biquat>(const Point&)>;

/// Evaluates `eval` on every non-excluded node and aggregates each named
/// residual. Per-node values are computed in parallel and reduced serially,
/// so the report does not depend on the worker count.
ResidualReport sweep(const GridSpec& grid, const std::vector<std::string>& names,
                     const PointResiduals& eval, std::string profile = {}, Complex omega = 0.0);

/// Aggregates precomputed residual grids (e.g. built with grid-differenced D).
ResidualReport sweep(const std::vector<std::string>& names, const std::vector<GridField>& fields,
                     std::string profile = {}, Complex omega = 0.0);

/// s1..s4 from E, H and R1, R2 from their rescaled versions, all exact.
ResidualReport sweep_maxwell(const QuatField& E, const QuatField& H, const MediumProfile& m,
                             const SourceData& s, const GridSpec& grid);

/// R1, R2 with D replaced by central differences on the grid.
std::pair<GridField, GridField> grid_quaternionic_residuals(const QuatField& scaled_E,
                                                            const QuatField& scaled_H,
                                                            const TransformedQuantities& t,
                                                            const SourceData& s,
                                                            const GridSpec& grid);

}  // namespace quatmax
