#pragma once

// Static solutions of (D + M^α)f = 0 with α = grad φ / φ.
//
// φ solves -Δφ + vφ = 0 for v = Δφ/φ. For any other solution ψ of the same
// Schrödinger equation, f = (D - α)ψ = grad ψ - ψ α solves (D + M^α) f = 0.
// The same α satisfies the Riccati equation Dα + α² = -v, which factors
// the Schrödinger operator on scalars as (D + M^α)(D - M^α) = -Δ + v.

#include <span>
#include <vector>

#include "quatmax/field.hpp"
#include "quatmax/grid.hpp"
#include "quatmax/media.hpp"

namespace quatmax {

/// Tolerance for deciding that ψ and φ share a potential.
inline constexpr double kPotentialMatchTol = 1e-8;

/// v = Δφ/φ. Order 0: only values are exact.
ScalarField potential_from_phi(const ScalarField& phi);

struct GeneratingFunction {
  ScalarField phi;
  QuatField alpha;
  ScalarField v;

  explicit GeneratingFunction(const ScalarField& phi);
};

struct SchrodingerSolution {
  ScalarField psi;
  ScalarField v;
};

/// -Δψ + vψ at x.
Complex schrodinger_residual(const ScalarField& psi, const ScalarField& v, const Point& x);

/// 27 fixed points in [-0.75, 0.8]^3, none at the origin.
std::vector<Point> default_probe_points();

/// Throws ContractViolation if, at any probe point, the potentials differ or
/// ψ fails its Schrödinger equation by more than kPotentialMatchTol.
void check_potential_match(const GeneratingFunction& g, const SchrodingerSolution& psi,
                           std::span<const Point> probes);

/// f = grad ψ - ψ grad φ / φ, checked against the probes first.
QuatField darboux_transform(const GeneratingFunction& g, const SchrodingerSolution& psi,
                            std::span<const Point> probes);
QuatField darboux_transform(const GeneratingFunction& g, const SchrodingerSolution& psi);

/// (D + M^α) f = D f + f α.
Biquat dirac_residual(const QuatField& f, const QuatField& alpha, const Point& x);

/// D α + α α + v.
Biquat riccati_residual(const QuatField& alpha, const ScalarField& v, const Point& x);

/// Riccati residual accepted as a precondition of the factorization.
inline constexpr double kRiccatiTol = 1e-10;

/// (D + M^α)(D - M^α)u - (-Δ + v)u. Requires the Riccati residual at x to be
/// at most kRiccatiTol.
Biquat factorization_residual(const ScalarField& u, const QuatField& alpha, const ScalarField& v,
                              const Point& x);

/// exp(i c |x|) / (4 pi |x|), a fundamental solution of -Δ - c².
ScalarField fundamental_psi(const Complex& c);
Complex fundamental_psi(const Complex& c, const Point& x);

/// (-x/|x|² + i c x/|x| - grad φ/φ) exp(i c |x|)/(4 pi |x|), with x as a vector.
/// Requires Δφ/φ = -c² at x.
Biquat fundamental_solution(const GeneratingFunction& g, const Complex& c, const Point& x);

/// The same closed form as a field, assembled from its factors.
QuatField fundamental_solution_field(const GeneratingFunction& g, const Complex& c);

/// Source-free static electric field E = (D - ε⃗)ψ / √ε in the medium m.
QuatField static_maxwell_solution(const MediumProfile& m, const SchrodingerSolution& psi,
                                  std::span<const Point> probes);
QuatField static_maxwell_solution(const MediumProfile& m, const SchrodingerSolution& psi);

/// D f + f α with D from central differences on the grid.
GridField grid_dirac_residual(const QuatField& f, const QuatField& alpha, const GridSpec& grid);

}  // namespace quatmax
