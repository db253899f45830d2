#include "quatmax/darboux.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "quatmax/calculus.hpp"
#include "quatmax/errors.hpp"

namespace quatmax {

namespace {

std::string where(const Point& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", x(0), x(1), x(2));
  return buf;
}

}  // namespace

ScalarField potential_from_phi(const ScalarField& phi) {
  if (phi.order() < 2) throw ContractViolation("potential needs a twice differentiable phi");
  return ScalarField(
      [phi](const Point& x) {
        const SJet j = phi.jet(x);
        if (j.value == Complex(0.0)) throw SingularityError("phi vanishes at " + where(x));
        SJet v;
        v.value = j.laplacian() / j.value;
        v.grad.setConstant(Complex(std::nan(""), std::nan("")));
        v.hess.setConstant(Complex(std::nan(""), std::nan("")));
        return v;
      },
      0, phi.singular_points(), "lap(" + phi.label() + ")/" + phi.label());
}

GeneratingFunction::GeneratingFunction(const ScalarField& phi_)
    : phi(phi_), alpha(log_derivative_vector(phi_)), v(potential_from_phi(phi_)) {}

Complex schrodinger_residual(const ScalarField& psi, const ScalarField& v, const Point& x) {
  return -psi.laplacian(x) + v.value(x) * psi.value(x);
}

std::vector<Point> default_probe_points() {
  static constexpr double coords[] = {-0.75, 0.25, 0.8};
  std::vector<Point> pts;
  for (double a : coords) {
    for (double b : coords) {
      for (double c : coords) pts.emplace_back(a, b, c);
    }
  }
  return pts;
}

void check_potential_match(const GeneratingFunction& g, const SchrodingerSolution& psi,
                           std::span<const Point> probes) {
  for (const Point& x : probes) {
    if (g.phi.singular_at(x) || psi.psi.singular_at(x) || psi.v.singular_at(x)) continue;
    const double mismatch = std::abs(psi.v.value(x) - g.v.value(x));
    if (mismatch > kPotentialMatchTol) {
      throw ContractViolation("potential of psi differs from lap(phi)/phi by " +
                              std::to_string(mismatch) + " at " + where(x));
    }
    const double res = std::abs(schrodinger_residual(psi.psi, g.v, x));
    if (res > kPotentialMatchTol) {
      throw ContractViolation("psi does not solve the Schrodinger equation of phi (residual " +
                              std::to_string(res) + ") at " + where(x));
    }
  }
}

QuatField darboux_transform(const GeneratingFunction& g, const SchrodingerSolution& psi,
                            std::span<const Point> probes) {
  check_potential_match(g, psi, probes);
  return (gradient(psi.psi) - psi.psi * g.alpha).labeled("darboux");
}

QuatField darboux_transform(const GeneratingFunction& g, const SchrodingerSolution& psi) {
  const auto probes = default_probe_points();
  return darboux_transform(g, psi, probes);
}

Biquat dirac_residual(const QuatField& f, const QuatField& alpha, const Point& x) {
  if (!f.vectorial() || !alpha.vectorial()) {
    throw ContractViolation("dirac_residual: f and alpha must be purely vectorial");
  }
  return apply_D(f, x) + right_mul(alpha.value(x))(f.value(x));
}

Biquat riccati_residual(const QuatField& alpha, const ScalarField& v, const Point& x) {
  if (!alpha.vectorial()) throw ContractViolation("riccati_residual: alpha must be purely vectorial");
  const Biquat a = alpha.value(x);
  return apply_D(alpha, x) + mul(a, a) + Biquat::FromScalar(v.value(x));
}

Biquat factorization_residual(const ScalarField& u, const QuatField& alpha, const ScalarField& v,
                              const Point& x) {
  const double ric = norm_inf(riccati_residual(alpha, v, x));
  if (ric > kRiccatiTol) {
    throw ContractViolation("factorization: alpha violates the Riccati equation by " +
                            std::to_string(ric) + " at " + where(x));
  }
  // (D - M^α) u = D u - u α
  const QuatField inner = gradient(u) - u * alpha;
  const Biquat outer = apply_D(inner, x) + right_mul(alpha.value(x))(inner.value(x));
  return outer - Biquat::FromScalar(-u.laplacian(x) + v.value(x) * u.value(x));
}

ScalarField fundamental_psi(const Complex& c) { return spherical_wave(c).labeled("psi_c"); }

Complex fundamental_psi(const Complex& c, const Point& x) {
  if (x.norm() == 0.0) throw SingularityError("fundamental solution evaluated at the origin");
  return fundamental_psi(c).value(x);
}

namespace {

void require_helmholtz(const GeneratingFunction& g, const Complex& c, const Point& x) {
  const double mismatch = std::abs(g.v.value(x) + c * c);
  if (mismatch > 1e-10) {
    throw ContractViolation("lap(phi)/phi differs from -c^2 by " + std::to_string(mismatch) +
                            " at " + where(x));
  }
}

}  // namespace

Biquat fundamental_solution(const GeneratingFunction& g, const Complex& c, const Point& x) {
  const double r = x.norm();
  if (r == 0.0) throw SingularityError("fundamental solution evaluated at the origin");
  require_helmholtz(g, c, x);
  const Biquat xq = Biquat::FromVector(x.cast<Complex>());
  const Complex psi = std::exp(kImag * c * r) / (4.0 * std::numbers::pi * r);
  const Biquat factor = (-1.0 / (r * r)) * xq + (kImag * c / r) * xq - g.alpha.value(x);
  return factor * psi;
}

QuatField fundamental_solution_field(const GeneratingFunction& g, const Complex& c) {
  for (const Point& x : default_probe_points()) {
    if (!g.phi.singular_at(x)) require_helmholtz(g, c, x);
  }
  const QuatField X = position_field();
  const ScalarField r = radius();
  const QuatField factor = (-1.0 * reciprocal(r * r)) * X + ((kImag * c) * reciprocal(r)) * X - g.alpha;
  return (factor * fundamental_psi(c)).labeled("fundamental");
}

QuatField static_maxwell_solution(const MediumProfile& m, const SchrodingerSolution& psi,
                                  std::span<const Point> probes) {
  const TransformedQuantities t = transform(m, 0.0, probes);
  const GeneratingFunction g(t.sqrt_eps);
  const QuatField scaled = darboux_transform(g, psi, probes);
  return (reciprocal(t.sqrt_eps) * scaled).labeled("E_static");
}

QuatField static_maxwell_solution(const MediumProfile& m, const SchrodingerSolution& psi) {
  const auto probes = default_probe_points();
  return static_maxwell_solution(m, psi, probes);
}

GridField grid_dirac_residual(const QuatField& f, const QuatField& alpha, const GridSpec& grid) {
  if (!f.vectorial() || !alpha.vectorial()) {
    throw ContractViolation("grid_dirac_residual: f and alpha must be purely vectorial");
  }
  const GridField sampled = sample(f, grid);
  GridField r = apply_D_grid(sampled);
  parallel_for(grid.size(), [&](std::size_t n) {
    if (!r.valid[n]) return;
    r.values[n] += right_mul(alpha.value(grid.node(n)))(sampled.values[n]);
  });
  return r;
}

}  // namespace quatmax
