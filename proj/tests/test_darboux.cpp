#include <doctest.h>

#include <numbers>
#include <random>

#include "quatmax/calculus.hpp"
#include "quatmax/darboux.hpp"
#include "quatmax/errors.hpp"
#include "quatmax/maxwell.hpp"

using namespace quatmax;

namespace {

std::vector<Point> shell_points(std::uint64_t seed, int n, double rmin, double rmax) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-rmax, rmax);
  std::vector<Point> pts;
  while (int(pts.size()) < n) {
    const Point x(u(rng), u(rng), u(rng));
    if (x.norm() > rmin && x.norm() <= rmax) pts.push_back(x);
  }
  return pts;
}

const ScalarField x1 = coordinate(0);

}  // namespace

TEST_CASE("potentials") {
  const Point x(0.3, -0.1, 0.6);
  CHECK(std::abs(GeneratingFunction(exp_linear(Vec3C(1, 0, 0))).v.value(x) - 1.0) < 1e-15);
  const double c = 1.7;
  CHECK(std::abs(GeneratingFunction(exp_linear(Vec3C(0, 0, kImag * c))).v.value(x) + c * c) < 1e-14);
  CHECK(std::abs(GeneratingFunction(spherical_wave(c)).v.value(x) + c * c) < 1e-13);
  CHECK(GeneratingFunction(x1).v.order() == 0);
}

TEST_CASE("Darboux transform by hand") {
  const GeneratingFunction plane(exp_linear(Vec3C(0, 0, kImag)));
  const QuatField f = darboux_transform(plane, {exp_linear(Vec3C(kImag, 0, 0)), plane.v});
  CHECK(norm_inf(f.value(Point::Zero()) - kImag * (kI1 - kI3)) < 1e-15);
  const Point x(0.4, 0.2, -0.3);
  CHECK(norm_inf(f.value(x) - kImag * std::exp(kImag * 0.4) * (kI1 - kI3)) < 1e-15);

  const GeneratingFunction e(exp_linear(Vec3C(1, 0, 0)));
  const QuatField g = darboux_transform(e, {exp_linear(Vec3C(-1, 0, 0)), e.v});
  CHECK(norm_inf(g.value(x) + 2.0 * std::exp(-0.4) * kI1) < 1e-15);

  const QuatField same = darboux_transform(e, {e.phi, e.v});
  CHECK(norm_inf(same.value(x)) == 0.0);
}

TEST_CASE("potential mismatch is a contract violation") {
  const GeneratingFunction e(exp_linear(Vec3C(1, 0, 0)));
  CHECK_THROWS_AS(darboux_transform(e, {exp_linear(Vec3C(2, 0, 0)), e.v}), ContractViolation);
  CHECK_THROWS_AS(darboux_transform(e, {x1, constant_field(0.0)}), ContractViolation);
}

TEST_CASE("Darboux field solves the Dirac equation on the rational pair") {
  // φ = 1 + x1², ψ = x1 + (1 + x1²) atan(x1), v = 2 / (1 + x1²)
  const ScalarField phi = x1 * x1 + Complex(1.0);
  const ScalarField psi = x1 + phi * atan(x1);
  const GeneratingFunction g(phi);
  const QuatField f = darboux_transform(g, {psi, g.v});
  for (const auto& x : shell_points(1, 200, 0.0, 1.5)) {
    CHECK(std::abs(g.v.value(x) - 2.0 / (1.0 + x(0) * x(0))) < 1e-14);
    CHECK(norm_inf(dirac_residual(f, g.alpha, x)) <= 1e-12);
  }
  CHECK(dirac_residual(constant_quat(kI1), constant_quat(Biquat::Zero()), Point::Zero()) == Biquat::Zero());
}

TEST_CASE("Riccati equation") {
  const GeneratingFunction e(exp_linear(Vec3C(1, 0, 0)));
  CHECK(norm_inf(riccati_residual(e.alpha, e.v, Point(0.1, 0.2, 0.3))) == 0.0);
  CHECK(riccati_residual(constant_quat(kI1), constant_field(0.0), Point::Zero()) == -kOne);
  for (const auto& phi : {spherical_wave(2.0), exp_linear(Vec3C(0.3, kImag, 0.5)),
                          exp_linear(Vec3C(1, 0, 0)) + exp_linear(Vec3C(0, 1, 0))}) {
    const GeneratingFunction g(phi);
    for (const auto& x : shell_points(2, 100, 0.1, 1.0)) CHECK(norm_inf(riccati_residual(g.alpha, g.v, x)) <= 1e-10);
  }
}

TEST_CASE("factorization") {
  const GeneratingFunction e(exp_linear(Vec3C(1, 0, 0)));
  const GeneratingFunction plane(exp_linear(Vec3C(0, 0, kImag)));
  const QuatField none = constant_quat(Biquat::Zero());
  const ScalarField u = sin_linear(Vec3C(1, 0.5, 0)) * x1;
  for (const auto& x : shell_points(3, 100, 0.0, 1.0)) {
    CHECK(norm_inf(factorization_residual(constant_field(3.0), e.alpha, e.v, x)) <= 1e-12);
    CHECK(norm_inf(factorization_residual(x1, plane.alpha, plane.v, x)) <= 1e-10);
    CHECK(norm_inf(factorization_residual(u, none, constant_field(0.0), x)) <= 1e-12);
  }
  CHECK_THROWS_AS(factorization_residual(u, constant_quat(kI1), constant_field(0.0), Point::Zero()),
                  ContractViolation);
}

TEST_CASE("fundamental solution") {
  CHECK(std::abs(fundamental_psi(0.0, Point(1, 0, 0)) - 0.079577471545948) < 1e-15);
  CHECK(std::abs(fundamental_psi(2.0, Point(0, 1, 0)) - std::exp(Complex(0, 2)) / (4 * std::numbers::pi)) < 1e-15);
  CHECK_THROWS_AS(fundamental_psi(1.0, Point::Zero()), SingularityError);

  // φ = 1: the gradient of the Newtonian potential
  const GeneratingFunction one(constant_field(1.0));
  const Point x(0.3, -0.5, 0.2);
  const double r = x.norm();
  const Biquat newton = Biquat::FromVector(x.cast<Complex>() * (-1.0 / (4 * std::numbers::pi * r * r * r)));
  CHECK(norm_inf(fundamental_solution(one, 0.0, x) - newton) < 1e-15);

  const GeneratingFunction plane(exp_linear(Vec3C(0, 0, kImag)));
  const Biquat expected = (-kI1 + kImag * kI1 - kImag * kI3) * (std::exp(kImag) / (4 * std::numbers::pi));
  CHECK(norm_inf(fundamental_solution(plane, 1.0, Point(1, 0, 0)) - expected) < 1e-15);
  CHECK_THROWS_AS(fundamental_solution(plane, 2.0, Point(1, 0, 0)), ContractViolation);
  CHECK_THROWS_AS(fundamental_solution(plane, 1.0, Point::Zero()), SingularityError);

  const QuatField closed = fundamental_solution_field(plane, 1.0);
  const QuatField route = darboux_transform(plane, {fundamental_psi(1.0), plane.v});
  for (const auto& p : shell_points(4, 300, 0.1, 2.0)) {
    CHECK(norm_inf(closed.value(p) - fundamental_solution(plane, 1.0, p)) <= 1e-11);
    CHECK(norm_inf(route.value(p) - fundamental_solution(plane, 1.0, p)) <= 1e-11);
    CHECK(norm_inf(dirac_residual(closed, plane.alpha, p)) <= 1e-9);
    CHECK(std::abs(fundamental_psi(1.0).laplacian(p) + fundamental_psi(1.0, p)) <= 1e-9);
  }
}

TEST_CASE("static Maxwell fields") {
  const Point x(0.2, -0.6, 0.4);
  const QuatField E = static_maxwell_solution(vacuum(), {x1, constant_field(0.0)});
  CHECK(E.value(x) == kI1);
  const QuatField none = constant_quat(Biquat::Zero());
  const MediumProfile m = make_profile("planewave-phi:c=0,0,1");
  const QuatField F = static_maxwell_solution(m, {exp_linear(Vec3C(kImag, 0, 0)), constant_field(-1.0)});
  const QuatField S = static_maxwell_solution(m, {fundamental_psi(1.0), constant_field(-1.0)});
  for (const auto& p : shell_points(5, 100, 0.1, 1.0)) {
    const auto c = classical_residuals(F, none, m, SourceData::Zero(0.0), p);
    CHECK(std::max(norm_inf(c.s1), norm_inf(c.s2)) <= 1e-10);
    const auto d = classical_residuals(S, none, m, SourceData::Zero(0.0), p);
    CHECK(std::max(norm_inf(d.s1), norm_inf(d.s2)) <= 1e-8);
  }
}

TEST_CASE("grid Dirac residual is second order") {
  const GeneratingFunction e(exp_linear(Vec3C(1, 0, 0)));
  const QuatField f = darboux_transform(e, {exp_linear(Vec3C(-1, 0, 0)), e.v});
  const ConvergenceStudy st = convergence_study(GridSpec::Cube(-1, 1, 0.25), 3, [&](const GridSpec& g) {
    return grid_dirac_residual(f, e.alpha, g);
  });
  for (double o : st.order) CHECK(o == doctest::Approx(2.0).epsilon(0.05));
}
