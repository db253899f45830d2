#include <doctest.h>

#include <random>

#include "quatmax/calculus.hpp"
#include "quatmax/errors.hpp"

using namespace quatmax;

namespace {

std::vector<Point> cube_points(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng), u(rng));
  return pts;
}

const ScalarField x1 = coordinate(0);
const ScalarField x2 = coordinate(1);
const ScalarField x3 = coordinate(2);
const ScalarField zero = constant_field(0.0);

}  // namespace

TEST_CASE("D on hand-differentiated fields") {
  const Point x(0.4, -0.3, 0.9);
  CHECK(apply_D(x1, x) == kI1);
  CHECK(apply_D(vector_field(x1, zero, zero), x) == -kOne);
  CHECK(apply_D(vector_field(x2, zero, zero), x) == -kI3);
  CHECK(apply_D(quat_field(x1, x2, zero, zero), x) == kI1 - kI3);
  CHECK(apply_D(constant_quat(Biquat(1.0, 2.0, kImag, 4.0)), x) == Biquat::Zero());
  CHECK(apply_D(position_field(), x) == -3.0 * kOne);
}

TEST_CASE("classical pieces") {
  const Point x(0.4, -0.3, 0.9);
  const QuatField f = quat_field(x1 * x2, x2 * x3, x3 * x1, x1 * x2 * x3);
  // div(x2 x3, x3 x1, x1 x2 x3) = 0 + 0 + x1 x2
  CHECK(std::abs(div(f, x) - Complex(x(0) * x(1))) < 1e-15);
  CHECK(norm_inf(Vec3C(grad(f, x) - Vec3C(x(1), x(0), 0.0))) < 1e-15);
  // rot = (x1 x3 - x1, x2 - x2 x3, x3 - x3)
  const Vec3C r(x(0) * x(2) - x(0), x(1) - x(1) * x(2), 0.0);
  CHECK(norm_inf(Vec3C(rot(f, x) - r)) < 1e-15);
  CHECK(norm_inf(apply_D(f, x) - vector_form_D(f, x)) < 1e-15);
}

TEST_CASE("Leibniz rule") {
  const Point x(0.2, 0.5, -0.7);
  CHECK(norm_inf(leibniz_residual(constant_field(1.0), position_field(), x)) == 0.0);
  CHECK(leibniz_residual(x1, constant_quat(kI2), x) == Biquat::Zero());
  const ScalarField e = exp_linear(Vec3C(1.0, 0.0, 0.0));
  const QuatField f = vector_field(x2, zero, zero);
  for (const auto& p : cube_points(1, 200)) CHECK(norm_inf(leibniz_residual(e, f, p)) <= 1e-12);
}

TEST_CASE("gauge identity") {
  const ScalarField e1 = exp_linear(Vec3C(1.0, 0.0, 0.0));
  const ScalarField e3 = exp_linear(Vec3C(0.0, 0.0, kImag));
  const QuatField f = constant_quat(kOne + kI1);
  for (const auto& p : cube_points(2, 200)) {
    CHECK(gauge_identity_residual(constant_field(2.0), position_field(), p) == Biquat::Zero());
    CHECK(norm_inf(gauge_identity_residual(e1, constant_quat(kI2), p)) <= 1e-12);
    CHECK(norm_inf(gauge_identity_residual(e3, f, p)) <= 1e-12);
  }
  CHECK_THROWS_AS(gauge_identity_residual(x1, f, Point::Zero()), SingularityError);
}

TEST_CASE("D squared is minus the Laplacian on scalars") {
  const ScalarField u = sin_linear(Vec3C(1.0, 0.0, 0.0)) * exp_linear(Vec3C(0.0, 0.5, 0.0)) + x3 * x3;
  const QuatField du = D(u);
  for (const auto& p : cube_points(3, 200)) {
    CHECK(norm_inf(apply_D(du, p) + Biquat::FromScalar(u.laplacian(p))) <= 1e-12);
  }
}
