#include <doctest.h>

#include <numbers>

#include "quatmax/calculus.hpp"
#include "quatmax/errors.hpp"
#include "quatmax/field.hpp"

using namespace quatmax;

namespace {

constexpr double kStep = 1e-5;

// Central-difference oracles, built only from field values or exact gradients.
Vec3C fd_gradient(const ScalarField& f, const Point& x) {
  Vec3C g;
  for (int k = 0; k < 3; ++k) {
    const Point e = Point::Unit(k) * kStep;
    g(k) = (f.value(x + e) - f.value(x - e)) / (2.0 * kStep);
  }
  return g;
}

Mat3C fd_hessian(const ScalarField& f, const Point& x) {
  Mat3C h;
  for (int k = 0; k < 3; ++k) {
    const Point e = Point::Unit(k) * kStep;
    h.col(k) = (f.gradient(x + e) - f.gradient(x - e)) / Complex(2.0 * kStep);
  }
  return h;
}

double rel(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

void check_against_fd(const ScalarField& f, const std::vector<Point>& pts) {
  for (const auto& x : pts) {
    CAPTURE(f.label());
    CAPTURE(x.transpose());
    CHECK(rel(f.gradient(x), fd_gradient(f, x)) < 1e-8);
    CHECK(rel(f.hessian(x), fd_hessian(f, x)) < 1e-8);
  }
}

const std::vector<Point> kPoints = {Point(0.3, -0.2, 0.7), Point(-0.9, 0.5, 0.1),
                                    Point(0.6, 0.8, -0.4), Point(0.05, -0.6, -0.95)};

}  // namespace

TEST_CASE("leaf jets match finite differences") {
  check_against_fd(coordinate(1), kPoints);
  check_against_fd(exp_linear(Vec3C(0.5, Complex(0, -1), 0.3), Complex(0.1, 0.2)), kPoints);
  check_against_fd(sin_linear(Vec3C(1.0, 0.2, Complex(0, 0.4))), kPoints);
  check_against_fd(cos_linear(Vec3C(0.7, 0.0, -1.1), 0.3), kPoints);
  check_against_fd(radius(), kPoints);
  check_against_fd(spherical_wave(Complex(2.0, 0.3)), kPoints);
}

TEST_CASE("combinator jets match finite differences") {
  const ScalarField x1 = coordinate(0), x2 = coordinate(1), x3 = coordinate(2);
  const ScalarField e = exp_linear(Vec3C(0.3, -0.2, 0.5));
  check_against_fd(x1 * x2 + x3 * e, kPoints);
  check_against_fd(e / (x1 * x1 + Complex(2.0)), kPoints);
  check_against_fd(reciprocal(radius()), kPoints);
  check_against_fd(exp(Complex(0, 1) * x1 * x2), kPoints);
  check_against_fd(sqrt(e + Complex(1.0, 1.0)), kPoints);
  check_against_fd(atan(x1 - x3), kPoints);
  check_against_fd(-(x2 - e), kPoints);
}

TEST_CASE("direct values") {
  const Point unit(1.0, 0.0, 0.0);
  CHECK(std::abs(spherical_wave(0.0).value(unit) - 0.079577471545948) < 1e-15);
  const Complex expected = std::exp(Complex(0, 2)) / (4.0 * std::numbers::pi);
  CHECK(std::abs(spherical_wave(2.0).value(Point(0, 0.6, 0.8)) - expected) < 1e-15);
  CHECK(std::abs(spherical_wave(1.0).laplacian(Point(0.3, 0.2, -0.4)) +
                 spherical_wave(1.0).value(Point(0.3, 0.2, -0.4))) < 1e-12);
}

TEST_CASE("differentiation lowers the order") {
  const ScalarField u = sin_linear(Vec3C(1.0, 0.0, 0.0));
  CHECK(u.order() == 2);
  const QuatField g = gradient(u);
  CHECK(g.order() == 1);
  CHECK(g.vectorial());
  const QuatField dd = D(g);
  CHECK(dd.order() == 0);
  CHECK_NOTHROW(dd.value(kPoints[0]));
  CHECK_THROWS_AS(dd.partial(kPoints[0], 0), ContractViolation);
  CHECK_THROWS_AS(D(dd), ContractViolation);
  CHECK_THROWS_AS(scalar_part(dd).gradient(kPoints[0]), ContractViolation);
  CHECK_THROWS_AS(scalar_part(g).hessian(kPoints[0]), ContractViolation);
}

TEST_CASE("singular points and zero divisors") {
  CHECK_THROWS_AS(radius().value(Point::Zero()), DomainError);
  CHECK_THROWS_AS(spherical_wave(1.0).value(Point(1e-13, 0, 0)), DomainError);
  CHECK_NOTHROW(radius().value(Point(1e-6, 0, 0)));
  const ScalarField x1 = coordinate(0);
  CHECK_THROWS_AS(reciprocal(x1).value(Point::Zero()), SingularityError);
  CHECK_THROWS_AS(sqrt(x1).value(Point::Zero()), SingularityError);
  // the product inherits both declared singularities
  const ScalarField two = spherical_wave(1.0) * (radius() + Complex(1.0));
  CHECK(two.singular_points().size() == 1);
}

TEST_CASE("principal square root") {
  const ScalarField f = constant_field(Complex(-4.0, 1e-300));
  CHECK(std::abs(sqrt(f).value(Point::Zero()) - Complex(0.0, 2.0)) < 1e-15);
  const ScalarField g = constant_field(Complex(-4.0, -1e-300));
  CHECK(std::abs(sqrt(g).value(Point::Zero()) - Complex(0.0, -2.0)) < 1e-15);
}

TEST_CASE("quaternion field algebra keeps factor order") {
  const QuatField a = constant_quat(kI1) * embed(coordinate(0));
  const QuatField b = constant_quat(kI2);
  const Point x(2.0, 0.0, 0.0);
  CHECK(norm_inf((a * b).value(x) - 2.0 * kI3) == 0.0);
  CHECK(norm_inf((b * a).value(x) + 2.0 * kI3) == 0.0);
  CHECK(norm_inf((a * b).partial(x, 0) - kI3) == 0.0);
  CHECK(position_field().vectorial());
  CHECK_FALSE((position_field() * position_field()).vectorial());
  CHECK(vector_part(position_field() * position_field()).vectorial());
}
