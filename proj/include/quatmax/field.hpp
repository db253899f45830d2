#pragma once

// Closed-form scalar and quaternion fields over R^3.
//
// A field evaluates to a jet at a point. `order()` is the number of
// derivative levels the jet carries exactly: leaves are order 2, and every
// differentiation (gradient, D) lowers it by one. Requesting a derivative
// beyond the order throws ContractViolation instead of returning garbage.

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "quatmax/biquaternion.hpp"
#include "quatmax/jet.hpp"

namespace quatmax {

using Point = Eigen::Vector3d;
using SJet = ScalarJet<double>;
using QJet = QuatJet<double>;
using Mat3C = SJet::Matrix;

/// Points closer than this to a declared singularity are rejected.
inline constexpr double kSingularRadius = 1e-12;

class ScalarField {
 public:
  using Eval = std::function<SJet(const Point&)>;

  ScalarField(Eval eval, int order, std::vector<Point> singular = {}, std::string label = {});

  SJet jet(const Point& x) const;
  Complex value(const Point& x) const { return jet(x).value; }
  Vec3C gradient(const Point& x) const;
  Mat3C hessian(const Point& x) const;
  Complex laplacian(const Point& x) const { return hessian(x).trace(); }

  int order() const { return order_; }
  const std::vector<Point>& singular_points() const { return singular_; }
  bool singular_at(const Point& x) const;
  const std::string& label() const { return label_; }
  ScalarField labeled(std::string label) const;

 private:
  std::shared_ptr<const Eval> eval_;
  int order_;
  std::vector<Point> singular_;
  std::string label_;
};

class QuatField {
 public:
  using Eval = std::function<QJet(const Point&)>;

  QuatField(Eval eval, int order, bool vectorial, std::vector<Point> singular = {},
            std::string label = {});

  QJet jet(const Point& x) const;
  Biquat value(const Point& x) const { return jet(x).value; }
  /// ∂_k f at x.
  Biquat partial(const Point& x, int k) const;

  int order() const { return order_; }
  /// Declared structurally: true when the scalar component is identically zero.
  bool vectorial() const { return vectorial_; }
  const std::vector<Point>& singular_points() const { return singular_; }
  bool singular_at(const Point& x) const;
  const std::string& label() const { return label_; }
  QuatField labeled(std::string label) const;

 private:
  std::shared_ptr<const Eval> eval_;
  int order_;
  bool vectorial_;
  std::vector<Point> singular_;
  std::string label_;
};

std::vector<Point> merge_singular(const std::vector<Point>& a, const std::vector<Point>& b);

// Leaves. Each carries hand-written value, gradient and Hessian.

ScalarField constant_field(const Complex& c);
/// x_k for k in {0, 1, 2}.
ScalarField coordinate(int k);
/// exp(<a, x> + d).
ScalarField exp_linear(const Vec3C& a, const Complex& d = 0.0);
/// sin(<a, x> + d).
ScalarField sin_linear(const Vec3C& a, const Complex& d = 0.0);
/// cos(<a, x> + d).
ScalarField cos_linear(const Vec3C& a, const Complex& d = 0.0);
/// |x|, singular at the origin.
ScalarField radius();
/// exp(i c |x|) / (4 pi |x|), singular at the origin.
ScalarField spherical_wave(const Complex& c);

// Scalar combinators.

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(const Complex& s, const ScalarField& a);
ScalarField operator+(const ScalarField& a, const Complex& s);
ScalarField reciprocal(const ScalarField& a);
ScalarField exp(const ScalarField& a);
/// Principal branch; SingularityError where the argument vanishes.
ScalarField sqrt(const ScalarField& a);
ScalarField atan(const ScalarField& a);

// Quaternion fields.

QuatField constant_quat(const Biquat& q);
QuatField quat_field(const ScalarField& f0, const ScalarField& f1, const ScalarField& f2,
                     const ScalarField& f3);
QuatField vector_field(const ScalarField& f1, const ScalarField& f2, const ScalarField& f3);
/// x = x1 i1 + x2 i2 + x3 i3.
QuatField position_field();
QuatField embed(const ScalarField& s);
ScalarField component(const QuatField& f, int k);
ScalarField scalar_part(const QuatField& f);
QuatField vector_part(const QuatField& f);

QuatField operator+(const QuatField& a, const QuatField& b);
QuatField operator-(const QuatField& a, const QuatField& b);
QuatField operator-(const QuatField& a);
/// Algebra product, factor order preserved.
QuatField operator*(const QuatField& a, const QuatField& b);
QuatField operator*(const ScalarField& s, const QuatField& f);
QuatField operator*(const QuatField& f, const ScalarField& s);
QuatField operator*(const Complex& s, const QuatField& f);

}  // namespace quatmax
