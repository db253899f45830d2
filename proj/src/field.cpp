#include "quatmax/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quatmax/errors.hpp"

namespace quatmax {

namespace {

std::string describe(const Point& x) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << x(0) << ", " << x(1) << ", " << x(2) << ')';
  return os.str();
}

bool near_any(const std::vector<Point>& pts, const Point& x) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const Point& p) { return (x - p).norm() <= kSingularRadius; });
}

void require_nonzero(const Complex& v, const char* what) {
  if (v == Complex(0.0)) throw SingularityError(std::string(what) + ": operand vanishes");
}

}  // namespace

std::vector<Point> merge_singular(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out = a;
  for (const auto& p : b) {
    if (!near_any(out, p)) out.push_back(p);
  }
  return out;
}

ScalarField::ScalarField(Eval eval, int order, std::vector<Point> singular, std::string label)
    : eval_(std::make_shared<const Eval>(std::move(eval))),
      order_(order),
      singular_(std::move(singular)),
      label_(std::move(label)) {}

bool ScalarField::singular_at(const Point& x) const { return near_any(singular_, x); }

SJet ScalarField::jet(const Point& x) const {
  if (singular_at(x)) throw DomainError("scalar field '" + label_ + "' is singular at " + describe(x));
  return (*eval_)(x);
}

Vec3C ScalarField::gradient(const Point& x) const {
  if (order_ < 1) throw ContractViolation("gradient requested from order-0 field '" + label_ + "'");
  return jet(x).grad;
}

Mat3C ScalarField::hessian(const Point& x) const {
  if (order_ < 2) throw ContractViolation("second derivatives requested from field '" + label_ + "'");
  return jet(x).hess;
}

ScalarField ScalarField::labeled(std::string label) const {
  ScalarField f = *this;
  f.label_ = std::move(label);
  return f;
}

QuatField::QuatField(Eval eval, int order, bool vectorial, std::vector<Point> singular,
                     std::string label)
    : eval_(std::make_shared<const Eval>(std::move(eval))),
      order_(order),
      vectorial_(vectorial),
      singular_(std::move(singular)),
      label_(std::move(label)) {}

bool QuatField::singular_at(const Point& x) const { return near_any(singular_, x); }

QJet QuatField::jet(const Point& x) const {
  if (singular_at(x)) throw DomainError("quaternion field '" + label_ + "' is singular at " + describe(x));
  return (*eval_)(x);
}

Biquat QuatField::partial(const Point& x, int k) const {
  if (order_ < 1) throw ContractViolation("partial requested from order-0 field '" + label_ + "'");
  return jet(x).d[k];
}

QuatField QuatField::labeled(std::string label) const {
  QuatField f = *this;
  f.label_ = std::move(label);
  return f;
}

// ---------------------------------------------------------------------------
// Leaves

ScalarField constant_field(const Complex& c) {
  return ScalarField([c](const Point&) { return SJet::Constant(c); }, 2, {}, "const");
}

ScalarField coordinate(int k) {
  return ScalarField(
      [k](const Point& x) {
        SJet j;
        j.value = x(k);
        j.grad(k) = 1.0;
        return j;
      },
      2, {}, "x" + std::to_string(k + 1));
}

ScalarField exp_linear(const Vec3C& a, const Complex& d) {
  return ScalarField(
      [a, d](const Point& x) {
        SJet j;
        j.value = std::exp(dot<double>(a, x.cast<Complex>()) + d);
        j.grad = a * j.value;
        j.hess = a * a.transpose() * j.value;
        return j;
      },
      2, {}, "exp_linear");
}

ScalarField sin_linear(const Vec3C& a, const Complex& d) {
  return ScalarField(
      [a, d](const Point& x) {
        const Complex t = dot<double>(a, x.cast<Complex>()) + d;
        SJet j;
        j.value = std::sin(t);
        j.grad = a * std::cos(t);
        j.hess = -(a * a.transpose()) * j.value;
        return j;
      },
      2, {}, "sin_linear");
}

ScalarField cos_linear(const Vec3C& a, const Complex& d) {
  return ScalarField(
      [a, d](const Point& x) {
        const Complex t = dot<double>(a, x.cast<Complex>()) + d;
        SJet j;
        j.value = std::cos(t);
        j.grad = -a * std::sin(t);
        j.hess = -(a * a.transpose()) * j.value;
        return j;
      },
      2, {}, "cos_linear");
}

ScalarField radius() {
  return ScalarField(
      [](const Point& x) {
        const double r = x.norm();
        const Vec3C u = (x / r).cast<Complex>();
        SJet j;
        j.value = r;
        j.grad = u;
        j.hess = (Mat3C::Identity() - u * u.transpose()) / Complex(r);
        return j;
      },
      2, {Point::Zero()}, "r");
}

ScalarField spherical_wave(const Complex& c) {
  return ScalarField(
      [c](const Point& x) {
        const double r = x.norm();
        const Vec3C u = (x / r).cast<Complex>();
        const Complex psi = std::exp(kImag * c * r) / (4.0 * std::numbers::pi * r);
        // radial derivatives of psi(r)
        const Complex d1 = (kImag * c - 1.0 / r) * psi;
        const Complex d2 = psi / (r * r) + (kImag * c - 1.0 / r) * d1;
        const Mat3C uu = u * u.transpose();
        SJet j;
        j.value = psi;
        j.grad = d1 * u;
        j.hess = d2 * uu + (d1 / r) * (Mat3C::Identity() - uu);
        return j;
      },
      2, {Point::Zero()}, "spherical_wave");
}

// ---------------------------------------------------------------------------
// Scalar combinators

namespace {

template <typename Op>
ScalarField binary(const ScalarField& a, const ScalarField& b, Op op, const char* name) {
  return ScalarField([a, b, op](const Point& x) { return op(a.jet(x), b.jet(x)); },
                     std::min(a.order(), b.order()),
                     merge_singular(a.singular_points(), b.singular_points()),
                     "(" + a.label() + name + b.label() + ")");
}

template <typename F>
ScalarField unary(const ScalarField& a, F f, const std::string& name) {
  return ScalarField([a, f](const Point& x) { return f(a.jet(x)); }, a.order(),
                     a.singular_points(), name + "(" + a.label() + ")");
}

SJet reciprocal_jet(const SJet& u) {
  require_nonzero(u.value, "reciprocal");
  const Complex inv = 1.0 / u.value;
  return chain(u, inv, -inv * inv, 2.0 * inv * inv * inv);
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return binary(a, b, [](const SJet& p, const SJet& q) { return p + q; }, "+");
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return binary(a, b, [](const SJet& p, const SJet& q) { return p - q; }, "-");
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return binary(a, b, [](const SJet& p, const SJet& q) { return p * q; }, "*");
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return binary(a, b, [](const SJet& p, const SJet& q) { return p * reciprocal_jet(q); }, "/");
}

ScalarField operator-(const ScalarField& a) {
  return unary(a, [](const SJet& u) { return -u; }, "-");
}

ScalarField operator*(const Complex& s, const ScalarField& a) {
  return unary(a, [s](const SJet& u) { return s * u; }, "scale");
}

ScalarField operator+(const ScalarField& a, const Complex& s) {
  return unary(a, [s](SJet u) {
    u.value += s;
    return u;
  }, "shift");
}

ScalarField reciprocal(const ScalarField& a) { return unary(a, reciprocal_jet, "1/"); }

ScalarField exp(const ScalarField& a) {
  return unary(a, [](const SJet& u) {
    const Complex e = std::exp(u.value);
    return chain(u, e, e, e);
  }, "exp");
}

ScalarField sqrt(const ScalarField& a) {
  return unary(a, [](const SJet& u) {
    require_nonzero(u.value, "sqrt");
    const Complex s = std::sqrt(u.value);
    return chain(u, s, 0.5 / s, -0.25 / (s * s * s));
  }, "sqrt");
}

ScalarField atan(const ScalarField& a) {
  return unary(a, [](const SJet& u) {
    const Complex w = 1.0 / (1.0 + u.value * u.value);
    return chain(u, std::atan(u.value), w, -2.0 * u.value * w * w);
  }, "atan");
}

// ---------------------------------------------------------------------------
// Quaternion fields

QuatField constant_quat(const Biquat& q) {
  return QuatField(
      [q](const Point&) {
        QJet j;
        j.value = q;
        return j;
      },
      2, q.is_vectorial(), {}, "const");
}

QuatField quat_field(const ScalarField& f0, const ScalarField& f1, const ScalarField& f2,
                     const ScalarField& f3) {
  auto sing = merge_singular(merge_singular(f0.singular_points(), f1.singular_points()),
                             merge_singular(f2.singular_points(), f3.singular_points()));
  const int order = std::min({f0.order(), f1.order(), f2.order(), f3.order()});
  return QuatField(
      [f0, f1, f2, f3](const Point& x) {
        const std::array<SJet, 4> c = {f0.jet(x), f1.jet(x), f2.jet(x), f3.jet(x)};
        QJet j;
        for (int i = 0; i < 4; ++i) {
          j.value[i] = c[i].value;
          for (int k = 0; k < 3; ++k) {
            j.d[k][i] = c[i].grad(k);
            for (int l = 0; l < 3; ++l) j.dd[k][l][i] = c[i].hess(k, l);
          }
        }
        return j;
      },
      order, false, std::move(sing), "quat");
}

QuatField vector_field(const ScalarField& f1, const ScalarField& f2, const ScalarField& f3) {
  auto sing = merge_singular(merge_singular(f1.singular_points(), f2.singular_points()),
                             f3.singular_points());
  const int order = std::min({f1.order(), f2.order(), f3.order()});
  return QuatField(
      [f1, f2, f3](const Point& x) {
        const std::array<SJet, 3> c = {f1.jet(x), f2.jet(x), f3.jet(x)};
        QJet j;
        for (int i = 0; i < 3; ++i) {
          j.value[i + 1] = c[i].value;
          for (int k = 0; k < 3; ++k) {
            j.d[k][i + 1] = c[i].grad(k);
            for (int l = 0; l < 3; ++l) j.dd[k][l][i + 1] = c[i].hess(k, l);
          }
        }
        return j;
      },
      order, true, std::move(sing), "vector");
}

QuatField position_field() {
  return vector_field(coordinate(0), coordinate(1), coordinate(2)).labeled("x");
}

QuatField embed(const ScalarField& s) {
  return QuatField([s](const Point& x) { return embed(s.jet(x)); }, s.order(), false,
                   s.singular_points(), s.label());
}

ScalarField component(const QuatField& f, int k) {
  return ScalarField([f, k](const Point& x) { return component(f.jet(x), k); }, f.order(),
                     f.singular_points(), f.label() + "[" + std::to_string(k) + "]");
}

ScalarField scalar_part(const QuatField& f) { return component(f, 0); }

QuatField vector_part(const QuatField& f) {
  return QuatField(
      [f](const Point& x) {
        QJet j = f.jet(x);
        j.value[0] = 0.0;
        for (int k = 0; k < 3; ++k) {
          j.d[k][0] = 0.0;
          for (int l = 0; l < 3; ++l) j.dd[k][l][0] = 0.0;
        }
        return j;
      },
      f.order(), true, f.singular_points(), "Vec(" + f.label() + ")");
}

namespace {

template <typename Op>
QuatField qbinary(const QuatField& a, const QuatField& b, Op op, bool vectorial, const char* name) {
  return QuatField([a, b, op](const Point& x) { return op(a.jet(x), b.jet(x)); },
                   std::min(a.order(), b.order()), vectorial,
                   merge_singular(a.singular_points(), b.singular_points()),
                   "(" + a.label() + name + b.label() + ")");
}

}  // namespace

QuatField operator+(const QuatField& a, const QuatField& b) {
  return qbinary(a, b, [](const QJet& p, const QJet& q) { return p + q; },
                 a.vectorial() && b.vectorial(), "+");
}

QuatField operator-(const QuatField& a, const QuatField& b) {
  return qbinary(a, b, [](const QJet& p, const QJet& q) { return p - q; },
                 a.vectorial() && b.vectorial(), "-");
}

QuatField operator-(const QuatField& a) { return Complex(-1.0) * a; }

QuatField operator*(const QuatField& a, const QuatField& b) {
  return qbinary(a, b, [](const QJet& p, const QJet& q) { return p * q; }, false, "*");
}

QuatField operator*(const ScalarField& s, const QuatField& f) {
  return QuatField([s, f](const Point& x) { return s.jet(x) * f.jet(x); },
                   std::min(s.order(), f.order()), f.vectorial(),
                   merge_singular(s.singular_points(), f.singular_points()),
                   "(" + s.label() + "*" + f.label() + ")");
}

QuatField operator*(const QuatField& f, const ScalarField& s) { return s * f; }

QuatField operator*(const Complex& s, const QuatField& f) {
  return QuatField([s, f](const Point& x) { return s * f.jet(x); }, f.order(), f.vectorial(),
                   f.singular_points(), f.label());
}

}  // namespace quatmax
