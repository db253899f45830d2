#include "quatmax/calculus.hpp"

#include "quatmax/errors.hpp"

namespace quatmax {

namespace {

void require_order(int order, int needed, const std::string& label) {
  if (order < needed) {
    throw ContractViolation("field '" + label + "' has derivative order " + std::to_string(order) +
                            ", " + std::to_string(needed) + " required");
  }
}

}  // namespace

Biquat apply_D(const QuatField& f, const Point& x) {
  require_order(f.order(), 1, f.label());
  const QJet j = f.jet(x);
  Biquat r;
  for (int k = 0; k < 3; ++k) r += mul(Biquat::Unit(k + 1), j.d[k]);
  return r;
}

Biquat apply_D(const ScalarField& f, const Point& x) { return Biquat::FromVector(f.gradient(x)); }

Complex div(const QuatField& f, const Point& x) {
  require_order(f.order(), 1, f.label());
  const QJet j = f.jet(x);
  return j.d[0][1] + j.d[1][2] + j.d[2][3];
}

Vec3C grad(const QuatField& f, const Point& x) {
  require_order(f.order(), 1, f.label());
  const QJet j = f.jet(x);
  return Vec3C(j.d[0][0], j.d[1][0], j.d[2][0]);
}

Vec3C grad(const ScalarField& f, const Point& x) { return f.gradient(x); }

Vec3C rot(const QuatField& f, const Point& x) {
  require_order(f.order(), 1, f.label());
  const QJet j = f.jet(x);
  // (∂2 f3 - ∂3 f2, ∂3 f1 - ∂1 f3, ∂1 f2 - ∂2 f1)
  return Vec3C(j.d[1][3] - j.d[2][2], j.d[2][1] - j.d[0][3], j.d[0][2] - j.d[1][1]);
}

Biquat vector_form_D(const QuatField& f, const Point& x) {
  return Biquat(-div(f, x), grad(f, x) + rot(f, x));
}

QuatField gradient(const ScalarField& u) {
  require_order(u.order(), 1, u.label());
  return QuatField([u](const Point& x) { return gradient_jet(u.jet(x)); }, u.order() - 1, true,
                   u.singular_points(), "grad(" + u.label() + ")");
}

QuatField D(const QuatField& f) {
  require_order(f.order(), 1, f.label());
  return QuatField([f](const Point& x) { return dirac_jet(f.jet(x)); }, f.order() - 1, false,
                   f.singular_points(), "D(" + f.label() + ")");
}

QuatField D(const ScalarField& u) { return gradient(u); }

Biquat leibniz_residual(const ScalarField& phi, const QuatField& f, const Point& x) {
  const Biquat lhs = apply_D(phi * f, x);
  const Biquat rhs = mul(apply_D(phi, x), f.value(x)) + phi.value(x) * apply_D(f, x);
  return lhs - rhs;
}

Biquat gauge_identity_residual(const ScalarField& phi, const QuatField& f, const Point& x) {
  const Complex p = phi.value(x);
  if (p == Complex(0.0)) throw SingularityError("gauge identity: phi vanishes at the point");
  const Biquat alpha = Biquat::FromVector(phi.gradient(x) / p);
  const Biquat lhs = apply_D(f, x) - mul(alpha, f.value(x));
  const Biquat rhs = p * apply_D(reciprocal(phi) * f, x);
  return lhs - rhs;
}

}  // namespace quatmax
