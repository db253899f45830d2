#pragma once

// The Moisil-Theodoresco operator D f = i1 ∂_1 f + i2 ∂_2 f + i3 ∂_3 f and
// its classical vector form D f = -div f + grad f0 + rot f, evaluated from
// exact field oracles.

#include "quatmax/biquaternion.hpp"
#include "quatmax/field.hpp"

namespace quatmax {

/// Sum_k i_k ∂_k f at x, from the exact partials.
Biquat apply_D(const QuatField& f, const Point& x);
Biquat apply_D(const ScalarField& f, const Point& x);

Complex div(const QuatField& f, const Point& x);
/// Gradient of the scalar part of f.
Vec3C grad(const QuatField& f, const Point& x);
Vec3C grad(const ScalarField& f, const Point& x);
Vec3C rot(const QuatField& f, const Point& x);

/// -div f + grad f0 + rot f, assembled from the three classical operators.
Biquat vector_form_D(const QuatField& f, const Point& x);

/// grad u as a vectorial field (one derivative order lower than u).
QuatField gradient(const ScalarField& u);
/// D f as a field (one derivative order lower than f).
QuatField D(const QuatField& f);
QuatField D(const ScalarField& u);

/// D(phi f) - (D phi . f + phi . D f), with D(phi f) from the product field.
Biquat leibniz_residual(const ScalarField& phi, const QuatField& f, const Point& x);

/// (D - grad phi / phi) f - phi D(phi^{-1} f); grad phi / phi acts from the left.
Biquat gauge_identity_residual(const ScalarField& phi, const QuatField& f, const Point& x);

}  // namespace quatmax
