#pragma once

// Second-order jets: value, first partials and second partials at a point.
//
// Fields return jets; composite fields assemble their jets from the jets of
// their operands with the product and chain rules, so every derivative a
// composite exposes is built from the hand-written oracles of its leaves.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <limits>

#include "quatmax/biquaternion.hpp"

namespace quatmax {

template <typename T>
struct ScalarJet {
  using Complex = std::complex<T>;
  using Vector = Eigen::Matrix<Complex, 3, 1>;
  using Matrix = Eigen::Matrix<Complex, 3, 3>;

  Complex value{0};
  Vector grad = Vector::Zero();
  Matrix hess = Matrix::Zero();

  Complex laplacian() const { return hess.trace(); }

  static ScalarJet Constant(const Complex& c) {
    ScalarJet j;
    j.value = c;
    return j;
  }

  ScalarJet& operator+=(const ScalarJet& o) {
    value += o.value;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  ScalarJet& operator-=(const ScalarJet& o) {
    value -= o.value;
    grad -= o.grad;
    hess -= o.hess;
    return *this;
  }
  ScalarJet& operator*=(const Complex& s) {
    value *= s;
    grad *= s;
    hess *= s;
    return *this;
  }

  friend ScalarJet operator+(ScalarJet a, const ScalarJet& b) { return a += b; }
  friend ScalarJet operator-(ScalarJet a, const ScalarJet& b) { return a -= b; }
  friend ScalarJet operator-(ScalarJet a) { return a *= Complex(-1); }
  friend ScalarJet operator*(ScalarJet a, const Complex& s) { return a *= s; }
  friend ScalarJet operator*(const Complex& s, ScalarJet a) { return a *= s; }

  friend ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r;
    r.value = a.value * b.value;
    r.grad = a.grad * b.value + a.value * b.grad;
    r.hess = a.hess * b.value + a.value * b.hess + a.grad * b.grad.transpose() +
             b.grad * a.grad.transpose();
    return r;
  }
};

/// g = F(u) given F(u), F'(u), F''(u).
template <typename T>
ScalarJet<T> chain(const ScalarJet<T>& u, const std::complex<T>& f0, const std::complex<T>& f1,
                   const std::complex<T>& f2) {
  ScalarJet<T> r;
  r.value = f0;
  r.grad = f1 * u.grad;
  r.hess = f1 * u.hess + f2 * (u.grad * u.grad.transpose());
  return r;
}

/// Jet of a quaternion-valued function. d[k] = ∂_k f, dd[k][l] = ∂_k ∂_l f.
template <typename T>
struct QuatJet {
  using Q = Biquaternion<T>;

  Q value;
  std::array<Q, 3> d{};
  std::array<std::array<Q, 3>, 3> dd{};

  QuatJet& operator+=(const QuatJet& o) {
    value += o.value;
    for (int k = 0; k < 3; ++k) {
      d[k] += o.d[k];
      for (int l = 0; l < 3; ++l) dd[k][l] += o.dd[k][l];
    }
    return *this;
  }
  QuatJet& operator-=(const QuatJet& o) {
    value -= o.value;
    for (int k = 0; k < 3; ++k) {
      d[k] -= o.d[k];
      for (int l = 0; l < 3; ++l) dd[k][l] -= o.dd[k][l];
    }
    return *this;
  }
  QuatJet& operator*=(const std::complex<T>& s) {
    value *= s;
    for (int k = 0; k < 3; ++k) {
      d[k] *= s;
      for (int l = 0; l < 3; ++l) dd[k][l] *= s;
    }
    return *this;
  }

  friend QuatJet operator+(QuatJet a, const QuatJet& b) { return a += b; }
  friend QuatJet operator-(QuatJet a, const QuatJet& b) { return a -= b; }
  friend QuatJet operator*(QuatJet a, const std::complex<T>& s) { return a *= s; }
  friend QuatJet operator*(const std::complex<T>& s, QuatJet a) { return a *= s; }

  /// Leibniz rule with the factor order preserved.
  friend QuatJet operator*(const QuatJet& p, const QuatJet& q) {
    QuatJet r;
    r.value = mul(p.value, q.value);
    for (int k = 0; k < 3; ++k) {
      r.d[k] = mul(p.d[k], q.value) + mul(p.value, q.d[k]);
    }
    for (int k = 0; k < 3; ++k) {
      for (int l = k; l < 3; ++l) {
        r.dd[k][l] = mul(p.dd[k][l], q.value) + mul(p.d[k], q.d[l]) + mul(p.d[l], q.d[k]) +
                     mul(p.value, q.dd[k][l]);
        r.dd[l][k] = r.dd[k][l];
      }
    }
    return r;
  }
};

/// Scalar function embedded as the scalar part of a quaternion jet.
template <typename T>
QuatJet<T> embed(const ScalarJet<T>& s) {
  QuatJet<T> q;
  q.value[0] = s.value;
  for (int k = 0; k < 3; ++k) {
    q.d[k][0] = s.grad(k);
    for (int l = 0; l < 3; ++l) q.dd[k][l][0] = s.hess(k, l);
  }
  return q;
}

/// Scalar jet times quaternion jet (the scalar commutes).
template <typename T>
QuatJet<T> operator*(const ScalarJet<T>& s, const QuatJet<T>& q) {
  QuatJet<T> r;
  r.value = s.value * q.value;
  for (int k = 0; k < 3; ++k) r.d[k] = s.grad(k) * q.value + s.value * q.d[k];
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      r.dd[k][l] = s.hess(k, l) * q.value + s.grad(k) * q.d[l] + s.grad(l) * q.d[k] +
                   s.value * q.dd[k][l];
    }
  }
  return r;
}

template <typename T>
QuatJet<T> operator*(const QuatJet<T>& q, const ScalarJet<T>& s) {
  return s * q;
}

/// Component k of a quaternion jet as a scalar jet.
template <typename T>
ScalarJet<T> component(const QuatJet<T>& q, int c) {
  ScalarJet<T> s;
  s.value = q.value[c];
  for (int k = 0; k < 3; ++k) {
    s.grad(k) = q.d[k][c];
    for (int l = 0; l < 3; ++l) s.hess(k, l) = q.dd[k][l][c];
  }
  return s;
}

/// Jet of grad u as a vectorial quaternion. Second partials are unknown (NaN).
template <typename T>
QuatJet<T> gradient_jet(const ScalarJet<T>& u) {
  QuatJet<T> q;
  q.value = Biquaternion<T>::FromVector(u.grad);
  for (int k = 0; k < 3; ++k) {
    q.d[k] = Biquaternion<T>::FromVector(u.hess.col(k));
    for (int l = 0; l < 3; ++l) q.dd[k][l] = Biquaternion<T>::NaN();
  }
  return q;
}

/// Jet of D f = sum_k i_k ∂_k f. Second partials are unknown (NaN).
template <typename T>
QuatJet<T> dirac_jet(const QuatJet<T>& f) {
  QuatJet<T> r;
  for (int k = 0; k < 3; ++k) r.value += mul(Biquaternion<T>::Unit(k + 1), f.d[k]);
  for (int l = 0; l < 3; ++l) {
    for (int k = 0; k < 3; ++k) r.d[l] += mul(Biquaternion<T>::Unit(k + 1), f.dd[k][l]);
    for (int m = 0; m < 3; ++m) r.dd[l][m] = Biquaternion<T>::NaN();
  }
  return r;
}

}  // namespace quatmax
