#pragma once

// Complex quaternions H(C): q = q0 + q1 i1 + q2 i2 + q3 i3 with q_k complex.
//
// Storage order is (q0, q1, q2, q3). The imaginary units satisfy
// i1 i2 = i3, i2 i3 = i1, i3 i1 = i2 and i_k^2 = -1; the complex unit i
// commutes with all of them. The algebra has zero divisors, e.g.
// (i1 + i i2)^2 = 0, so no division is provided.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <string>

#include "quatmax/errors.hpp"

namespace quatmax {

template <typename T>
class Biquaternion {
 public:
  using Scalar = T;
  using Complex = std::complex<T>;
  using Coeffs = Eigen::Matrix<Complex, 4, 1>;
  using Vector = Eigen::Matrix<Complex, 3, 1>;

  Biquaternion() : c_(Coeffs::Zero()) {}
  Biquaternion(const Complex& q0, const Complex& q1, const Complex& q2, const Complex& q3) {
    c_ << q0, q1, q2, q3;
  }
  explicit Biquaternion(const Coeffs& c) : c_(c) {}
  Biquaternion(const Complex& q0, const Vector& v) { c_ << q0, v(0), v(1), v(2); }

  static Biquaternion Zero() { return Biquaternion(); }
  static Biquaternion FromScalar(const Complex& s) { return Biquaternion(s, 0, 0, 0); }
  static Biquaternion FromVector(const Vector& v) { return Biquaternion(Complex(0), v); }
  /// i_0 = 1, i_1, i_2, i_3.
  static Biquaternion Unit(int k) {
    Biquaternion q;
    q.c_[k] = Complex(1);
    return q;
  }
  static Biquaternion NaN() {
    const T n = std::numeric_limits<T>::quiet_NaN();
    return Biquaternion(Coeffs::Constant(Complex(n, n)));
  }

  const Complex& operator[](int k) const { return c_[k]; }
  Complex& operator[](int k) { return c_[k]; }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }

  Complex scalar() const { return c_[0]; }
  Vector vector() const { return c_.template tail<3>(); }
  Biquaternion scalar_part() const { return Biquaternion(c_[0], 0, 0, 0); }
  Biquaternion vector_part() const { return Biquaternion(Complex(0), vector()); }

  /// Purely vectorial means q0 == 0 exactly.
  bool is_vectorial() const { return c_[0] == Complex(0); }

  Biquaternion& operator+=(const Biquaternion& o) {
    c_ += o.c_;
    return *this;
  }
  Biquaternion& operator-=(const Biquaternion& o) {
    c_ -= o.c_;
    return *this;
  }
  Biquaternion& operator*=(const Complex& s) {
    c_ *= s;
    return *this;
  }

  friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
  friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
  friend Biquaternion operator-(const Biquaternion& a) { return Biquaternion(Coeffs(-a.c_)); }
  friend Biquaternion operator*(Biquaternion a, const Complex& s) { return a *= s; }
  friend Biquaternion operator*(const Complex& s, Biquaternion a) { return a *= s; }
  friend Biquaternion operator*(Biquaternion a, T s) { return a *= Complex(s); }
  friend Biquaternion operator*(T s, Biquaternion a) { return a *= Complex(s); }
  friend Biquaternion operator/(Biquaternion a, const Complex& s) { return a *= (Complex(1) / s); }
  friend bool operator==(const Biquaternion& a, const Biquaternion& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Biquaternion& q) {
    os << '(' << q.c_[0] << ", " << q.c_[1] << ", " << q.c_[2] << ", " << q.c_[3] << ')';
    return os;
  }

 private:
  Coeffs c_;
};

/// Bilinear scalar product <p, q> = sum p_k q_k (no conjugation).
template <typename T>
std::complex<T> dot(const Eigen::Matrix<std::complex<T>, 3, 1>& p,
                    const Eigen::Matrix<std::complex<T>, 3, 1>& q) {
  return p(0) * q(0) + p(1) * q(1) + p(2) * q(2);
}

template <typename T>
Eigen::Matrix<std::complex<T>, 3, 1> cross(const Eigen::Matrix<std::complex<T>, 3, 1>& p,
                                           const Eigen::Matrix<std::complex<T>, 3, 1>& q) {
  Eigen::Matrix<std::complex<T>, 3, 1> r;
  r << p(1) * q(2) - p(2) * q(1), p(2) * q(0) - p(0) * q(2), p(0) * q(1) - p(1) * q(0);
  return r;
}

/// p q = p0 q0 - <p, q> + [p x q] + p0 q + q0 p.
template <typename T>
Biquaternion<T> mul(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  const auto pv = p.vector();
  const auto qv = q.vector();
  const auto p0 = p.scalar();
  const auto q0 = q.scalar();
  return Biquaternion<T>(p0 * q0 - dot<T>(pv, qv), cross<T>(pv, qv) + p0 * qv + q0 * pv);
}

template <typename T>
Biquaternion<T> operator*(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  return mul(p, q);
}

/// Product expanded term by term over the unit multiplication table.
template <typename T>
Biquaternion<T> mul_by_table(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  // i_a i_b = sign[a][b] * i_{index[a][b]}
  static constexpr int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Biquaternion<T> r;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      r[index[a][b]] += T(sign[a][b]) * (p[a] * q[b]);
    }
  }
  return r;
}

namespace detail {
template <typename T>
void require_vectorial(const Biquaternion<T>& q, const char* what) {
  if (!q.is_vectorial()) {
    throw ContractViolation(std::string(what) + ": argument has a nonzero scalar part");
  }
}
}  // namespace detail

template <typename T>
std::complex<T> dot(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  detail::require_vectorial(p, "dot");
  detail::require_vectorial(q, "dot");
  return dot<T>(p.vector(), q.vector());
}

template <typename T>
Biquaternion<T> cross(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  detail::require_vectorial(p, "cross");
  detail::require_vectorial(q, "cross");
  return Biquaternion<T>::FromVector(cross<T>(p.vector(), q.vector()));
}

/// Left multiplication operator q -> p q.
template <typename T>
struct LeftMultiplication {
  Biquaternion<T> p;
  Biquaternion<T> operator()(const Biquaternion<T>& q) const { return mul(p, q); }
};

/// Right multiplication operator q -> q p.
template <typename T>
struct RightMultiplication {
  Biquaternion<T> p;
  Biquaternion<T> operator()(const Biquaternion<T>& q) const { return mul(q, p); }
};

template <typename T>
LeftMultiplication<T> left_mul(const Biquaternion<T>& p) {
  return {p};
}

template <typename T>
RightMultiplication<T> right_mul(const Biquaternion<T>& p) {
  return {p};
}

/// -1/2 (p q + q p) computed with the algebra product.
template <typename T>
Biquaternion<T> anticommutator(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  return T(-0.5) * (left_mul(p)(q) + right_mul(p)(q));
}

/// <p, q> recovered from the anticommutator of two vectors.
template <typename T>
std::complex<T> dot_via_anticommutator(const Biquaternion<T>& p, const Biquaternion<T>& q) {
  detail::require_vectorial(p, "dot_via_anticommutator");
  detail::require_vectorial(q, "dot_via_anticommutator");
  return anticommutator(p, q).scalar();
}

/// Max over the 8 real components.
template <typename T>
T norm_inf(const Biquaternion<T>& q) {
  T m = 0;
  for (int k = 0; k < 4; ++k) {
    m = std::max({m, std::abs(q[k].real()), std::abs(q[k].imag())});
  }
  return m;
}

template <typename T>
T norm_inf(const Eigen::Matrix<std::complex<T>, 3, 1>& v) {
  return norm_inf(Biquaternion<T>::FromVector(v));
}

template <typename T>
T norm_inf(const std::complex<T>& z) {
  return std::max(std::abs(z.real()), std::abs(z.imag()));
}

using Complex = std::complex<double>;
using Biquat = Biquaternion<double>;
using Vec3C = Biquat::Vector;

inline const Biquat kOne = Biquat::Unit(0);
inline const Biquat kI1 = Biquat::Unit(1);
inline const Biquat kI2 = Biquat::Unit(2);
inline const Biquat kI3 = Biquat::Unit(3);
inline constexpr Complex kImag{0.0, 1.0};

}  // namespace quatmax
