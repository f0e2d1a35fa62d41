#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <complex>
#include <vector>

#include "amnm/rational.hpp"

namespace amnm {

using Complex = std::complex<double>;

template <class Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

/// 2×2 complex matrix.
using Mat2 = Matrix2<Complex>;

/// Dual number a + b·x with x² = 0, i.e. the upper triangular Toeplitz
/// matrix (a b; 0 a).
template <class Scalar>
struct BasicT2 {
  Scalar a{};
  Scalar b{};

  static BasicT2 identity() { return {Scalar(1), Scalar(0)}; }
  static BasicT2 zero() { return {Scalar(0), Scalar(0)}; }

  friend BasicT2 operator*(const BasicT2& x, const BasicT2& y) {
    return {Scalar(x.a * y.a), Scalar(x.a * y.b + x.b * y.a)};
  }
  friend BasicT2 operator+(const BasicT2& x, const BasicT2& y) { return {Scalar(x.a + y.a), Scalar(x.b + y.b)}; }
  friend BasicT2 operator-(const BasicT2& x, const BasicT2& y) { return {Scalar(x.a - y.a), Scalar(x.b - y.b)}; }
  friend BasicT2 operator*(const Scalar& s, const BasicT2& x) { return {Scalar(s * x.a), Scalar(s * x.b)}; }
  friend bool operator==(const BasicT2& x, const BasicT2& y) { return x.a == y.a && x.b == y.b; }

  Matrix2<Scalar> to_matrix() const {
    Matrix2<Scalar> m;
    m << a, b, Scalar(0), a;
    return m;
  }
};

using T2Element = BasicT2<Complex>;

/// A map from semilattice elements (by index) into a codomain algebra.
template <class Value>
using AlgebraMap = std::vector<Value>;

using ScalarMap = AlgebraMap<Complex>;
using T2Map = AlgebraMap<T2Element>;
using M2Map = AlgebraMap<Mat2>;

template <class Scalar>
Matrix2<Scalar> identity2() {
  return Matrix2<Scalar>::Identity();
}

}  // namespace amnm

namespace amnm::tolerance {

/// Structural predicates (idempotency, commutation, multiplicativity).
inline constexpr double kStructural = 1e-9;
/// Round-trip identities (unitary reconstruction, closed-form constants).
inline constexpr double kRoundTrip = 1e-12;

}  // namespace amnm::tolerance
