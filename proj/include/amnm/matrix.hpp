#pragma once

#include "amnm/algebra.hpp"
#include "amnm/errors.hpp"

namespace amnm {

/// ‖A‖_HS = tr(A*A)^{1/2}.
double hs_norm(const Mat2& a);
/// Largest singular value, closed form.
double op_norm(const Mat2& a);
/// |a| + |b|.
double t2_norm(const T2Element& x);

/// Exact variants. Throws InexactNorm when the value is irrational.
class InexactNorm : public Error {
 public:
  using Error::Error;
};
Rational hs_norm(const Matrix2<Rational>& a);
Rational op_norm(const Matrix2<Rational>& a);
Rational t2_norm(const BasicT2<Rational>& x);

/// Expression overloads: evaluate an Eigen expression into a 2×2 matrix first.
template <class Derived>
auto hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return hs_norm(Matrix2<typename Derived::Scalar>(a));
}
template <class Derived>
auto op_norm(const Eigen::MatrixBase<Derived>& a) {
  return op_norm(Matrix2<typename Derived::Scalar>(a));
}

/// f(t) = ½(1 − √(1 − 4t)) on [0, 1/4].
double f_key(double t);
/// ρ(t) = f(t)/t, ρ(0) = 1.
double rho(double t);
/// κ(t) = (1 − ρ(t)·t·√2)^{-1}.
double kappa(double t);

struct ScalarProjection {
  int nearest = 0;      // 0 or 1
  double distance = 0;  // |z − nearest|
  bool tie = false;     // |z| == |z − 1|, resolved to 0
};

/// Nearest point of {0, 1} to z, given |z² − z| <= eps <= 1/4. The distance
/// is checked against ρ(eps)·eps.
ScalarProjection scalar_project(Complex z, double eps);

struct Triangularization {
  Mat2 unitary;  // U
  Mat2 upper;    // T = U* A U, with T(1,0) == 0
};

/// Closed-form 2×2 Schur form. The first column of U is a unit eigenvector
/// for the eigenvalue that is larger in lexicographic (real, imag) order.
Triangularization unitary_triangularize(const Mat2& a);

struct KeyEstimateReport {
  int trace_class = 0;              // the integer j in {0,1,2} with |tr A − j| < 1/2
  double trace_distance = 0;        // |tr A − j|
  Mat2 nearby_idempotent;           // 0, a rank-one idempotent, or I
  double idempotent_distance_bound = 0;  // ρ(ε)ε for class 1, κ(ε)ε otherwise
  double achieved_distance = 0;     // ‖A − nearby_idempotent‖_HS
};

/// Nearby idempotent for an approximately idempotent A with
/// ‖A − A²‖_HS <= eps < 2/9: triangularize, round the diagonal to {0,1},
/// keep the off-diagonal entry in the mixed case, conjugate back.
KeyEstimateReport key_estimates(const Mat2& a, double eps);

enum class ObstructionScenario {
  TwoSided,  // A = (1 −a; 0 0), B = (1 b; 0 0): ‖P−A‖ >= a/2 or ‖Q−B‖ >= b/2
  Doubled,   // C = (1 d; 0 0): ‖P−2C‖ >= d/2 or ‖Q−C‖ >= d/4
};

/// Evaluates the two-element obstruction disjunction in operator norm for
/// commuting idempotents P, Q. For TwoSided pass (a, b); for Doubled pass
/// (d, ignored).
bool obstruction_check(const Mat2& p, const Mat2& q, ObstructionScenario scenario, double first, double second = 0);

bool is_idempotent_within(const Mat2& a, double tol = tolerance::kStructural);
bool is_rank1_idempotent_within(const Mat2& a, double tol = tolerance::kStructural);
bool commute_within(const Mat2& a, const Mat2& b, double tol = tolerance::kStructural);

}  // namespace amnm
