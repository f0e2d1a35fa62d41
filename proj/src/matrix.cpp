#include "amnm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amnm {

double hs_norm(const Mat2& a) { return a.norm(); }

double op_norm(const Mat2& a) {
  const double s = a.squaredNorm();
  const double det = std::abs(a.determinant());
  const double disc = std::max(s * s - 4.0 * det * det, 0.0);
  return std::sqrt(0.5 * (s + std::sqrt(disc)));
}

double t2_norm(const T2Element& x) { return std::abs(x.a) + std::abs(x.b); }

Rational hs_norm(const Matrix2<Rational>& a) {
  Rational s = a(0, 0) * a(0, 0) + a(0, 1) * a(0, 1) + a(1, 0) * a(1, 0) + a(1, 1) * a(1, 1);
  auto root = exact_sqrt(s);
  if (!root) throw InexactNorm("Hilbert-Schmidt norm is irrational");
  return *root;
}

Rational op_norm(const Matrix2<Rational>& a) {
  Rational s = a(0, 0) * a(0, 0) + a(0, 1) * a(0, 1) + a(1, 0) * a(1, 0) + a(1, 1) * a(1, 1);
  Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Rational disc = s * s - 4 * det * det;
  auto inner = exact_sqrt(disc);
  if (!inner) throw InexactNorm("operator norm is irrational");
  Rational sigma2 = (s + *inner) / 2;
  auto root = exact_sqrt(sigma2);
  if (!root) throw InexactNorm("operator norm is irrational");
  return *root;
}

Rational t2_norm(const BasicT2<Rational>& x) { return Rational(abs(x.a) + abs(x.b)); }

namespace {

void require_unit_quarter(double t) {
  if (!(t >= 0.0 && t <= 0.25)) throw PreconditionViolated("argument must lie in [0, 1/4]");
}

}  // namespace

double f_key(double t) {
  require_unit_quarter(t);
  // 1 − √(1−4t) = 4t / (1 + √(1−4t)), which avoids cancellation near 0.
  return 2.0 * t / (1.0 + std::sqrt(1.0 - 4.0 * t));
}

double rho(double t) {
  require_unit_quarter(t);
  return 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * t));
}

double kappa(double t) { return 1.0 / (1.0 - rho(t) * t * std::sqrt(2.0)); }

ScalarProjection scalar_project(Complex z, double eps) {
  if (!(eps >= 0.0 && eps <= 0.25)) throw PreconditionViolated("scalar_project needs 0 <= eps <= 1/4");
  const double defect = std::abs(z * z - z);
  const double slack = tolerance::kRoundTrip * (1.0 + std::norm(z));
  if (defect > eps + slack) throw PreconditionViolated("|z^2 - z| exceeds eps");

  ScalarProjection out;
  const double d0 = std::abs(z);
  const double d1 = std::abs(z - 1.0);
  out.tie = d0 == d1;
  out.nearest = d1 < d0 ? 1 : 0;
  out.distance = std::min(d0, d1);
  if (out.distance > rho(eps) * eps + slack) throw std::logic_error("scalar_project: distance bound violated");
  return out;
}

namespace {

bool lex_greater(Complex x, Complex y) { return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag(); }

}  // namespace

Triangularization unitary_triangularize(const Mat2& a) {
  const Complex half_trace = 0.5 * (a(0, 0) + a(1, 1));
  const Complex half_gap = 0.5 * (a(0, 0) - a(1, 1));
  const Complex root = std::sqrt(half_gap * half_gap + a(0, 1) * a(1, 0));
  const Complex plus = half_trace + root;
  const Complex minus = half_trace - root;
  const Complex lambda = lex_greater(minus, plus) ? minus : plus;

  Eigen::Vector2cd v1(a(0, 1), lambda - a(0, 0));
  Eigen::Vector2cd v2(lambda - a(1, 1), a(1, 0));
  Eigen::Vector2cd v = v1.norm() >= v2.norm() ? v1 : v2;
  const double scale = std::max(1.0, a.norm());
  if (v.norm() <= 1e-300 * scale) v = Eigen::Vector2cd(1.0, 0.0);
  v.normalize();

  Triangularization out;
  out.unitary << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
  out.upper = out.unitary.adjoint() * a * out.unitary;
  out.upper(1, 0) = 0.0;
  return out;
}

KeyEstimateReport key_estimates(const Mat2& a, double eps) {
  if (!(eps >= 0.0 && eps < 2.0 / 9.0)) throw PreconditionViolated("key_estimates needs 0 <= eps < 2/9");
  const double size = a.norm();
  const double slack = tolerance::kRoundTrip * (1.0 + size * size);
  if (hs_norm(a - a * a) > eps + slack) throw PreconditionViolated("‖A − A²‖_HS exceeds eps");

  const Triangularization tri = unitary_triangularize(a);
  const Complex da = tri.upper(0, 0);
  const Complex dd = tri.upper(1, 1);
  const int na = scalar_project(da, eps).nearest;
  const int nd = scalar_project(dd, eps).nearest;

  KeyEstimateReport out;
  out.trace_class = na + nd;
  out.trace_distance = std::abs(a.trace() - static_cast<double>(out.trace_class));
  if (!(out.trace_distance < 0.5)) throw std::logic_error("key_estimates: trace not within 1/2 of its class");

  if (out.trace_class == 1) {
    Mat2 rounded;
    rounded << static_cast<double>(na), tri.upper(0, 1), 0.0, static_cast<double>(nd);
    out.nearby_idempotent = tri.unitary * rounded * tri.unitary.adjoint();
    out.idempotent_distance_bound = rho(eps) * eps;
  } else {
    out.nearby_idempotent = out.trace_class == 0 ? Mat2(Mat2::Zero()) : Mat2(Mat2::Identity());
    out.idempotent_distance_bound = kappa(eps) * eps;
  }
  out.achieved_distance = hs_norm(a - out.nearby_idempotent);
  if (out.achieved_distance > out.idempotent_distance_bound + tolerance::kRoundTrip * (1.0 + size))
    throw std::logic_error("key_estimates: idempotent distance bound violated");
  return out;
}

namespace {

double scaled(double tol, const Mat2& a) { return tol * std::max(1.0, a.squaredNorm()); }

}  // namespace

bool is_idempotent_within(const Mat2& a, double tol) { return hs_norm(a * a - a) <= scaled(tol, a); }

bool is_rank1_idempotent_within(const Mat2& a, double tol) {
  return is_idempotent_within(a, tol) && std::abs(a.trace() - 1.0) <= scaled(tol, a);
}

bool commute_within(const Mat2& a, const Mat2& b, double tol) {
  return hs_norm(a * b - b * a) <= tol * std::max(1.0, a.norm() * b.norm());
}

bool obstruction_check(const Mat2& p, const Mat2& q, ObstructionScenario scenario, double first, double second) {
  if (!is_idempotent_within(p) || !is_idempotent_within(q) || !commute_within(p, q))
    throw PreconditionViolated("obstruction_check needs commuting idempotents");
  if (scenario == ObstructionScenario::TwoSided) {
    if (first < 1.0 || second < 1.0) throw PreconditionViolated("obstruction scenario (i) needs a, b >= 1");
    Mat2 A, B;
    A << 1.0, -first, 0.0, 0.0;
    B << 1.0, second, 0.0, 0.0;
    return op_norm(p - A) >= first / 2 || op_norm(q - B) >= second / 2;
  }
  if (first < 1.0) throw PreconditionViolated("obstruction scenario (ii) needs d >= 1");
  Mat2 C;
  C << 1.0, first, 0.0, 0.0;
  return op_norm(p - 2.0 * C) >= first / 2 || op_norm(q - C) >= first / 4;
}

}  // namespace amnm
