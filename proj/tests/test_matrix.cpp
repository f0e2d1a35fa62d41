#include <gtest/gtest.h>

#include <Eigen/SVD>
#include <cmath>

#include "amnm/matrix.hpp"
#include "amnm/oracle.hpp"
#include "amnm/random.hpp"

using namespace amnm;

namespace {

Mat2 mat(Complex a, Complex b, Complex c, Complex d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(Norms, KnownValues) {
  const Mat2 a = mat(3, 0, 0, 4);
  EXPECT_DOUBLE_EQ(hs_norm(a), 5.0);
  EXPECT_DOUBLE_EQ(op_norm(a), 4.0);
  const Mat2 nil = mat(0, 2, 0, 0);
  EXPECT_DOUBLE_EQ(op_norm(nil), 2.0);
  EXPECT_DOUBLE_EQ(t2_norm({Complex(3, 4), Complex(-1)}), 6.0);
}

TEST(Norms, ExactVariants) {
  Matrix2<Rational> a;
  a << 3, 0, 0, 4;
  EXPECT_EQ(hs_norm(a), Rational(5));
  EXPECT_EQ(op_norm(a), Rational(4));
  Matrix2<Rational> b;
  b << 1, 1, 0, 0;
  EXPECT_THROW(hs_norm(b), InexactNorm);
  EXPECT_EQ(t2_norm(BasicT2<Rational>{Rational(-1, 2), Rational(3, 4)}), Rational(5, 4));
}

TEST(Norms, OrderingOnRandomMatrices) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 a = random_perturbation(rng, 0.1 + i % 13);
    const double hs = hs_norm(a);
    const double op = op_norm(a);
    EXPECT_LE(op, hs * (1 + 1e-12));
    EXPECT_GE(op, hs / std::sqrt(2.0) * (1 - 1e-12));
    const Eigen::JacobiSVD<Mat2> svd(a);
    EXPECT_NEAR(op, svd.singularValues()(0), 1e-12 * hs);
  }
}

TEST(KeyFunctions, Constants) {
  EXPECT_DOUBLE_EQ(rho(0.0), 1.0);
  EXPECT_NEAR(rho(0.2), (5 - std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_NEAR(rho(0.2), 1.3819660112501053, 1e-15);
  EXPECT_NEAR(kappa(2.0 / 9), 1.0 / (1 - std::sqrt(2.0) / 3), 1e-14);
  EXPECT_NEAR(kappa(2.0 / 9), 1.8918058124456119, 1e-14);
  EXPECT_NEAR(f_key(0.25), 0.5, 1e-15);
  EXPECT_THROW(rho(0.3), PreconditionViolated);
}

TEST(KeyFunctions, IdentitiesAndMonotonicity) {
  double prev_rho = 0, prev_kappa = 0;
  for (int i = 0; i <= 200; ++i) {
    const double t = 0.25 * i / 200.0;
    const double f = f_key(t);
    EXPECT_NEAR(f * f - f + t, 0.0, 1e-15);
    if (t > 0) EXPECT_NEAR(rho(t) * t, f, 1e-15);
    EXPECT_GE(rho(t), prev_rho);
    prev_rho = rho(t);
    if (t < 2.0 / 9) {
      EXPECT_GE(kappa(t), prev_kappa);
      prev_kappa = kappa(t);
    }
  }
}

TEST(ScalarProject, Examples) {
  auto p = scalar_project(Complex(1.1), 0.11);
  EXPECT_EQ(p.nearest, 1);
  EXPECT_NEAR(p.distance, 0.1, 1e-15);
  EXPECT_LE(p.distance, 0.12583426132260586);
  auto q = scalar_project(Complex(0.05, 0.02), 0.06);
  EXPECT_EQ(q.nearest, 0);
  auto tie = scalar_project(Complex(0.5), 0.25);
  EXPECT_TRUE(tie.tie);
  EXPECT_EQ(tie.nearest, 0);
  EXPECT_THROW(scalar_project(Complex(0.5), 0.2), PreconditionViolated);
}

TEST(Triangularize, RoundTripOnRandomMatrices) {
  Rng rng(13);
  for (int i = 0; i < 5000; ++i) {
    const Mat2 a = random_perturbation(rng, 1.0 + i % 5);
    const auto t = unitary_triangularize(a);
    EXPECT_NEAR(hs_norm(t.unitary.adjoint() * t.unitary - Mat2::Identity()), 0.0, 1e-12);
    EXPECT_NEAR(hs_norm(t.unitary * t.upper * t.unitary.adjoint() - a), 0.0, 1e-12 * (1 + hs_norm(a)));
    EXPECT_EQ(t.upper(1, 0), Complex(0));
    const Complex l0 = t.upper(0, 0), l1 = t.upper(1, 1);
    EXPECT_TRUE(l0.real() > l1.real() || (l0.real() == l1.real() && l0.imag() >= l1.imag()) ||
                std::abs(l0 - l1) < 1e-9);
  }
}

TEST(Triangularize, AlreadyUpper) {
  const Mat2 a = mat(1, 5, 0, 0.01);
  const auto t = unitary_triangularize(a);
  EXPECT_NEAR(std::abs(t.upper(0, 0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(t.upper(1, 1) - 0.01), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(t.upper(0, 1)), 5.0, 1e-14);
}

TEST(KeyEstimates, MixedClass) {
  const Mat2 a = mat(1, 5, 0, 0.01);
  const double eps = hs_norm(a - a * a);
  EXPECT_NEAR(eps, 0.05097067784520804, 1e-15);
  const auto r = key_estimates(a, eps);
  EXPECT_EQ(r.trace_class, 1);
  EXPECT_NEAR(r.idempotent_distance_bound, 0.05387297531443809, 1e-15);
  EXPECT_NEAR(r.achieved_distance, 0.01, 1e-14);
  EXPECT_NEAR(hs_norm(r.nearby_idempotent - mat(1, 5, 0, 0)), 0.0, 1e-13);
  EXPECT_TRUE(is_rank1_idempotent_within(r.nearby_idempotent));
}

TEST(KeyEstimates, IdentityClass) {
  const Mat2 a = 1.01 * Mat2(Mat2::Identity());
  const double eps = hs_norm(a - a * a);
  EXPECT_NEAR(eps, 0.014283556979968257, 1e-15);
  const auto r = key_estimates(a, eps);
  EXPECT_EQ(r.trace_class, 2);
  EXPECT_NEAR(r.idempotent_distance_bound, 0.014582454674616465, 1e-15);
  EXPECT_NEAR(r.achieved_distance, 0.014142135623730952, 1e-15);
  EXPECT_EQ(r.nearby_idempotent, Mat2(Mat2::Identity()));
}

TEST(KeyEstimates, Preconditions) {
  EXPECT_THROW(key_estimates(Mat2::Zero(), 0.25), PreconditionViolated);
  EXPECT_THROW(key_estimates(mat(0.5, 0, 0, 0.5), 0.1), PreconditionViolated);
}

TEST(KeyEstimates, RandomPerturbationsStayWithinBound) {
  Rng rng(19);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    Mat2 base;
    switch (i % 3) {
      case 0: base = Mat2::Zero(); break;
      case 1: base = Mat2::Identity(); break;
      default: base = random_rank1_idempotent(rng, 4.0);
    }
    const Mat2 a = base + random_perturbation(rng, 0.02);
    const double eps = hs_norm(a - a * a);
    if (!(eps < 2.0 / 9)) continue;
    const auto r = key_estimates(a, eps);
    EXPECT_LE(r.achieved_distance, r.idempotent_distance_bound + 1e-12);
    EXPECT_TRUE(is_idempotent_within(r.nearby_idempotent, 1e-9));
    ++checked;
  }
  EXPECT_GT(checked, 2000);
}

TEST(Obstruction, HoldsForCommutingIdempotents) {
  for (const auto& [p, q] : sample_commuting_idempotents(400, 99)) {
    EXPECT_TRUE(obstruction_check(p, q, ObstructionScenario::TwoSided, 3, 3));
    EXPECT_TRUE(obstruction_check(p, q, ObstructionScenario::Doubled, 3));
    EXPECT_TRUE(obstruction_check(p, q, ObstructionScenario::TwoSided, 1, 7));
  }
}

TEST(Obstruction, Preconditions) {
  const Mat2 p = mat(1, 0, 0, 0);
  const Mat2 q = mat(1, 1, 0, 0);
  EXPECT_THROW(obstruction_check(p, q, ObstructionScenario::TwoSided, 3, 3), PreconditionViolated);
  EXPECT_THROW(obstruction_check(p, p, ObstructionScenario::Doubled, 0.5), PreconditionViolated);
}

TEST(Predicates, Idempotents) {
  EXPECT_TRUE(is_rank1_idempotent_within(mat(1, 7, 0, 0)));
  EXPECT_FALSE(is_rank1_idempotent_within(Mat2::Identity()));
  EXPECT_TRUE(is_idempotent_within(Mat2::Identity()));
  EXPECT_TRUE(commute_within(mat(1, 0, 0, 0), mat(0, 0, 0, 1)));
  EXPECT_FALSE(commute_within(mat(1, 0, 0, 0), mat(1, 1, 0, 0)));
}
