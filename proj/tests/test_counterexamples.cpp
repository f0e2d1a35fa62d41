#include <gtest/gtest.h>

#include <cmath>

#include "amnm/counterexamples.hpp"

using namespace amnm;

TEST(PsiFamily, ExactDefectsAndDistances) {
  auto fam = psi_n_family(Rational(2), {2, 3, 4});
  ASSERT_EQ(fam.reports.size(), 3u);
  const Rational expected[] = {Rational(1, 4), Rational(1, 8), Rational(1, 16)};
  for (std::size_t b = 0; b < 3; ++b) {
    const auto& r = fam.reports[b];
    EXPECT_EQ(r.defect, expected[b]);
    EXPECT_EQ(r.closed_form, expected[b]);
    EXPECT_TRUE(r.defect_matches);
    EXPECT_EQ(r.distance_found, Rational(1, 2));
    EXPECT_EQ(r.distance_lower_bound, Rational(1, 2));
    EXPECT_EQ(r.method, "exhaustive");
  }
}

TEST(PsiFamily, SingleBlockAndDouble) {
  auto fam = psi_n_family(Rational(2), {2});
  EXPECT_EQ(fam.reports[0].defect, Rational(1, 4));
  auto dbl = psi_n_family(3.0, {2, 5});
  EXPECT_DOUBLE_EQ(dbl.reports[1].defect, 1.0 / 243);
  EXPECT_DOUBLE_EQ(dbl.reports[1].distance_found, 1.0 / 3);
}

TEST(PsiFamily, Preconditions) {
  EXPECT_THROW(psi_n_family(1.0, {2}), PreconditionViolated);
  EXPECT_THROW(psi_n_family(2.0, {1}), PreconditionViolated);
  EXPECT_THROW(psi_n_family(2.0, {13}), CapExceeded);
}

TEST(T2Family, ThetaM) {
  Weight<Rational> w = {Rational(1), Rational(3), Rational(9), Rational(27)};
  for (std::size_t m = 1; m <= 4; ++m) {
    auto t = theta_m_T2(w, m);
    EXPECT_EQ(t.report.defect, Rational(1) / w[m - 1]);
    EXPECT_TRUE(t.report.defect_matches);
    EXPECT_EQ(t.report.distance_found, Rational(1));
    EXPECT_TRUE(is_multiplicative_exact(t.lattice, t.referee));
    EXPECT_EQ(t.referee_defect, Rational(0));
    EXPECT_LE(t.referee_distance, Rational(1));
  }
  EXPECT_THROW(theta_m_T2(w, 0), PreconditionViolated);
}

TEST(M2Family, ExactDefect) {
  Weight<Rational> w = {Rational(1), Rational(50), Rational(200), Rational(400)};
  auto c = theta_M2(w, Rational(1, 100));
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.report.defect, Rational(1, 200) + Rational(1, 400));
  EXPECT_TRUE(c.report.defect_matches);
  EXPECT_EQ(c.report.distance_lower_bound, Rational(1, 2));
  EXPECT_EQ(c.report.method, "analytic-lemma");
}

TEST(M2Family, NoEligibleIndex) {
  EXPECT_THROW(theta_M2(unit_weight<double>(8), 0.01), NoEligibleIndex);
  EXPECT_THROW(theta_M2_nonunif(unit_weight<double>(8), 0.01), NoEligibleIndex);
}

TEST(M2Family, OptimizerDoesNotBeatLemma) {
  Weight<double> w = {1, 300, 300, 1};
  auto c = theta_M2(w, 0.01);
  const double found = optimizer_distance(c.lattice, w, c.theta, 4, 1);
  EXPECT_GE(found, 0.5 - 1e-9);
}

TEST(M2NonUniform, Values) {
  Weight<double> w = {1, 1, 1, 600, 1, 1};
  auto c = theta_M2_nonunif(w, 0.01);
  EXPECT_EQ(c.n, 4u);
  EXPECT_DOUBLE_EQ(c.C, 1.0);
  EXPECT_TRUE(c.exact_identity);
  EXPECT_NEAR(c.report.defect, 0.003333337962959748, 1e-17);
  EXPECT_NEAR(c.report.closed_form, 0.003333337962959748, 1e-17);
  EXPECT_NEAR(c.stated_bound, 0.0050000069444396215, 1e-17);
  EXPECT_TRUE(c.report.defect_matches);
  EXPECT_LE(c.weighted_norm, c.weighted_norm_bound);
  EXPECT_LE(c.report.defect, 0.01);
}
