#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "amnm/correction.hpp"
#include "amnm/counterexamples.hpp"
#include "amnm/oracle.hpp"
#include "amnm/random.hpp"

using namespace amnm;

TEST(Scalar, ConstantMap) {
  auto s = nmin(3);
  ScalarMap psi(3, Complex(0.9));
  auto c = correct_scalar(s, psi);
  EXPECT_NEAR(c.defect, 0.09, 1e-15);
  EXPECT_EQ(c.support.count(), 3u);
  EXPECT_EQ(c.corrected, ScalarMap(3, Complex(1)));
  EXPECT_NEAR(c.achieved_distance, 0.1, 1e-15);
  EXPECT_LE(c.achieved_distance, c.claimed_bound);
}

TEST(Scalar, NminExample) {
  auto s = nmin(4);
  ScalarMap psi = {0.0, 0.8, 1.05, 1.0};
  auto c = correct_scalar(s, psi);
  EXPECT_NEAR(c.defect, 0.16, 1e-15);
  EXPECT_EQ(c.support.members(), (std::vector<Index>{1, 2, 3}));
  EXPECT_NEAR(c.achieved_distance, 0.2, 1e-15);
  EXPECT_NEAR(c.claimed_bound, 1.4 * 0.16, 1e-15);
  EXPECT_EQ(c.corrected_defect, 0.0);
}

TEST(Scalar, DefectTooLarge) {
  auto s = nmin(3);
  ScalarMap psi = {0.0, 0.5, 1.0};
  try {
    correct_scalar(s, psi);
    FAIL() << "expected DefectTooLarge";
  } catch (const DefectTooLarge& e) {
    EXPECT_NEAR(e.defect(), 0.25, 1e-15);
    EXPECT_EQ(e.limit(), 0.2);
  }
}

TEST(Scalar, RandomPerturbedCharacters) {
  Rng rng(61);
  int corrected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto rs = random_semilattice(rng, 30);
    auto chars = enumerate_mult_scalar(rs.lattice);
    ScalarMap psi = chars[rng() % chars.size()];
    for (auto& v : psi) v += random_complex(rng, 0.12);
    if (!(defect(rs.lattice, psi, Norm::Abs).defect < 0.2)) continue;
    auto c = correct_scalar(rs.lattice, psi);
    EXPECT_LE(c.achieved_distance, 1.4 * c.defect + 1e-12);
    ++corrected;
  }
  EXPECT_GT(corrected, 100);
}

TEST(Weighted, NminPowersOfTwo) {
  auto s = nmin(6);
  Weight<double> w;
  for (int i = 1; i <= 6; ++i) w.push_back(std::pow(2.0, i));
  ScalarMap psi = {0, 0, 0, 1, 0, 1};
  auto c = correct_weighted(s, w, psi, 0.25);
  EXPECT_DOUBLE_EQ(c.defect, 1.0 / 512);
  EXPECT_EQ(c.fixed.members(), (std::vector<Index>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(c.flighty, 8.0);
  EXPECT_DOUBLE_EQ(c.ratio, 1.0 / 8);
  EXPECT_TRUE(c.seeds.empty());
  EXPECT_TRUE(c.filter.empty());
  EXPECT_EQ(c.corrected, ScalarMap(6, Complex(0)));
  EXPECT_DOUBLE_EQ(c.achieved_distance, 1.0 / 16);
  EXPECT_LE(c.achieved_distance, 0.25);
}

TEST(Weighted, FilterFromSeeds) {
  auto s = nmin(5);
  Weight<double> w = {1, 1, 1, 100, 100};
  ScalarMap psi = {0, 1, 1, 0, 1};
  auto c = correct_weighted(s, w, psi, 0.5);
  EXPECT_EQ(c.seeds.members(), (std::vector<Index>{1, 2}));
  EXPECT_EQ(c.filter.members(), (std::vector<Index>{1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(c.achieved_distance, 0.01);
}

TEST(Weighted, PreconditionGapOnCounterexample) {
  auto fam = psi_n_family(2.0, {2, 3, 4});
  try {
    correct_weighted(fam.sum.lattice, fam.weight, fam.maps[2], 1.0);
    FAIL() << "expected PreconditionGap";
  } catch (const PreconditionGap& e) {
    EXPECT_DOUBLE_EQ(e.defect(), 1.0 / 16);
    EXPECT_DOUBLE_EQ(e.flighty(), 8.0);
    EXPECT_DOUBLE_EQ(e.ratio(), 1.0);
  }
}

TEST(Weighted, RejectsNonBinary) {
  ScalarMap psi = {0, 0.5, 1};
  EXPECT_THROW(correct_weighted(nmin(3), unit_weight<double>(3), psi, 0.5), PreconditionViolated);
  EXPECT_THROW(correct_weighted(nmin(3), unit_weight<double>(3), ScalarMap(3, Complex(1)), 0), PreconditionViolated);
}

TEST(T2, SmallNilpotentPart) {
  auto s = nmin(3);
  T2Map theta = {{0, 0}, {1, 0.05}, {1, 0}};
  auto c = correct_T2(s, theta);
  EXPECT_NEAR(c.defect, 0.05, 1e-15);
  EXPECT_EQ(c.support.members(), (std::vector<Index>{1, 2}));
  EXPECT_EQ(c.corrected[1], T2Element::identity());
  EXPECT_EQ(c.corrected[0], T2Element::zero());
  EXPECT_NEAR(c.achieved_distance, 0.05, 1e-15);
  EXPECT_NEAR(c.claimed_bound, 25.0 / 11 * 0.05, 1e-15);
}

TEST(T2, DefectTooLarge) {
  auto s = nmin(2);
  T2Map theta = {{0, 0}, {1, 0.3}};
  EXPECT_THROW(correct_T2(s, theta), DefectTooLarge);
}

namespace {

Mat2 diag(double a, double b) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(M2, MultiplicativeInputIsFixed) {
  auto fs = free_semilattice(3);
  MultiplicativeFamilyM2 fam{fs.generator(0), fs.generator(1), Mat2::Zero()};
  fam.P << 1, 0.5, 0, 0;
  auto theta = fam.evaluate(fs.lattice);
  auto c = correct_M2(fs.lattice, theta, 0.0);
  EXPECT_NEAR(c.achieved_distance, 0.0, 1e-12);
  EXPECT_LE(c.corrected_defect, 1e-9);
  EXPECT_GT(c.checks, 0u);
}

TEST(M2, IdentityPlusNilpotent) {
  auto s = nmin(2);
  Mat2 e12 = Mat2::Zero();
  e12(0, 1) = 0.01;
  M2Map theta = {Mat2(Mat2::Identity()) + e12, Mat2::Identity()};
  const double d = defect(s, theta, Norm::HS).defect;
  EXPECT_NEAR(d, 0.01, 1e-15);
  auto c = correct_M2(s, theta, d);
  EXPECT_EQ(c.classes[0], ElementClass::S2);
  EXPECT_EQ(c.classes[1], ElementClass::S2);
  EXPECT_EQ(c.corrected[0], Mat2(Mat2::Identity()));
  EXPECT_NEAR(c.achieved_distance, 0.01, 1e-15);
  EXPECT_LE(c.achieved_distance, 12 * d);
}

TEST(M2, SplitsRankOneClasses) {
  // P on the lower element, I − P above a disjoint element, I on the top
  auto fs = free_semilattice(2);
  Rng rng(71);
  M2Map theta(3);
  theta[fs.generator(0)] = diag(1, 0);
  theta[fs.generator(1)] = diag(0, 1);
  theta[fs.zero] = Mat2::Zero();
  for (auto& v : theta) v += random_perturbation(rng, 0.002);
  const double d = defect(fs.lattice, theta, Norm::HS).defect;
  auto c = correct_M2(fs.lattice, theta, d);
  EXPECT_TRUE(c.p0.has_value());
  EXPECT_EQ(c.classes[fs.zero], ElementClass::S0);
  EXPECT_NE(c.classes[fs.generator(0)], c.classes[fs.generator(1)]);
  EXPECT_TRUE(is_rank1_idempotent_within(c.projector));
  EXPECT_LE(c.achieved_distance, 12 * d);
}

TEST(M2, RandomPerturbedFamilies) {
  Rng rng(73);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = random_semilattice(rng, 20);
    const auto& s = rs.lattice;
    auto filters = enumerate_filters(s);
    MultiplicativeFamilyM2 fam;
    if (rng() % 4) fam.f1 = filters[rng() % filters.size()].principal_min;
    if (rng() % 4) fam.f2 = filters[rng() % filters.size()].principal_min;
    fam.P = random_rank1_idempotent(rng, 3.0);
    auto theta = fam.evaluate(s);
    for (auto& v : theta) v += random_perturbation(rng, 1e-3);
    const double d = defect(s, theta, Norm::HS).defect;
    if (!(d < 0.03)) continue;
    auto c = correct_M2(s, theta, d);
    EXPECT_LE(c.achieved_distance, 12 * d + 1e-12);
    ++done;
  }
  EXPECT_GT(done, 100);
}

TEST(M2, DefectGuards) {
  auto s = nmin(2);
  M2Map theta = {Mat2::Identity(), Mat2::Identity()};
  EXPECT_THROW(correct_M2(s, theta, 0.03), DefectTooLarge);
  M2Map far = {diag(0.5, 0), Mat2::Identity()};
  EXPECT_THROW(correct_M2(s, far, 0.01), DefectTooLarge);
}
