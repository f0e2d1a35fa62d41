#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "amnm/counterexamples.hpp"
#include "amnm/defect.hpp"
#include "amnm/filters.hpp"
#include "amnm/random.hpp"

using namespace amnm;

TEST(Norms, ParseAndPrint) {
  for (Norm n : {Norm::Abs, Norm::T2, Norm::HS, Norm::Op}) EXPECT_EQ(parse_norm(to_string(n)), n);
  EXPECT_THROW(parse_norm("frobenius"), NormMismatch);
  EXPECT_THROW(norm_of(Complex(1), Norm::HS), NormMismatch);
  EXPECT_THROW(norm_of(Mat2(Mat2::Identity()), Norm::Abs), NormMismatch);
}

TEST(Defect, FilterIndicatorsAreExact) {
  auto s = free_semilattice(3).lattice;
  for (const auto& f : enumerate_filters(s)) {
    auto chi = indicator<Rational>(f.members);
    EXPECT_EQ(defect(s, chi, Norm::Abs).defect, Rational(0));
  }
}

TEST(Defect, ScalarExample) {
  auto s = nmin(4);
  ScalarMap psi = {0.0, 0.8, 1.05, 1.0};
  auto d = defect(s, psi, Norm::Abs);
  EXPECT_NEAR(d.defect, 0.16, 1e-15);
  EXPECT_EQ(d.e, 1u);
  EXPECT_EQ(d.f, 1u);
}

TEST(Defect, ThetaMIsReciprocalWeight) {
  Weight<Rational> w = {Rational(1), Rational(2), Rational(4), Rational(8), Rational(16)};
  for (std::size_t m = 1; m <= 5; ++m) {
    auto t = theta_m_T2(w, m);
    EXPECT_EQ(defect(t.lattice, w, t.theta, Norm::T2).defect, Rational(1) / w[m - 1]);
  }
}

TEST(Defect, MatrixScanIsOrdered) {
  // θ(0)θ(1) = θ(0) but θ(1)θ(0) ≠ θ(0), so only the ordered scan sees a gap
  auto s = nmin(2);
  Mat2 a, b;
  a << 1, 0, 0, 0;
  b << 1, 0, 1, 0;
  M2Map theta = {a, b};
  auto d = defect(s, theta, Norm::HS);
  EXPECT_DOUBLE_EQ(d.defect, 1.0);
  EXPECT_EQ(d.e, 1u);
  EXPECT_EQ(d.f, 0u);
}

TEST(Defect, BinaryMapsHaveDefectZeroOrOne) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = random_semilattice(rng, 24);
    const auto n = rs.lattice.size();
    AlgebraMap<Rational> psi(n);
    for (auto& v : psi) v = Rational(static_cast<int>(rng() & 1));
    const auto d = defect(rs.lattice, psi, Norm::Abs).defect;
    EXPECT_TRUE(d == 0 || d == 1);
    EXPECT_EQ(d == 0, is_multiplicative_exact(rs.lattice, psi));
  }
}

TEST(Defect, RelabelInvariant) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    auto rs = random_semilattice(rng, 20);
    const auto& s = rs.lattice;
    const auto n = s.size();
    auto w = random_product_weight(rng, rs, 2.0);
    ScalarMap psi(n);
    for (auto& v : psi) v = random_complex(rng, 1.5);

    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Semilattice::Table t(n, std::vector<Index>(n));
    Weight<double> w2(n);
    ScalarMap psi2(n);
    for (Index i = 0; i < n; ++i) {
      w2[perm[i]] = w[i];
      psi2[perm[i]] = psi[i];
      for (Index j = 0; j < n; ++j) t[perm[i]][perm[j]] = perm[s(i, j)];
    }
    auto s2 = Semilattice::validate(t);
    EXPECT_NEAR(defect(s, w, psi, Norm::Abs).defect, defect(s2, w2, psi2, Norm::Abs).defect, 1e-14);
  }
}

TEST(Defect, ShapeMismatch) {
  ScalarMap psi(3, Complex(1));
  EXPECT_THROW(defect(nmin(4), psi, Norm::Abs), StructureMismatch);
}

TEST(Distance, WeightedSup) {
  Weight<Rational> w = {Rational(1), Rational(4)};
  AlgebraMap<Rational> a = {Rational(1), Rational(1)};
  AlgebraMap<Rational> b = {Rational(1, 2), Rational(-1)};
  EXPECT_EQ(weighted_sup_distance(w, a, b, Norm::Abs), Rational(1, 2));
  EXPECT_EQ(sup_distance(a, b, Norm::Abs), Rational(2));
}

TEST(RoundToBinary, ScalarExample) {
  auto s = nmin(4);
  ScalarMap psi = {0.0, 0.8, 1.05, 1.0};
  auto r = round_to_binary(s, unit_weight<double>(4), psi);
  EXPECT_EQ(r.rounded, (ScalarMap{0.0, 1.0, 1.0, 1.0}));
  EXPECT_NEAR(r.defect, 0.16, 1e-15);
  EXPECT_NEAR(r.distance, 0.2, 1e-15);
  EXPECT_LE(r.distance, std::sqrt(r.defect));
  EXPECT_EQ(r.rounded_defect, 0.0);
}

TEST(RoundToBinary, BoundsOnRandomNearMultiplicativeMaps) {
  Rng rng(53);
  std::uniform_real_distribution<double> noise(0.0, 0.1);
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = random_semilattice(rng, 24);
    auto w = random_product_weight(rng, rs, 3.0);
    auto chars = characters(rs.lattice);
    ScalarMap psi = chars[rng() % chars.size()];
    for (auto& v : psi) v += random_complex(rng, noise(rng));
    auto r = round_to_binary(rs.lattice, w, psi);
    EXPECT_LE(r.distance, std::sqrt(r.defect) + 1e-12);
    EXPECT_LE(r.rounded_defect, 3 * std::sqrt(r.defect) + 2 * r.defect + 1e-12);
    for (const auto& v : r.rounded) EXPECT_TRUE(v == Complex(0) || v == Complex(1));
  }
}
