#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "amnm/random.hpp"
#include "amnm/weights.hpp"

using namespace amnm;

namespace {

struct TestSum {
  OrthogonalSum sum;
  std::vector<FreeSemilattice> blocks;
};

TestSum free_blocks(std::initializer_list<unsigned> sizes) {
  TestSum t;
  std::vector<Semilattice> lattices;
  for (unsigned k : sizes) {
    t.blocks.push_back(free_semilattice(k));
    lattices.push_back(t.blocks.back().lattice);
  }
  t.sum = orthogonal_direct_sum(lattices);
  return t;
}

}  // namespace

TEST(Submultiplicative, PowersOnNminPass) {
  auto s = nmin(6);
  Weight<double> w;
  for (int i = 1; i <= 6; ++i) w.push_back(std::pow(2.0, i));
  EXPECT_FALSE(submultiplicative_violation(s, w).has_value());
}

TEST(Submultiplicative, WitnessIsFirstPair) {
  auto s = nmin(3);
  Weight<double> w = {1.0, 1.0, 0.5};
  auto v = submultiplicative_violation(s, w);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->first, 0u);
  EXPECT_EQ(v->second, 2u);
  Weight<double> ok = {5.0, 1.0, 2.0};
  EXPECT_FALSE(submultiplicative_violation(s, ok).has_value());
}

TEST(Submultiplicative, NonPositiveThrows) {
  Weight<double> w = {1.0, 0.0, 1.0};
  try {
    submultiplicative_violation(nmin(3), w);
    FAIL() << "expected NonPositiveWeight";
  } catch (const NonPositiveWeight& e) {
    EXPECT_EQ(e.element(), 1u);
  }
  EXPECT_THROW(submultiplicative_violation(nmin(4), w), StructureMismatch);
}

TEST(Submultiplicative, RandomProductWeights) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto rs = random_semilattice(rng, 40);
    auto w = random_product_weight(rng, rs, 4.0);
    EXPECT_FALSE(submultiplicative_violation(rs.lattice, w).has_value());
  }
}

TEST(BuildingBlock, PowersOfLength) {
  auto fs = free_semilattice(3);
  auto w = building_block_weight(fs, Rational(3));
  for (Index e = 0; e < 7; ++e) {
    if (e == fs.zero) {
      EXPECT_EQ(w[e], Rational(3));
    } else {
      Rational expected(1);
      for (unsigned k = 0; k < fs.length[e]; ++k) expected *= 3;
      EXPECT_EQ(w[e], expected);
    }
  }
  EXPECT_FALSE(submultiplicative_violation(fs.lattice, w).has_value());
  EXPECT_THROW(building_block_weight(fs, 1.0), PreconditionViolated);
}

TEST(CounterexampleWeight, SubmultiplicativeWithUnitZero) {
  auto t = free_blocks({2, 3, 4});
  auto w = counterexample_weight(t.sum, t.blocks, Rational(2));
  EXPECT_EQ(w[t.sum.zero], Rational(1));
  EXPECT_FALSE(submultiplicative_violation(t.sum.lattice, w).has_value());
  auto wd = counterexample_weight(t.sum, t.blocks, 2.0);
  EXPECT_FALSE(submultiplicative_violation(t.sum.lattice, wd).has_value());
}

TEST(Flighty, CounterexampleAtTwo) {
  auto t = free_blocks({2, 3, 4});
  auto w = counterexample_weight(t.sum, t.blocks, Rational(2));
  auto c = flighty_constant(t.sum.lattice, w, Rational(2));
  EXPECT_EQ(c.value, Rational(8));
  EXPECT_FALSE(c.empty_window);
  EXPECT_TRUE(c.window.is_subset_of(c.closure));
}

TEST(Flighty, EmptyWindowGivesOne) {
  Weight<double> w = {3.0, 3.0, 3.0};
  auto c = flighty_constant(nmin(3), w, 2.0);
  EXPECT_TRUE(c.empty_window);
  EXPECT_EQ(c.value, 1.0);
}

TEST(Flighty, BoundedByPowerOfBreadthAndMonotone) {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto rs = random_semilattice(rng, 16);
    auto w = random_product_weight(rng, rs, 3.0);
    const double b = static_cast<double>(breadth(rs.lattice));
    double previous = 0;
    for (double K : {1.0, 1.5, 2.0, 4.0, 9.0}) {
      auto c = flighty_constant(rs.lattice, w, K);
      EXPECT_LE(c.value, std::pow(K, b) * (1 + 1e-12));
      EXPECT_GE(c.value, previous);
      previous = c.value;
    }
  }
}

TEST(Window, Threshold) {
  Weight<double> w = {1.0, 2.0, 2.5, 4.0};
  EXPECT_EQ(weight_window(w, 2.0).members(), (std::vector<Index>{0, 1}));
}
