#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amnm/defect.hpp"
#include "amnm/filters.hpp"
#include "amnm/order.hpp"

namespace amnm {

/// The zero map followed by every filter indicator, in filter order.
template <class Scalar = Complex>
std::vector<AlgebraMap<Scalar>> enumerate_mult_scalar(const Semilattice& s) {
  std::vector<AlgebraMap<Scalar>> out;
  out.emplace_back(s.size(), Scalar(0));
  for (auto& c : characters<Scalar>(s)) out.push_back(std::move(c));
  return out;
}

/// Multiplicative maps into T₂: m·1 for each multiplicative scalar map m.
template <class Scalar = Complex>
std::vector<AlgebraMap<BasicT2<Scalar>>> enumerate_mult_T2(const Semilattice& s) {
  std::vector<AlgebraMap<BasicT2<Scalar>>> out;
  for (const auto& m : enumerate_mult_scalar<Scalar>(s)) {
    AlgebraMap<BasicT2<Scalar>> t(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) t[x] = {m[x], Scalar(0)};
    out.push_back(std::move(t));
  }
  return out;
}

/// Checks the T₂ constraint system directly: the a-part is multiplicative and
/// the b-part satisfies b(ef) = a(e)b(f) + b(e)a(f).
bool satisfies_T2_constraints(const Semilattice& s, const T2Map& map, double tol = tolerance::kStructural);

/// x ↦ χ_{F1}(x)·P + χ_{F2}(x)·(I − P). Filters are stored by their principal
/// element; nullopt means the empty set.
struct MultiplicativeFamilyM2 {
  std::optional<Index> f1;
  std::optional<Index> f2;
  Mat2 P = Mat2::Zero();

  M2Map evaluate(const Semilattice& s) const;
};

struct OracleCell {
  std::optional<Index> f1;
  std::optional<Index> f2;
  double lower_bound = 0;  // P-independent part of the objective
  double best = 0;         // smallest objective found in this cell
  bool pruned = false;     // lower bound already above a P-free cell
};

struct OracleResult {
  MultiplicativeFamilyM2 family;
  M2Map map;
  double distance = 0;  // upper bound on the true distance
  Norm norm = Norm::HS;
  std::size_t starts = 0;
  std::vector<OracleCell> cells;
};

/// Smallest weighted sup distance from θ to the (F1, F2, P) family found by
/// exhaustive search over cells and multi-start Nelder–Mead over P. The
/// result is an upper bound on the distance to the multiplicative maps.
OracleResult nearest_mult_M2(const Semilattice& s, const Weight<double>& weight, const M2Map& theta, Norm norm,
                             std::size_t starts, std::uint64_t seed = 0);

/// Pairs of commuting exact idempotents drawn from the four structural cases.
std::vector<std::pair<Mat2, Mat2>> sample_commuting_idempotents(std::size_t count, std::uint64_t seed);
std::vector<std::pair<Matrix2<Rational>, Matrix2<Rational>>> sample_commuting_idempotents_exact(std::size_t count,
                                                                                               std::uint64_t seed);

/// All filters found by testing every subset (n <= 20).
std::vector<ElementSet> brute_force_filters(const Semilattice& s);

/// Size of a largest antichain found by testing every subset (n <= 20).
std::size_t brute_force_max_antichain(const Poset& p);

struct CompletenessReport {
  std::size_t assignments = 0;
  std::size_t multiplicative = 0;  // defect <= tolerance
  std::size_t representable = 0;   // F1, F2 each empty or a filter
  std::size_t mismatches = 0;      // assignments where the two tests disagree
};

/// Tries every assignment S → {0, P, I−P, I} (4ⁿ of them, n <= 6).
CompletenessReport classification_completeness(const Semilattice& s, const Mat2& P);

}  // namespace amnm
