#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amnm/defect.hpp"

namespace amnm {

/// No index satisfies the construction's weight conditions.
class NoEligibleIndex : public Error {
 public:
  using Error::Error;
};

/// Value types per real field: Complex/T2Element/Mat2 for double, and their
/// rational counterparts for exact runs.
template <class Real>
struct Codomain;
template <>
struct Codomain<double> {
  using Scalar = Complex;
  using T2 = T2Element;
  using M2 = Mat2;
};
template <>
struct Codomain<Rational> {
  using Scalar = Rational;
  using T2 = BasicT2<Rational>;
  using M2 = Matrix2<Rational>;
};

template <class Real>
struct CounterexampleReport {
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;
  Real defect{};                // measured by exhaustive pair scan
  Real closed_form{};           // the construction's formula for the defect
  bool defect_matches = false;  // equality, or <= for bound-only families
  Real distance_lower_bound{};  // certified
  Real distance_found{};        // exact minimum when method is exhaustive
  std::string method;           // "exhaustive" or "analytic-lemma"
  std::optional<double> numerical_distance;  // optimizer value, an upper bound
};

template <class Real>
struct PsiFamily {
  OrthogonalSum sum;
  std::vector<FreeSemilattice> blocks;
  Weight<Real> weight;
  std::vector<AlgebraMap<typename Codomain<Real>::Scalar>> maps;  // ψ_n per block
  std::vector<CounterexampleReport<Real>> reports;
};

/// Orthogonal sum of free semilattices with the counterexample weight and the
/// maps ψ_n = 1 on block n except its zero. Distances are exact minima over
/// all multiplicative scalar maps.
template <class Real>
PsiFamily<Real> psi_n_family(const Real& C, const std::vector<unsigned>& block_sizes);

template <class Real>
struct T2Counterexample {
  Semilattice lattice;
  AlgebraMap<typename Codomain<Real>::T2> theta;
  AlgebraMap<typename Codomain<Real>::M2> referee;  // φ_m into Mat₂
  Real referee_defect{};                            // operator norm, weight ω
  Real referee_distance{};                          // ‖θ_m − φ_m‖_{∞,ω⁻¹}
  CounterexampleReport<Real> report;
};

/// θ_m = (χ_m, ω(m)δ_m; 0, χ_m) on N_min truncated to weight.size(), with m
/// counted from 1.
template <class Real>
T2Counterexample<Real> theta_m_T2(const Weight<Real>& weight, std::size_t m);

template <class Real>
struct M2Counterexample {
  Semilattice lattice;
  std::size_t n = 0;  // the eligible index, counted from 1
  AlgebraMap<typename Codomain<Real>::M2> theta;
  CounterexampleReport<Real> report;
};

/// θ(n) = (1, −ω(n); 0, 0), θ(n+1) = (1, ω(n+1); 0, 0), zero below n and I
/// above n+1, for the first n with min(ω(n), ω(n+1)) >= 2/δ. Operator norm.
template <class Real>
M2Counterexample<Real> theta_M2(const Weight<Real>& weight, const Real& delta);

struct M2NonUniformCounterexample {
  Semilattice lattice;
  std::size_t n = 0;
  double C = 0;                  // max over n of min(ω(n), ω(n+1))
  M2Map theta;
  double stated_bound = 0;       // 3‖θ(n+1)‖/ω(n)², itself at most 6/ω(n)
  double weighted_norm = 0;      // ‖θ‖_{∞,ω⁻¹}
  double weighted_norm_bound = 0;  // 2ω(n)/ω(n+1)
  bool exact_identity = false;   // θ(n)² − θ(n) = 2θ(n+1) in exact arithmetic
  CounterexampleReport<double> report;
};

/// θ(n+1) = (1, ω(n); 0, 0), θ(n) = 2θ(n+1), for the first n with
/// ω(n) >= max(6/δ, 2C) and ω(n+1) <= C. Operator norm.
M2NonUniformCounterexample theta_M2_nonunif(const Weight<double>& weight, double delta);

/// Best weighted operator-norm distance from θ to the multiplicative family
/// found by the optimizer (an upper bound, not a certificate).
double optimizer_distance(const Semilattice& s, const Weight<double>& weight, const M2Map& theta, std::size_t starts,
                          std::uint64_t seed);

}  // namespace amnm
