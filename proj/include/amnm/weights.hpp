#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "amnm/rational.hpp"
#include "amnm/semilattice.hpp"

namespace amnm {

/// Positive value per element. Instantiated for double and Rational.
template <class Real>
using Weight = std::vector<Real>;

/// Some weight value is zero or negative.
class NonPositiveWeight : public Error {
 public:
  NonPositiveWeight(Index element, const std::string& what) : Error(what), element_(element) {}
  Index element() const { return element_; }

 private:
  Index element_;
};

template <class Real>
Weight<Real> unit_weight(std::size_t n) {
  return Weight<Real>(n, Real(1));
}

/// First pair (i <= j) with ω(ij) > ω(i)ω(j), compared without slack;
/// nullopt when ω is submultiplicative.
template <class Real>
std::optional<std::pair<Index, Index>> submultiplicative_violation(const Semilattice& s,
                                                                   const Weight<Real>& weight);

/// ω(e) = C^γ(e) for e ≠ θ, ω(θ) = C. Requires C > 1.
template <class Real>
Weight<Real> building_block_weight(const FreeSemilattice& block, const Real& C);

/// ω(θ) = 1 on the adjoined zero and the building-block weight on every
/// block. `blocks` must be the free semilattices the sum was built from.
template <class Real>
Weight<Real> counterexample_weight(const OrthogonalSum& sum, std::span<const FreeSemilattice> blocks,
                                   const Real& C);

/// W_K = {x : ω(x) <= K}.
template <class Real>
ElementSet weight_window(const Weight<Real>& weight, const Real& K);

template <class Real>
struct FlightyConstant {
  Real value;              // max ω over ⟨W_K⟩, or 1 when W_K is empty
  bool empty_window = false;
  ElementSet window;       // W_K
  ElementSet closure;      // ⟨W_K⟩
};

/// sup{ω(y) : y ∈ ⟨W_K⟩}, which is always finite on a finite semilattice.
template <class Real>
FlightyConstant<Real> flighty_constant(const Semilattice& s, const Weight<Real>& weight, const Real& K);

}  // namespace amnm
