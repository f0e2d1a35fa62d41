#pragma once

#include <span>
#include <vector>

#include "amnm/algebra.hpp"
#include "amnm/semilattice.hpp"

namespace amnm {

/// A filter of a finite semilattice. On finite semilattices every filter is
/// the up-set of the product of its members, recorded as `principal_min`.
struct Filter {
  ElementSet members;
  Index principal_min = 0;

  bool operator==(const Filter&) const = default;
};

/// Literal check: nonempty, closed under products, upward closed.
bool is_filter(const Semilattice& s, const ElementSet& e);

/// {x : x ⪰ m}.
ElementSet up_set(const Semilattice& s, Index m);

/// Smallest filter containing the nonempty set E.
Filter filter_generated(const Semilattice& s, const ElementSet& e);

/// All filters, one per element, ordered by principal element index.
std::vector<Filter> enumerate_filters(const Semilattice& s);

template <class Scalar = Complex>
AlgebraMap<Scalar> indicator(const ElementSet& members) {
  AlgebraMap<Scalar> out(members.universe(), Scalar(0));
  for (Index i : members.members()) out[i] = Scalar(1);
  return out;
}

/// Indicators of all filters (the nonzero multiplicative scalar maps).
template <class Scalar = Complex>
std::vector<AlgebraMap<Scalar>> characters(const Semilattice& s) {
  std::vector<AlgebraMap<Scalar>> out;
  for (const auto& f : enumerate_filters(s)) out.push_back(indicator<Scalar>(f.members));
  return out;
}

struct GelfandTransform {
  std::vector<Complex> values;  // f_n = Σ_{m >= n} a_m, n = 1..M
  double norm = 0;              // Σ_{j=1}^{M} |f_j − f_{j+1}| ω(j), with f_{M+1} = 0
  double l1_norm = 0;           // Σ |a_j| ω(j)
};

/// Gelfand transform of a finitely supported element of ℓ¹_ω(N_min) and its
/// weighted variation norm. With the convention above the transform of the
/// point mass at m has norm ω(m), and since f_j − f_{j+1} = a_j the norm
/// coincides with `l1_norm` for every coefficient vector.
GelfandTransform gelfand_nmin(const Semilattice& s, std::span<const double> weight, std::span<const Complex> coeffs);

}  // namespace amnm
