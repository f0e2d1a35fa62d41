#include "amnm/filters.hpp"

#include <algorithm>
#include <cmath>

namespace amnm {

bool is_filter(const Semilattice& s, const ElementSet& e) {
  if (e.universe() != s.size()) throw StructureMismatch("element set universe differs from semilattice size");
  const auto members = e.members();
  if (members.empty()) return false;
  for (Index x : members)
    for (Index y : members)
      if (!e.contains(s(x, y))) return false;
  for (Index x = 0; x < s.size(); ++x) {
    if (e.contains(x)) continue;
    for (Index y : members)
      if (e.contains(s(x, y))) return false;
  }
  return true;
}

ElementSet up_set(const Semilattice& s, Index m) {
  ElementSet out(s.size());
  for (Index x = 0; x < s.size(); ++x)
    if (s.leq(m, x)) out.insert(x);
  return out;
}

Filter filter_generated(const Semilattice& s, const ElementSet& e) {
  if (e.universe() != s.size()) throw StructureMismatch("element set universe differs from semilattice size");
  if (e.empty()) throw PreconditionViolated("generating set of a filter must be nonempty");
  // The minimum of ⟨E⟩ is the product of all of E.
  const Index bottom = s.product_of(e);
  return Filter{up_set(s, bottom), bottom};
}

std::vector<Filter> enumerate_filters(const Semilattice& s) {
  std::vector<Filter> out;
  out.reserve(s.size());
  for (Index m = 0; m < s.size(); ++m) out.push_back(Filter{up_set(s, m), m});
  return out;
}

GelfandTransform gelfand_nmin(const Semilattice& s, std::span<const double> weight, std::span<const Complex> coeffs) {
  const std::size_t M = s.size();
  for (Index i = 0; i < M; ++i)
    for (Index j = 0; j < M; ++j)
      if (s(i, j) != std::min(i, j)) throw StructureMismatch("semilattice is not a truncated N_min");
  if (weight.size() != M || coeffs.size() != M)
    throw StructureMismatch("weight and coefficient lengths must equal the truncation length");

  GelfandTransform out;
  out.values.assign(M, Complex(0));
  Complex tail(0);
  for (std::size_t k = M; k-- > 0;) {
    tail += coeffs[k];
    out.values[k] = tail;
  }
  for (std::size_t j = 0; j < M; ++j) {
    const Complex next = j + 1 < M ? out.values[j + 1] : Complex(0);
    out.norm += std::abs(out.values[j] - next) * weight[j];
    out.l1_norm += std::abs(coeffs[j]) * weight[j];
  }
  return out;
}

}  // namespace amnm
