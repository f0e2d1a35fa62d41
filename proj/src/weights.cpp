#include "amnm/weights.hpp"

#include <algorithm>

namespace amnm {

namespace {

template <class Real>
void require_length(const Semilattice& s, const Weight<Real>& weight) {
  if (weight.size() != s.size()) throw StructureMismatch("weight length differs from semilattice size");
}

}  // namespace

template <class Real>
std::optional<std::pair<Index, Index>> submultiplicative_violation(const Semilattice& s,
                                                                   const Weight<Real>& weight) {
  require_length(s, weight);
  for (Index i = 0; i < s.size(); ++i)
    if (!(weight[i] > 0)) throw NonPositiveWeight(i, "weight of element " + std::to_string(i) + " is not positive");
  for (Index i = 0; i < s.size(); ++i)
    for (Index j = i; j < s.size(); ++j)
      if (weight[s(i, j)] > weight[i] * weight[j]) return std::make_pair(i, j);
  return std::nullopt;
}

template <class Real>
Weight<Real> building_block_weight(const FreeSemilattice& block, const Real& C) {
  if (!(C > 1)) throw PreconditionViolated("building-block constant C must exceed 1");
  Weight<Real> w(block.lattice.size());
  for (Index e = 0; e < w.size(); ++e) {
    if (e == block.zero) {
      w[e] = C;
      continue;
    }
    Real v(1);
    for (unsigned k = 0; k < block.length[e]; ++k) v *= C;
    w[e] = v;
  }
  return w;
}

template <class Real>
Weight<Real> counterexample_weight(const OrthogonalSum& sum, std::span<const FreeSemilattice> blocks,
                                   const Real& C) {
  if (blocks.size() != sum.block_elements.size())
    throw StructureMismatch("block count differs from the orthogonal sum");
  Weight<Real> w(sum.lattice.size(), Real(1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& globals = sum.block_elements[b];
    if (globals.size() != blocks[b].lattice.size())
      throw StructureMismatch("block " + std::to_string(b) + " size differs from the orthogonal sum");
    const auto local = building_block_weight(blocks[b], C);
    for (std::size_t i = 0; i < globals.size(); ++i) w[globals[i]] = local[i];
  }
  w[sum.zero] = Real(1);
  return w;
}

template <class Real>
ElementSet weight_window(const Weight<Real>& weight, const Real& K) {
  ElementSet window(weight.size());
  for (Index i = 0; i < weight.size(); ++i)
    if (weight[i] <= K) window.insert(i);
  return window;
}

template <class Real>
FlightyConstant<Real> flighty_constant(const Semilattice& s, const Weight<Real>& weight, const Real& K) {
  require_length(s, weight);
  FlightyConstant<Real> out{Real(1), false, weight_window(weight, K), ElementSet(s.size())};
  if (out.window.empty()) {
    out.empty_window = true;
    return out;
  }
  out.closure = generated(s, out.window);
  bool first = true;
  for (Index y : out.closure.members())
    if (first || weight[y] > out.value) {
      out.value = weight[y];
      first = false;
    }
  return out;
}

#define AMNM_INSTANTIATE_WEIGHTS(Real)                                                                      \
  template std::optional<std::pair<Index, Index>> submultiplicative_violation<Real>(const Semilattice&,    \
                                                                                    const Weight<Real>&); \
  template Weight<Real> building_block_weight<Real>(const FreeSemilattice&, const Real&);                  \
  template Weight<Real> counterexample_weight<Real>(const OrthogonalSum&, std::span<const FreeSemilattice>, \
                                                    const Real&);                                           \
  template ElementSet weight_window<Real>(const Weight<Real>&, const Real&);                              \
  template FlightyConstant<Real> flighty_constant<Real>(const Semilattice&, const Weight<Real>&, const Real&);

AMNM_INSTANTIATE_WEIGHTS(double)
AMNM_INSTANTIATE_WEIGHTS(Rational)

#undef AMNM_INSTANTIATE_WEIGHTS

}  // namespace amnm
