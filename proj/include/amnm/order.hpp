#pragma once

#include <cstddef>
#include <vector>

#include "amnm/semilattice.hpp"

namespace amnm {

/// A finite relation stored as a dense boolean matrix, intended to be a
/// partial order (reflexive, antisymmetric, transitive).
class Poset {
 public:
  explicit Poset(std::size_t n) : n_(n), leq_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  }

  static Poset of(const Semilattice& s);

  std::size_t size() const { return n_; }
  bool leq(Index x, Index y) const { return leq_[static_cast<std::size_t>(x) * n_ + y]; }
  bool less(Index x, Index y) const { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  void set_leq(Index x, Index y, bool v = true) { leq_[static_cast<std::size_t>(x) * n_ + y] = v; }

  bool is_partial_order() const;

 private:
  std::size_t n_;
  std::vector<bool> leq_;
};

/// Maximum antichain via König's theorem on the comparability bipartite graph.
std::vector<Index> max_antichain(const Poset& p);

/// Minimum chain cover via maximum bipartite matching. Each chain is listed
/// from the bottom up.
std::vector<std::vector<Index>> min_chain_cover(const Poset& p);

/// A longest chain, bottom up.
std::vector<Index> longest_chain(const Poset& p);

}  // namespace amnm
