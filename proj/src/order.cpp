#include "amnm/order.hpp"

#include <algorithm>
#include <numeric>

namespace amnm {

Poset Poset::of(const Semilattice& s) {
  Poset p(s.size());
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) p.set_leq(x, y, s.leq(x, y));
  return p;
}

bool Poset::is_partial_order() const {
  for (Index x = 0; x < n_; ++x) {
    if (!leq(x, x)) return false;
    for (Index y = 0; y < n_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return false;
      if (!leq(x, y)) continue;
      for (Index z = 0; z < n_; ++z)
        if (leq(y, z) && !leq(x, z)) return false;
    }
  }
  return true;
}

namespace {

struct Matching {
  std::vector<int> right_of;  // left x -> matched right y, or -1
  std::vector<int> left_of;   // right y -> matched left x, or -1
  std::size_t size = 0;
};

bool augment(const Poset& p, Index x, std::vector<char>& seen, Matching& m) {
  for (Index y = 0; y < p.size(); ++y) {
    if (!p.less(x, y) || seen[y]) continue;
    seen[y] = 1;
    if (m.left_of[y] < 0 || augment(p, static_cast<Index>(m.left_of[y]), seen, m)) {
      m.right_of[x] = static_cast<int>(y);
      m.left_of[y] = static_cast<int>(x);
      return true;
    }
  }
  return false;
}

// Maximum matching in the bipartite graph x_L -> y_R for x < y (Kuhn).
Matching max_matching(const Poset& p) {
  const std::size_t n = p.size();
  Matching m{std::vector<int>(n, -1), std::vector<int>(n, -1), 0};
  for (Index x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    if (augment(p, x, seen, m)) ++m.size;
  }
  return m;
}

}  // namespace

std::vector<Index> max_antichain(const Poset& p) {
  const std::size_t n = p.size();
  const Matching m = max_matching(p);
  // Alternating reachability from unmatched left vertices.
  std::vector<char> left_z(n, 0), right_z(n, 0);
  std::vector<Index> stack;
  for (Index x = 0; x < n; ++x)
    if (m.right_of[x] < 0) {
      left_z[x] = 1;
      stack.push_back(x);
    }
  while (!stack.empty()) {
    Index x = stack.back();
    stack.pop_back();
    for (Index y = 0; y < n; ++y) {
      if (!p.less(x, y) || right_z[y] || m.right_of[x] == static_cast<int>(y)) continue;
      right_z[y] = 1;
      int back = m.left_of[y];
      if (back >= 0 && !left_z[back]) {
        left_z[back] = 1;
        stack.push_back(static_cast<Index>(back));
      }
    }
  }
  std::vector<Index> antichain;
  for (Index x = 0; x < n; ++x)
    if (left_z[x] && !right_z[x]) antichain.push_back(x);
  return antichain;
}

std::vector<std::vector<Index>> min_chain_cover(const Poset& p) {
  const std::size_t n = p.size();
  const Matching m = max_matching(p);
  std::vector<std::vector<Index>> chains;
  for (Index x = 0; x < n; ++x) {
    if (m.left_of[x] >= 0) continue;
    std::vector<Index> chain{x};
    for (int y = m.right_of[x]; y >= 0; y = m.right_of[y]) chain.push_back(static_cast<Index>(y));
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<Index> longest_chain(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  std::vector<std::size_t> below(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (p.less(y, x)) ++below[x];
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return below[a] < below[b]; });

  std::vector<std::size_t> best(n, 1);
  std::vector<int> prev(n, -1);
  for (Index x : order)
    for (Index y = 0; y < n; ++y)
      if (p.less(y, x) && best[y] + 1 > best[x]) {
        best[x] = best[y] + 1;
        prev[x] = static_cast<int>(y);
      }
  Index top = static_cast<Index>(std::max_element(best.begin(), best.end()) - best.begin());
  std::vector<Index> chain;
  for (int v = static_cast<int>(top); v >= 0; v = prev[v]) chain.push_back(static_cast<Index>(v));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace amnm
