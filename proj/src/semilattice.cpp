#include "amnm/semilattice.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "amnm/order.hpp"

namespace amnm {

ElementSet ElementSet::from_indices(std::size_t universe, std::span<const Index> members) {
  ElementSet s(universe);
  for (Index i : members) {
    if (i >= universe) throw PreconditionViolated("element index out of range");
    s.insert(i);
  }
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.bits_[i] = true;
  return s;
}

std::size_t ElementSet::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(static_cast<Index>(i))) return false;
  return true;
}

std::vector<Index> ElementSet::members() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Index>(i));
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && other.contains(static_cast<Index>(i));
  return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet out(std::max(universe(), other.universe()));
  for (std::size_t i = 0; i < out.bits_.size(); ++i)
    out.bits_[i] = contains(static_cast<Index>(i)) || other.contains(static_cast<Index>(i));
  return out;
}

std::string to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::NotSquare: return "NotSquare";
    case AxiomKind::IndexOutOfRange: return "IndexOutOfRange";
    case AxiomKind::NotCommutative: return "NotCommutative";
    case AxiomKind::NotIdempotent: return "NotIdempotent";
    case AxiomKind::NotAssociative: return "NotAssociative";
  }
  return "Unknown";
}

Semilattice Semilattice::from_trusted(std::size_t n, std::vector<Index> flat, std::vector<std::string> labels) {
  if (flat.size() != n * n) throw StructureMismatch("flat table has wrong size");
  if (!labels.empty() && labels.size() != n) throw StructureMismatch("label count differs from element count");
  return Semilattice(n, std::move(flat), std::move(labels));
}

Semilattice Semilattice::validate(const Table& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw AxiomViolation(AxiomKind::NotSquare, {}, "table is empty");
  if (n > kMaxDenseElements) throw CapExceeded("table exceeds the dense element cap");
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw AxiomViolation(AxiomKind::NotSquare, {static_cast<Index>(i)},
                           "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw AxiomViolation(AxiomKind::IndexOutOfRange, {static_cast<Index>(i), static_cast<Index>(j)},
                             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      flat.push_back(table[i][j]);
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return flat[i * n + j]; };
  for (Index i = 0; i < n; ++i)
    if (at(i, i) != i)
      throw AxiomViolation(AxiomKind::NotIdempotent, {i}, "element " + std::to_string(i) + " is not idempotent");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i))
        throw AxiomViolation(AxiomKind::NotCommutative, {i, j},
                             "elements " + std::to_string(i) + "," + std::to_string(j) + " do not commute");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          throw AxiomViolation(AxiomKind::NotAssociative, {i, j, k},
                               "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
  if (!labels.empty() && labels.size() != n) throw StructureMismatch("label count differs from element count");
  return Semilattice(n, std::move(flat), std::move(labels));
}

Semilattice::Table Semilattice::table() const {
  Table t(n_, std::vector<Index>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = table_[i * n_ + j];
  return t;
}

Index Semilattice::product_of(const ElementSet& e) const {
  auto members = e.members();
  if (members.empty()) throw PreconditionViolated("product of an empty set");
  Index acc = members.front();
  for (Index m : members) acc = product(acc, m);
  return acc;
}

FreeSemilattice free_semilattice(unsigned k) {
  if (k < 1 || k > 12) throw PreconditionViolated("free semilattice generator count must be in [1, 12]");
  const std::size_t n = (std::size_t{1} << k) - 1;
  std::vector<Index> flat(n * n);
  std::vector<std::string> labels(n);
  FreeSemilattice out{Semilattice::from_trusted(1, {0}), k, std::vector<unsigned>(n), static_cast<Index>(n - 1)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto mask = static_cast<std::uint32_t>(i + 1);
    out.length[i] = static_cast<unsigned>(std::popcount(mask));
    std::string label = "{";
    for (unsigned g = 0; g < k; ++g)
      if (mask & (1u << g)) label += (label.size() > 1 ? "," : "") + std::to_string(g + 1);
    labels[i] = label + "}";
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = ((i + 1) | (j + 1)) - 1;
  }
  out.lattice = Semilattice::from_trusted(n, std::move(flat), std::move(labels));
  return out;
}

Semilattice nmin(std::size_t M) {
  if (M < 1) throw PreconditionViolated("N_min truncation must be at least 1");
  if (M > kMaxDenseElements) throw CapExceeded("N_min truncation exceeds the dense element cap");
  std::vector<Index> flat(M * M);
  std::vector<std::string> labels(M);
  for (std::size_t i = 0; i < M; ++i) {
    labels[i] = std::to_string(i + 1);
    for (std::size_t j = 0; j < M; ++j) flat[i * M + j] = static_cast<Index>(std::min(i, j));
  }
  return Semilattice::from_trusted(M, std::move(flat), std::move(labels));
}

OrthogonalSum orthogonal_direct_sum(std::span<const Semilattice> blocks) {
  if (blocks.empty()) throw PreconditionViolated("orthogonal direct sum needs at least one block");
  std::size_t n = 1;
  for (const auto& b : blocks) n += b.size();
  if (n > kMaxDenseElements) throw CapExceeded("orthogonal direct sum exceeds the dense element cap");

  OrthogonalSum out{Semilattice::from_trusted(1, {0}), 0, {}, std::vector<int>(n, -1)};
  std::vector<std::string> labels(n);
  labels[0] = "θ";
  Index next = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Index> globals;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      globals.push_back(next);
      out.block_of[next] = static_cast<int>(b);
      const auto& local = blocks[b].labels();
      labels[next] = "b" + std::to_string(b) + ":" + (local.empty() ? std::to_string(i) : local[i]);
      ++next;
    }
    out.block_elements.push_back(std::move(globals));
  }
  std::vector<Index> flat(n * n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& g = out.block_elements[b];
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        flat[static_cast<std::size_t>(g[i]) * n + g[j]] = g[blocks[b].product(static_cast<Index>(i), static_cast<Index>(j))];
  }
  out.lattice = Semilattice::from_trusted(n, std::move(flat), std::move(labels));
  return out;
}

ElementSet generated(const Semilattice& s, const ElementSet& e, std::optional<std::size_t> depth) {
  if (e.universe() != s.size()) throw StructureMismatch("element set universe differs from semilattice size");
  const auto gens = e.members();
  if (gens.empty()) throw PreconditionViolated("generating set must be nonempty");
  if (depth && *depth == 0) throw PreconditionViolated("depth must be at least 1");

  ElementSet current = e;
  std::vector<Index> frontier = gens;
  for (std::size_t k = 1; !depth || k < *depth; ++k) {
    // ⟨E⟩_{k+1} = ⟨E⟩_k ∪ ⟨E⟩_k · E; only products involving new elements can be new.
    std::vector<Index> fresh;
    for (Index x : frontier)
      for (Index g : gens) {
        Index p = s.product(x, g);
        if (!current.contains(p)) {
          current.insert(p);
          fresh.push_back(p);
        }
      }
    if (fresh.empty()) break;
    frontier = std::move(fresh);
  }
  return current;
}

namespace {

// Bitmask closure for small semilattices; n <= 32.
std::size_t local_breadth_mask(const Semilattice& s, std::uint32_t e_mask) {
  std::uint32_t current = e_mask;
  std::uint32_t frontier = e_mask;
  std::size_t k = 1;
  while (true) {
    std::uint32_t fresh = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      Index x = static_cast<Index>(std::countr_zero(f));
      for (std::uint32_t g = e_mask; g; g &= g - 1) {
        Index p = s.product(x, static_cast<Index>(std::countr_zero(g)));
        fresh |= (std::uint32_t{1} << p);
      }
    }
    fresh &= ~current;
    if (!fresh) return k;
    current |= fresh;
    frontier = fresh;
    ++k;
  }
}

}  // namespace

std::size_t local_breadth(const Semilattice& s, const ElementSet& e) {
  if (e.empty()) throw PreconditionViolated("generating set must be nonempty");
  if (s.size() <= 32) {
    std::uint32_t mask = 0;
    for (Index i : e.members()) mask |= std::uint32_t{1} << i;
    return local_breadth_mask(s, mask);
  }
  ElementSet previous = e;
  for (std::size_t k = 1;; ++k) {
    ElementSet next = generated(s, e, k + 1);
    if (next == previous) return k;
    previous = std::move(next);
  }
}

std::size_t breadth(const Semilattice& s) {
  const std::size_t n = s.size();
  if (n > kMaxExhaustiveBreadth)
    throw CapExceeded("exhaustive breadth is capped at " + std::to_string(kMaxExhaustiveBreadth) +
                      " elements; use breadth_sampled");
  std::size_t best = 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) best = std::max(best, local_breadth_mask(s, mask));
  return best;
}

std::size_t breadth_sampled(const Semilattice& s, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = s.size();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::size_t best = local_breadth(s, ElementSet::full(n));
  for (std::size_t t = 0; t < samples; ++t) {
    ElementSet e(n);
    for (Index i = 0; i < n; ++i)
      if (coin(rng)) e.insert(i);
    if (e.empty()) continue;
    best = std::max(best, local_breadth(s, e));
  }
  return best;
}

std::size_t width(const Semilattice& s) { return max_antichain(Poset::of(s)).size(); }

std::size_t height(const Semilattice& s) { return longest_chain(Poset::of(s)).size(); }

}  // namespace amnm
