#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amnm/errors.hpp"

namespace amnm {

using Index = std::uint32_t;

/// Largest element count for which a dense Cayley table is materialized.
inline constexpr std::size_t kMaxDenseElements = 4096;

/// Subset of {0, ..., universe-1} with bitset semantics.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}

  static ElementSet from_indices(std::size_t universe, std::span<const Index> members);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(Index i) const { return i < bits_.size() && bits_[i]; }
  void insert(Index i) { bits_.at(i) = true; }
  void erase(Index i) { bits_.at(i) = false; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const ElementSet& other) const;
  std::vector<Index> members() const;

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  bool operator==(const ElementSet& other) const = default;

 private:
  std::vector<bool> bits_;
};

enum class AxiomKind { NotSquare, IndexOutOfRange, NotCommutative, NotIdempotent, NotAssociative };

/// The supplied Cayley table violates a semilattice axiom. `witness` holds
/// the offending indices (one, two or three of them depending on the axiom).
class AxiomViolation : public Error {
 public:
  AxiomViolation(AxiomKind kind, std::vector<Index> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  AxiomKind kind() const { return kind_; }
  const std::vector<Index>& witness() const { return witness_; }

 private:
  AxiomKind kind_;
  std::vector<Index> witness_;
};

std::string to_string(AxiomKind kind);

/// A finite semilattice given by its Cayley table over dense indices.
///
/// Instances are immutable. The only public way to obtain one from raw data
/// is `validate`, which checks commutativity, idempotency and associativity.
/// The builders below construct tables that satisfy the axioms by design.
class Semilattice {
 public:
  using Table = std::vector<std::vector<Index>>;

  /// Empty semilattice, for default-constructed aggregates.
  Semilattice() = default;

  static Semilattice validate(const Table& table, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  Index product(Index i, Index j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  Index operator()(Index i, Index j) const { return product(i, j); }

  /// The derived order: x ⪯ y iff xy = x.
  bool leq(Index x, Index y) const { return product(x, y) == x; }

  const std::vector<std::string>& labels() const { return labels_; }
  Table table() const;

  /// Product of all members of a nonempty set.
  Index product_of(const ElementSet& e) const;

  /// Builds from a flat row-major table without checking the axioms.
  static Semilattice from_trusted(std::size_t n, std::vector<Index> flat,
                                  std::vector<std::string> labels = {});

 private:
  Semilattice(std::size_t n, std::vector<Index> flat, std::vector<std::string> labels)
      : n_(n), table_(std::move(flat)), labels_(std::move(labels)) {}

  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
};

/// Free semilattice on k generators: nonempty subsets of {1..k} under union.
/// Element i corresponds to the subset with bitmask i+1.
struct FreeSemilattice {
  Semilattice lattice;
  unsigned generators = 0;
  std::vector<unsigned> length;  // γ: subset cardinality
  Index zero = 0;                // θ: the full subset

  Index generator(unsigned g) const { return (Index{1} << g) - 1; }
  static std::uint32_t mask_of(Index element) { return element + 1; }
};

/// 1 <= k <= 12 (dense tables are capped at kMaxDenseElements).
FreeSemilattice free_semilattice(unsigned k);

/// N_min truncated to {1..M}; element i is the number i+1, product is min.
Semilattice nmin(std::size_t M);

/// Orthogonal direct sum with an adjoined absorbing zero θ at index 0.
struct OrthogonalSum {
  Semilattice lattice;
  Index zero = 0;
  std::vector<std::vector<Index>> block_elements;  // [block][local] -> global
  std::vector<int> block_of;                       // global -> block, -1 for θ
};

OrthogonalSum orthogonal_direct_sum(std::span<const Semilattice> blocks);

/// ⟨E⟩_depth (products of at most `depth` factors from E), or ⟨E⟩ when depth
/// is nullopt. Products of exactly n factors give the same set because every
/// element is idempotent, so factors can be repeated freely.
ElementSet generated(const Semilattice& s, const ElementSet& e,
                     std::optional<std::size_t> depth = std::nullopt);

/// Least n with ⟨E⟩_n = ⟨E⟩.
std::size_t local_breadth(const Semilattice& s, const ElementSet& e);

inline constexpr std::size_t kMaxExhaustiveBreadth = 20;

/// Exhaustive breadth: max of local_breadth over all nonempty subsets.
/// Throws CapExceeded when size() > kMaxExhaustiveBreadth.
std::size_t breadth(const Semilattice& s);

/// Lower bound on the breadth from `samples` random subsets (always includes
/// the full set). Used when the exhaustive mode is capped.
std::size_t breadth_sampled(const Semilattice& s, std::size_t samples, std::uint64_t seed);

/// Maximum antichain size of the derived order.
std::size_t width(const Semilattice& s);

/// Largest chain cardinality of the derived order.
std::size_t height(const Semilattice& s);

}  // namespace amnm
