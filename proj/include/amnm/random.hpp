#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "amnm/algebra.hpp"
#include "amnm/order.hpp"
#include "amnm/weights.hpp"

namespace amnm {

using Rng = std::mt19937_64;

/// A random semilattice realized as a union-closed family of subsets of a
/// small ground set; `masks[i]` is the subset for element i.
struct RandomSemilattice {
  Semilattice lattice;
  std::vector<std::uint32_t> masks;
  unsigned ground = 0;
};

/// Between 1 and max_size elements (max_size <= 63), randomly relabeled.
RandomSemilattice random_semilattice(Rng& rng, std::size_t max_size);

/// ω(x) = Π_{i ∈ A_x} c_i with c_i a random multiple of 1/16 in [1, c_max],
/// c_max <= 8, so all products are exact; submultiplicative
/// because A_{xy} = A_x ∪ A_y.
Weight<double> random_product_weight(Rng& rng, const RandomSemilattice& rs, double c_max);

/// Random partial order on n points: a random DAG on a shuffled linear
/// extension, transitively closed.
Poset random_poset(Rng& rng, std::size_t n, double edge_probability);

Complex random_complex(Rng& rng, double radius);

/// Random rank-one idempotent v wᴴ / (wᴴ v) with ‖P‖_HS <= max_norm.
Mat2 random_rank1_idempotent(Rng& rng, double max_norm);

/// Random 2×2 matrix with ‖E‖_HS = size.
Mat2 random_perturbation(Rng& rng, double size);

}  // namespace amnm
