#include "amnm/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace amnm {

RandomSemilattice random_semilattice(Rng& rng, std::size_t max_size) {
  if (max_size < 1 || max_size > 63) throw std::invalid_argument("random_semilattice: max_size must be in [1, 63]");
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  unsigned ground = 1;
  while ((std::size_t{1} << ground) - 1 < target) ++ground;
  ground = std::min(6u, ground + static_cast<unsigned>(rng() % 2));

  std::vector<std::uint32_t> candidates((std::size_t{1} << ground) - 1);
  std::iota(candidates.begin(), candidates.end(), 1u);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  std::set<std::uint32_t> family;
  for (std::uint32_t c : candidates) {
    if (family.size() == target) break;
    if (family.count(c)) continue;
    std::set<std::uint32_t> grown = family;
    grown.insert(c);
    for (std::uint32_t f : family) grown.insert(c | f);
    if (grown.size() <= target) family = std::move(grown);
  }

  RandomSemilattice out;
  out.ground = ground;
  out.masks.assign(family.begin(), family.end());
  std::shuffle(out.masks.begin(), out.masks.end(), rng);
  const std::size_t n = out.masks.size();
  std::vector<Index> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = std::find(out.masks.begin(), out.masks.end(), out.masks[i] | out.masks[j]);
      flat[i * n + j] = static_cast<Index>(it - out.masks.begin());
    }
  out.lattice = Semilattice::from_trusted(n, std::move(flat));
  return out;
}

Weight<double> random_product_weight(Rng& rng, const RandomSemilattice& rs, double c_max) {
  // factors are multiples of 1/16 so every product over at most six of them is exact
  if (!(c_max >= 1.0 && c_max <= 8.0)) throw PreconditionViolated("random_product_weight needs 1 <= c_max <= 8");
  std::uniform_int_distribution<int> factor(16, static_cast<int>(16 * c_max));
  std::vector<double> c(rs.ground);
  for (auto& v : c) v = factor(rng) / 16.0;
  Weight<double> w(rs.masks.size(), 1.0);
  for (std::size_t x = 0; x < rs.masks.size(); ++x)
    for (unsigned i = 0; i < rs.ground; ++i)
      if (rs.masks[x] >> i & 1u) w[x] *= c[i];
  return w;
}

Poset random_poset(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(edge_probability);
  Poset p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) p.set_leq(order[i], order[j]);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq(i, k) && p.leq(k, j)) p.set_leq(i, j);
  return p;
}

Complex random_complex(Rng& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double phase = 2 * 3.14159265358979323846 * unit(rng);
  return std::polar(r, phase);
}

namespace {

Eigen::Vector2cd random_unit(Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector2cd v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  return v / v.norm();
}

}  // namespace

Mat2 random_rank1_idempotent(Rng& rng, double max_norm) {
  for (;;) {
    const Eigen::Vector2cd v = random_unit(rng);
    const Eigen::Vector2cd w = random_unit(rng);
    const Complex overlap = w.adjoint() * v;
    if (std::abs(overlap) * max_norm < 1.0) continue;
    return v * w.adjoint() / overlap;
  }
}

Mat2 random_perturbation(Rng& rng, double size) {
  std::normal_distribution<double> g;
  Mat2 e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e(i, j) = Complex(g(rng), g(rng));
  return e * (size / e.norm());
}

}  // namespace amnm
