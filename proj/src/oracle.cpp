#include "amnm/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "amnm/parallel.hpp"

namespace amnm {

bool satisfies_T2_constraints(const Semilattice& s, const T2Map& map, double tol) {
  for (Index e = 0; e < s.size(); ++e)
    for (Index f = 0; f < s.size(); ++f) {
      const T2Element& x = map[e];
      const T2Element& y = map[f];
      const T2Element& z = map[s(e, f)];
      if (std::abs(x.a * y.a - z.a) > tol) return false;
      if (std::abs(x.a * y.b + x.b * y.a - z.b) > tol) return false;
    }
  return true;
}

M2Map MultiplicativeFamilyM2::evaluate(const Semilattice& s) const {
  const Mat2 I = Mat2::Identity();
  M2Map out(s.size(), Mat2::Zero());
  for (Index x = 0; x < s.size(); ++x) {
    if (f1 && s.leq(*f1, x)) out[x] += P;
    if (f2 && s.leq(*f2, x)) out[x] += I - P;
  }
  return out;
}

namespace {

constexpr std::size_t kDim = 8;
using Point = std::array<double, kDim>;

struct NelderMeadResult {
  Point x;
  double value;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, const Point& start, double step, double tol, std::size_t max_iter) {
  std::array<Point, kDim + 1> simplex;
  std::array<double, kDim + 1> values;
  simplex[0] = start;
  for (std::size_t i = 0; i < kDim; ++i) {
    simplex[i + 1] = start;
    simplex[i + 1][i] += step * std::max(1.0, std::abs(start[i]));
  }
  for (std::size_t i = 0; i <= kDim; ++i) values[i] = f(simplex[i]);

  auto blend = [](const Point& a, const Point& b, double t) {
    Point out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  std::array<std::size_t, kDim + 1> order;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i <= kDim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[kDim - 1];
    if (values[worst] - values[best] <= tol) break;

    Point centroid{};
    for (std::size_t i = 0; i <= kDim; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < kDim; ++k) centroid[k] += simplex[i][k] / kDim;

    const Point reflected = blend(centroid, simplex[worst], -1.0);
    const double fr = f(reflected);
    if (fr < values[best]) {
      const Point expanded = blend(centroid, simplex[worst], -2.0);
      const double fe = f(expanded);
      if (fe < fr) simplex[worst] = expanded, values[worst] = fe;
      else simplex[worst] = reflected, values[worst] = fr;
    } else if (fr < values[second]) {
      simplex[worst] = reflected, values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const Point contracted = blend(centroid, outside ? reflected : simplex[worst], 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted, values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= kDim; ++i)
          if (i != best) {
            simplex[i] = blend(simplex[best], simplex[i], 0.5);
            values[i] = f(simplex[i]);
          }
      }
    }
  }
  const std::size_t best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best]};
}

// P(u, v) = v uᴴ / (uᴴ v); nullopt when u and v are nearly orthogonal.
std::optional<Mat2> projector_of(const Point& p) {
  const Eigen::Vector2cd u(Complex(p[0], p[1]), Complex(p[2], p[3]));
  const Eigen::Vector2cd v(Complex(p[4], p[5]), Complex(p[6], p[7]));
  const Complex overlap = u.adjoint() * v;
  if (!(std::abs(overlap) > 1e-12 * u.norm() * v.norm())) return std::nullopt;
  return Mat2(v * u.adjoint() / overlap);
}

Point point_of(const Mat2& P) {
  Eigen::Index col = P.col(0).norm() >= P.col(1).norm() ? 0 : 1;
  Eigen::Index row = P.row(0).norm() >= P.row(1).norm() ? 0 : 1;
  const Eigen::Vector2cd v = P.col(col);
  const Eigen::Vector2cd u = P.row(row).adjoint();
  return {u(0).real(), u(0).imag(), u(1).real(), u(1).imag(), v(0).real(), v(0).imag(), v(1).real(), v(1).imag()};
}

// Spectral projector of A for the eigenvalue closest to 1.
std::optional<Mat2> spectral_projector(const Mat2& a) {
  Eigen::ComplexEigenSolver<Mat2> solver(a);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const Mat2 V = solver.eigenvectors();
  if (std::abs(V.determinant()) < 1e-10) return std::nullopt;
  const auto& lambda = solver.eigenvalues();
  const int k = std::abs(lambda(0) - 1.0) <= std::abs(lambda(1) - 1.0) ? 0 : 1;
  Mat2 D = Mat2::Zero();
  D(k, k) = 1.0;
  return Mat2(V * D * V.inverse());
}

struct CellProblem {
  std::vector<Index> on_p;  // elements whose value is P
  std::vector<Index> on_q;  // elements whose value is I − P
  double lower_bound = 0;
};

}  // namespace

OracleResult nearest_mult_M2(const Semilattice& s, const Weight<double>& weight, const M2Map& theta, Norm norm,
                             std::size_t starts, std::uint64_t seed) {
  if (starts < 1) throw PreconditionViolated("nearest_mult_M2 needs at least one start");
  if (theta.size() != s.size() || weight.size() != s.size())
    throw StructureMismatch("map and weight must match the semilattice");
  const std::size_t n = s.size();
  const Mat2 I = Mat2::Identity();

  std::vector<std::optional<Index>> options{std::nullopt};
  for (Index m = 0; m < n; ++m) options.push_back(m);
  auto member = [&](const std::optional<Index>& f, Index x) { return f && s.leq(*f, x); };

  OracleResult result;
  result.norm = norm;
  result.starts = starts;
  std::vector<CellProblem> problems;
  for (std::size_t a = 0; a < options.size(); ++a)
    for (std::size_t b = a; b < options.size(); ++b) {
      OracleCell cell{options[a], options[b]};
      CellProblem prob;
      for (Index x = 0; x < n; ++x) {
        const bool in1 = member(cell.f1, x), in2 = member(cell.f2, x);
        if (in1 == in2) {
          const Mat2 fixed = in1 ? I : Mat2::Zero();
          prob.lower_bound = std::max(prob.lower_bound, norm_of(Mat2(theta[x] - fixed), norm) / weight[x]);
        } else {
          (in1 ? prob.on_p : prob.on_q).push_back(x);
        }
      }
      cell.lower_bound = cell.best = prob.lower_bound;
      result.cells.push_back(cell);
      problems.push_back(std::move(prob));
    }

  double free_best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < problems.size(); ++c)
    if (problems[c].on_p.empty() && problems[c].on_q.empty()) free_best = std::min(free_best, problems[c].lower_bound);

  std::vector<std::size_t> active;
  for (std::size_t c = 0; c < problems.size(); ++c) {
    if (problems[c].on_p.empty() && problems[c].on_q.empty()) continue;
    if (problems[c].lower_bound >= free_best) result.cells[c].pruned = true;
    else active.push_back(c);
  }

  std::vector<Mat2> best_P(problems.size(), Mat2::Zero());
  for (std::size_t c = 0; c < problems.size(); ++c) best_P[c](0, 0) = 1.0;

  parallel_for(active.size(), [&](std::size_t k) {
    const std::size_t c = active[k];
    const CellProblem& prob = problems[c];
    auto objective = [&](const Point& p) {
      const auto P = projector_of(p);
      if (!P) return std::numeric_limits<double>::max();
      double worst = prob.lower_bound;
      for (Index x : prob.on_p) worst = std::max(worst, norm_of(Mat2(theta[x] - *P), norm) / weight[x]);
      for (Index x : prob.on_q) worst = std::max(worst, norm_of(Mat2(theta[x] - (I - *P)), norm) / weight[x]);
      return worst;
    };

    std::vector<Mat2> guided;
    Mat2 average = Mat2::Zero();
    for (Index x : prob.on_p) average += theta[x];
    for (Index x : prob.on_q) average += I - theta[x];
    average /= static_cast<double>(prob.on_p.size() + prob.on_q.size());
    if (auto P = spectral_projector(average)) guided.push_back(*P);
    for (Index x : prob.on_p)
      if (auto P = spectral_projector(theta[x])) guided.push_back(*P);
    for (Index x : prob.on_q)
      if (auto P = spectral_projector(Mat2(I - theta[x]))) guided.push_back(*P);

    double best = std::numeric_limits<double>::infinity();
    Mat2 argbest = best_P[c];
    for (std::size_t st = 0; st < starts; ++st) {
      Point start;
      if (st < guided.size()) {
        start = point_of(guided[st]);
      } else {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(st)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> g;
        for (auto& v : start) v = g(rng);
      }
      NelderMeadResult run = nelder_mead(objective, start, 0.1, 1e-10, 500);
      run = nelder_mead(objective, run.x, 0.01, 1e-10, 500);
      if (run.value < best) {
        best = run.value;
        argbest = *projector_of(run.x);
      }
    }
    result.cells[c].best = best;
    best_P[c] = argbest;
  });

  std::size_t winner = 0;
  for (std::size_t c = 1; c < result.cells.size(); ++c)
    if (!result.cells[c].pruned && result.cells[c].best < result.cells[winner].best) winner = c;
  result.family = {result.cells[winner].f1, result.cells[winner].f2, best_P[winner]};
  result.map = result.family.evaluate(s);
  result.distance = weighted_sup_distance(weight, theta, result.map, norm);
  return result;
}

std::vector<std::pair<Mat2, Mat2>> sample_commuting_idempotents(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  const Mat2 I = Mat2::Identity();
  auto rank1 = [&] {
    for (;;) {
      const Eigen::Vector2cd v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
      const Eigen::Vector2cd w(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
      const Complex overlap = w.adjoint() * v;
      if (std::abs(overlap) < 0.2 * v.norm() * w.norm()) continue;
      return Mat2(v * w.adjoint() / overlap);
    }
  };
  auto scalar = [&] { return rng() % 2 ? I : Mat2(Mat2::Zero()); };
  std::vector<std::pair<Mat2, Mat2>> out;
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out.emplace_back(scalar(), scalar()); break;
      case 1: { const Mat2 P = rank1(); out.emplace_back(P, P); break; }
      case 2: { const Mat2 P = rank1(); out.emplace_back(P, I - P); break; }
      default: {
        const Mat2 P = rank1();
        if (rng() % 2) out.emplace_back(P, scalar());
        else out.emplace_back(scalar(), P);
      }
    }
  }
  return out;
}

std::vector<std::pair<Matrix2<Rational>, Matrix2<Rational>>> sample_commuting_idempotents_exact(std::size_t count,
                                                                                               std::uint64_t seed) {
  using RM = Matrix2<Rational>;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const RM I = RM::Identity();
  const RM Z = RM::Zero();
  auto rank1 = [&] {
    for (;;) {
      Eigen::Matrix<Rational, 2, 1> v, w;
      v << Rational(coeff(rng)), Rational(coeff(rng));
      w << Rational(coeff(rng)), Rational(coeff(rng));
      const Rational overlap = w(0) * v(0) + w(1) * v(1);
      if (overlap == 0) continue;
      RM P = v * w.transpose();
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) P(r, c) /= overlap;
      return P;
    }
  };
  auto scalar = [&] { return rng() % 2 ? I : Z; };
  std::vector<std::pair<RM, RM>> out;
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out.emplace_back(scalar(), scalar()); break;
      case 1: { const RM P = rank1(); out.emplace_back(P, P); break; }
      case 2: { const RM P = rank1(); out.emplace_back(P, RM(I - P)); break; }
      default: {
        const RM P = rank1();
        if (rng() % 2) out.emplace_back(P, scalar());
        else out.emplace_back(scalar(), P);
      }
    }
  }
  return out;
}

std::vector<ElementSet> brute_force_filters(const Semilattice& s) {
  const std::size_t n = s.size();
  if (n > 20) throw CapExceeded("brute_force_filters is limited to 20 elements");
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet e(n);
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1u) e.insert(i);
    if (is_filter(s, e)) out.push_back(std::move(e));
  }
  return out;
}

std::size_t brute_force_max_antichain(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw CapExceeded("brute_force_max_antichain is limited to 20 elements");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i)
      for (Index j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && p.comparable(i, j)) ok = false;
    if (ok) best = size;
  }
  return best;
}

CompletenessReport classification_completeness(const Semilattice& s, const Mat2& P) {
  const std::size_t n = s.size();
  if (n > 6) throw CapExceeded("classification_completeness is limited to 6 elements");
  const Mat2 I = Mat2::Identity();
  const std::array<Mat2, 4> values{Mat2::Zero(), P, I - P, I};
  CompletenessReport out;
  std::vector<int> code(n, 0);
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t a = 0; a < total; ++a) {
    ElementSet f1(n), f2(n);
    M2Map map(n);
    for (Index x = 0; x < n; ++x) {
      code[x] = static_cast<int>(a >> (2 * x) & 3u);
      map[x] = values[code[x]];
      if (code[x] & 1) f1.insert(x);
      if (code[x] & 2) f2.insert(x);
    }
    const double scale = std::max(1.0, P.squaredNorm());
    const bool mult = defect(s, map, Norm::HS).defect <= tolerance::kStructural * scale;
    const bool repr = (f1.empty() || is_filter(s, f1)) && (f2.empty() || is_filter(s, f2));
    ++out.assignments;
    out.multiplicative += mult;
    out.representable += repr;
    out.mismatches += mult != repr;
  }
  return out;
}

}  // namespace amnm
