#include "amnm/counterexamples.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "amnm/oracle.hpp"

namespace amnm {

namespace {

std::string text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
std::string text(const Rational& x) { return to_string(x); }
std::string text(std::size_t x) { return std::to_string(x); }

template <class Real>
Real power(const Real& base, unsigned k) {
  Real out(1);
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

template <class Real>
Real reciprocal(const Real& x) {
  return Real(Real(1) / x);
}

template <class Real>
typename Codomain<Real>::M2 matrix(const Real& a, const Real& b, const Real& c, const Real& d) {
  typename Codomain<Real>::M2 m;
  using S = typename Codomain<Real>::M2::Scalar;
  m << S(a), S(b), S(c), S(d);
  return m;
}

}  // namespace

template <class Real>
PsiFamily<Real> psi_n_family(const Real& C, const std::vector<unsigned>& block_sizes) {
  using Scalar = typename Codomain<Real>::Scalar;
  if (!(C > Real(1))) throw PreconditionViolated("psi_n_family needs C > 1");
  std::size_t total = 1;
  for (unsigned k : block_sizes) {
    if (k < 2) throw PreconditionViolated("block sizes must be at least 2");
    if (k > 12) throw CapExceeded("block size above 12 exceeds the dense table cap");
    total += (std::size_t{1} << k) - 1;
  }
  if (total > kMaxDenseElements) throw CapExceeded("orthogonal sum exceeds the dense table cap");

  PsiFamily<Real> out;
  std::vector<Semilattice> lattices;
  for (unsigned k : block_sizes) {
    out.blocks.push_back(free_semilattice(k));
    lattices.push_back(out.blocks.back().lattice);
  }
  out.sum = orthogonal_direct_sum(lattices);
  out.weight = counterexample_weight<Real>(out.sum, out.blocks, C);
  const Semilattice& s = out.sum.lattice;
  const auto multiplicative = enumerate_mult_scalar<Scalar>(s);

  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    AlgebraMap<Scalar> psi(s.size(), Scalar(0));
    for (Index x : out.sum.block_elements[b]) psi[x] = Scalar(1);
    psi[out.sum.block_elements[b][out.blocks[b].zero]] = Scalar(0);

    CounterexampleReport<Real> rep;
    rep.family = "psi_n";
    rep.parameters = {{"C", text(C)}, {"block", text(b + 1)}, {"block_size", text(std::size_t{block_sizes[b]})}};
    rep.defect = defect(s, out.weight, psi, Norm::Abs).defect;
    rep.closed_form = reciprocal(power(C, block_sizes[b]));
    rep.defect_matches = rep.defect <= rep.closed_form;
    rep.distance_found = Real(-1);
    for (const auto& m : multiplicative) {
      const Real d = weighted_sup_distance(out.weight, psi, m, Norm::Abs);
      if (rep.distance_found < Real(0) || d < rep.distance_found) rep.distance_found = d;
    }
    rep.distance_lower_bound = rep.distance_found;
    rep.method = "exhaustive";
    out.maps.push_back(std::move(psi));
    out.reports.push_back(std::move(rep));
  }
  return out;
}

template <class Real>
T2Counterexample<Real> theta_m_T2(const Weight<Real>& weight, std::size_t m) {
  using Scalar = typename Codomain<Real>::Scalar;
  using T2 = typename Codomain<Real>::T2;
  const std::size_t M = weight.size();
  if (m < 1 || m > M) throw PreconditionViolated("theta_m_T2 needs 1 <= m <= M");
  T2Counterexample<Real> out;
  out.lattice = nmin(M);
  const Real wm = weight[m - 1];

  out.theta.resize(M);
  out.referee.resize(M);
  for (std::size_t k = 1; k <= M; ++k) {
    const Real chi_m(k >= m ? 1 : 0);
    const Real chi_next(k >= m + 1 ? 1 : 0);
    const Real off(k == m ? wm : Real(0));
    out.theta[k - 1] = T2{Scalar(chi_m), Scalar(off)};
    out.referee[k - 1] = matrix<Real>(chi_m, off, Real(0), chi_next);
  }

  auto& rep = out.report;
  rep.family = "theta_m_T2";
  rep.parameters = {{"M", text(M)}, {"m", text(m)}, {"omega_m", text(wm)}};
  rep.defect = defect(out.lattice, weight, out.theta, Norm::T2).defect;
  rep.closed_form = reciprocal(wm);
  rep.defect_matches = rep.defect == rep.closed_form;
  rep.distance_found = Real(-1);
  for (const auto& phi : enumerate_mult_T2<Scalar>(out.lattice)) {
    const Real d = weighted_sup_distance(weight, out.theta, phi, Norm::T2);
    if (rep.distance_found < Real(0) || d < rep.distance_found) rep.distance_found = d;
  }
  rep.distance_lower_bound = rep.distance_found;
  rep.method = "exhaustive";

  AlgebraMap<typename Codomain<Real>::M2> as_matrix(M);
  for (std::size_t k = 0; k < M; ++k) as_matrix[k] = out.theta[k].to_matrix();
  out.referee_defect = defect(out.lattice, weight, out.referee, Norm::Op).defect;
  out.referee_distance = weighted_sup_distance(weight, as_matrix, out.referee, Norm::Op);
  return out;
}

template <class Real>
M2Counterexample<Real> theta_M2(const Weight<Real>& weight, const Real& delta) {
  const std::size_t M = weight.size();
  if (!(delta > Real(0))) throw PreconditionViolated("theta_M2 needs delta > 0");
  const Real threshold = Real(2) / delta;
  std::size_t n = 0;
  for (std::size_t k = 1; k + 1 <= M && n == 0; ++k)
    if (weight[k - 1] >= threshold && weight[k] >= threshold) n = k;
  if (n == 0) throw NoEligibleIndex("no n with min(w(n), w(n+1)) >= 2/delta");

  M2Counterexample<Real> out;
  out.lattice = nmin(M);
  out.n = n;
  const Real wn = weight[n - 1], wn1 = weight[n];
  out.theta.resize(M);
  for (std::size_t k = 1; k <= M; ++k) {
    if (k < n) out.theta[k - 1] = matrix<Real>(Real(0), Real(0), Real(0), Real(0));
    else if (k == n) out.theta[k - 1] = matrix<Real>(Real(1), Real(-wn), Real(0), Real(0));
    else if (k == n + 1) out.theta[k - 1] = matrix<Real>(Real(1), wn1, Real(0), Real(0));
    else out.theta[k - 1] = matrix<Real>(Real(1), Real(0), Real(0), Real(1));
  }

  auto& rep = out.report;
  rep.family = "theta_M2";
  rep.parameters = {{"M", text(M)}, {"delta", text(delta)}, {"n", text(n)}, {"omega_n", text(wn)},
                    {"omega_n1", text(wn1)}};
  rep.defect = defect(out.lattice, weight, out.theta, Norm::Op).defect;
  rep.closed_form = reciprocal(wn) + reciprocal(wn1);
  rep.defect_matches = rep.defect == rep.closed_form && rep.defect <= delta;
  rep.distance_lower_bound = Real(1) / Real(2);
  rep.distance_found = Real(-1);
  rep.method = "analytic-lemma";
  return out;
}

M2NonUniformCounterexample theta_M2_nonunif(const Weight<double>& weight, double delta) {
  const std::size_t M = weight.size();
  if (!(delta > 0)) throw PreconditionViolated("theta_M2_nonunif needs delta > 0");
  if (M < 2) throw NoEligibleIndex("truncation too short for a consecutive pair");
  double C = 0;
  for (std::size_t k = 1; k + 1 <= M; ++k) C = std::max(C, std::min(weight[k - 1], weight[k]));
  std::size_t n = 0;
  for (std::size_t k = 1; k + 1 <= M && n == 0; ++k)
    if (weight[k - 1] >= std::max(6.0 / delta, 2.0 * C) && weight[k] <= C) n = k;
  if (n == 0) throw NoEligibleIndex("no n with w(n) >= max(6/delta, 2C) and w(n+1) <= C");

  M2NonUniformCounterexample out;
  out.lattice = nmin(M);
  out.n = n;
  out.C = C;
  const double wn = weight[n - 1], wn1 = weight[n];
  Mat2 top;
  top << 1.0, wn, 0.0, 0.0;
  out.theta.resize(M);
  for (std::size_t k = 1; k <= M; ++k) {
    if (k < n) out.theta[k - 1] = Mat2::Zero();
    else if (k == n) out.theta[k - 1] = 2.0 * top;
    else if (k == n + 1) out.theta[k - 1] = top;
    else out.theta[k - 1] = Mat2::Identity();
  }

  Matrix2<Rational> exact_top;
  exact_top << Rational(1), Rational(wn), Rational(0), Rational(0);
  const Matrix2<Rational> exact_n = Rational(2) * exact_top;
  const Matrix2<Rational> lhs = exact_n * exact_n - exact_n;
  const Matrix2<Rational> rhs = Rational(2) * exact_top;
  out.exact_identity = lhs == rhs;

  const double top_norm = op_norm(top);
  out.stated_bound = 3.0 * top_norm / (wn * wn);
  for (std::size_t k = 0; k < M; ++k) out.weighted_norm = std::max(out.weighted_norm, op_norm(out.theta[k]) / weight[k]);
  out.weighted_norm_bound = 2.0 * wn / wn1;

  auto& rep = out.report;
  rep.family = "theta_M2_nonunif";
  rep.parameters = {{"M", text(M)}, {"delta", text(delta)}, {"n", text(n)}, {"C", text(C)}, {"omega_n", text(wn)},
                    {"omega_n1", text(wn1)}};
  rep.defect = defect(out.lattice, weight, out.theta, Norm::Op).defect;
  rep.closed_form = 2.0 * top_norm / (wn * wn);
  rep.defect_matches = std::abs(rep.defect - rep.closed_form) <= tolerance::kRoundTrip * rep.closed_form &&
                       rep.defect <= out.stated_bound && out.stated_bound <= 6.0 / wn + tolerance::kRoundTrip &&
                       rep.defect <= delta;
  rep.distance_lower_bound = 0.5;
  rep.distance_found = -1;
  rep.method = "analytic-lemma";
  return out;
}

double optimizer_distance(const Semilattice& s, const Weight<double>& weight, const M2Map& theta, std::size_t starts,
                          std::uint64_t seed) {
  return nearest_mult_M2(s, weight, theta, Norm::Op, starts, seed).distance;
}

template PsiFamily<double> psi_n_family(const double&, const std::vector<unsigned>&);
template PsiFamily<Rational> psi_n_family(const Rational&, const std::vector<unsigned>&);
template T2Counterexample<double> theta_m_T2(const Weight<double>&, std::size_t);
template T2Counterexample<Rational> theta_m_T2(const Weight<Rational>&, std::size_t);
template M2Counterexample<double> theta_M2(const Weight<double>&, const double&);
template M2Counterexample<Rational> theta_M2(const Weight<Rational>&, const Rational&);

}  // namespace amnm
