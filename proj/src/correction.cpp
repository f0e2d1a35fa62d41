#include "amnm/correction.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace amnm {

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::S0: return "S0";
    case ElementClass::Sp: return "Sp";
    case ElementClass::Sq: return "Sq";
    case ElementClass::S2: return "S2";
  }
  return "?";
}

namespace {

constexpr double kSlack = tolerance::kStructural;

double hs(const Mat2& a) { return hs_norm(a); }

struct Checker {
  std::size_t count = 0;
  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok) throw ClassificationFailure(what);
  }
};

std::string pair_text(Index e, Index f) {
  std::ostringstream os;
  os << " at (" << e << ", " << f << ")";
  return os.str();
}

ElementSet scalar_support(const ScalarMap& psi) {
  ElementSet out(psi.size());
  for (Index x = 0; x < psi.size(); ++x)
    if (std::abs(psi[x] - 1.0) < 7.0 / 25.0) out.insert(x);
  return out;
}

}  // namespace

ScalarCertificate correct_scalar(const Semilattice& s, const ScalarMap& psi) {
  ScalarCertificate cert;
  cert.input = psi;
  cert.norm = Norm::Abs;
  cert.defect = defect(s, psi, Norm::Abs).defect;
  if (!(cert.defect < 0.2)) throw DefectTooLarge(cert.defect, 0.2, "scalar correction needs defect < 1/5");

  cert.support = scalar_support(psi);
  Checker check;
  check(cert.support.empty() || is_filter(s, cert.support), "S1 is neither empty nor a filter");
  cert.corrected = indicator<Complex>(cert.support);
  cert.corrected_defect = defect(s, cert.corrected, Norm::Abs).defect;
  check(cert.corrected_defect <= kSlack, "indicator of S1 is not multiplicative");
  cert.claimed_bound = 1.4 * cert.defect;
  cert.achieved_distance = sup_distance(psi, cert.corrected, Norm::Abs);
  check(cert.achieved_distance <= cert.claimed_bound + kSlack, "scalar distance exceeds 7/5 of the defect");
  return cert;
}

WeightedCertificate correct_weighted(const Semilattice& s, const Weight<double>& weight, const ScalarMap& psi,
                                     double epsilon) {
  if (!(epsilon > 0)) throw PreconditionViolated("epsilon must be positive");
  for (const auto& v : psi)
    if (v != Complex(0) && v != Complex(1)) throw PreconditionViolated("weighted correction needs a 0/1-valued map");

  WeightedCertificate cert;
  cert.input = psi;
  cert.norm = Norm::Abs;
  cert.epsilon = epsilon;
  cert.defect = defect(s, weight, psi, Norm::Abs).defect;
  const double K = 2.0 / epsilon;
  const FlightyConstant<double> flighty = flighty_constant(s, weight, K);
  cert.flighty = flighty.value;
  cert.ratio = 2.0 * cert.defect * cert.flighty / epsilon;
  if (cert.ratio >= 1.0) {
    std::ostringstream os;
    os << "2*delta*C(eps)/eps = " << cert.ratio << " >= 1 (delta " << cert.defect << ", C(eps) " << cert.flighty
       << ", eps " << epsilon << ")";
    throw PreconditionGap(cert.defect, cert.flighty, epsilon, cert.ratio, os.str());
  }

  cert.fixed = flighty.window;
  cert.seeds = ElementSet(s.size());
  for (Index y : cert.fixed.members())
    if (psi[y] == Complex(1)) cert.seeds.insert(y);

  Checker check;
  cert.filter = ElementSet(s.size());
  if (!cert.seeds.empty()) {
    for (Index y : generated(s, cert.seeds).members()) check(psi[y] == Complex(1), "psi is not 1 on <E>");
    cert.filter = filter_generated(s, cert.seeds).members;
  }
  check((cert.filter & cert.fixed) == cert.seeds, "F and S_fix do not meet in E");

  cert.corrected = indicator<Complex>(cert.filter);
  cert.corrected_defect = defect(s, cert.corrected, Norm::Abs).defect;
  check(cert.corrected_defect <= kSlack, "filter indicator is not multiplicative");
  cert.claimed_bound = epsilon;
  cert.achieved_distance = weighted_sup_distance(weight, psi, cert.corrected, Norm::Abs);
  check(cert.achieved_distance <= epsilon + kSlack, "weighted distance exceeds epsilon");
  return cert;
}

T2Certificate correct_T2(const Semilattice& s, const T2Map& theta) {
  T2Certificate cert;
  cert.input = theta;
  cert.norm = Norm::T2;
  cert.defect = defect(s, theta, Norm::T2).defect;
  if (!(cert.defect < 0.2)) throw DefectTooLarge(cert.defect, 0.2, "T2 correction needs defect < 1/5");

  ScalarMap diagonal(theta.size());
  for (std::size_t x = 0; x < theta.size(); ++x) diagonal[x] = theta[x].a;
  const ScalarCertificate scalar = correct_scalar(s, diagonal);
  Checker check;
  check(scalar.defect <= cert.defect + kSlack, "diagonal part has larger defect than theta");

  cert.support = scalar.support;
  cert.corrected.resize(theta.size());
  for (std::size_t x = 0; x < theta.size(); ++x) cert.corrected[x] = scalar.corrected[x] * T2Element::identity();
  cert.corrected_defect = defect(s, cert.corrected, Norm::T2).defect;
  check(cert.corrected_defect <= kSlack, "corrected T2 map is not multiplicative");
  cert.claimed_bound = 25.0 / 11.0 * cert.defect;
  cert.achieved_distance = sup_distance(theta, cert.corrected, Norm::T2);
  check(cert.achieved_distance <= cert.claimed_bound + kSlack, "T2 distance exceeds 25/11 of the defect");
  return cert;
}

M2Certificate correct_M2(const Semilattice& s, const M2Map& theta, double delta) {
  if (!(delta >= 0 && delta < 0.03)) throw DefectTooLarge(delta, 0.03, "M2 correction needs delta < 0.03");
  M2Certificate cert;
  cert.input = theta;
  cert.norm = Norm::HS;
  cert.delta_bound = delta;
  cert.defect = defect(s, theta, Norm::HS).defect;
  if (cert.defect > delta + tolerance::kRoundTrip)
    throw DefectTooLarge(cert.defect, delta, "measured M2 defect exceeds the supplied delta");

  const std::size_t n = s.size();
  const Mat2 I = Mat2::Identity();
  const double trace_bound = rho(delta) * std::sqrt(2.0) * delta;
  Checker check;

  // Trace windows of radius 0.95 around 0, 1, 2.
  std::vector<int> rank(n);
  for (Index x = 0; x < n; ++x) {
    const Complex t = theta[x].trace();
    int k = static_cast<int>(std::lround(t.real()));
    k = std::clamp(k, 0, 2);
    const double gap = std::abs(t - static_cast<double>(k));
    check(gap < 0.95, "trace outside every window" + pair_text(x, x));
    check(gap <= trace_bound + kSlack, "trace not confined near its class" + pair_text(x, x));
    check(key_estimates(theta[x], delta).trace_class == k, "key estimate class disagrees with trace window");
    rank[x] = k;
  }
  auto in = [&](Index x, int k) { return rank[x] == k; };

  cert.corrected.assign(n, Mat2::Zero());
  cert.classes.assign(n, ElementClass::S0);
  const double extreme_bound = kappa(delta) * delta;
  for (Index x = 0; x < n; ++x) {
    if (in(x, 2)) {
      cert.corrected[x] = I;
      cert.classes[x] = ElementClass::S2;
      check(theta[x].inverse().norm() < 1.5, "inverse bound fails on S2" + pair_text(x, x));
    } else if (in(x, 0)) {
      check((I - theta[x]).inverse().norm() < 1.5, "inverse bound fails on S0" + pair_text(x, x));
    }
    if (!in(x, 1)) check(hs(theta[x] - cert.corrected[x]) <= extreme_bound + kSlack, "extreme class too far");
  }

  for (Index e = 0; e < n; ++e)
    for (Index f = 0; f < n; ++f) {
      const Index ef = s(e, f);
      if (in(e, 2) && in(f, 2)) check(in(ef, 2), "S2*S2 not in S2" + pair_text(e, f));
      if (in(f, 0)) check(in(ef, 0), "S*S0 not in S0" + pair_text(e, f));
      if (in(f, 2) && s.leq(f, e)) check(in(e, 2), "S2 not upward closed" + pair_text(e, f));
      if (in(e, 1) && in(f, 1)) {
        check(!in(ef, 2), "S1*S1 meets S2" + pair_text(e, f));
        if (s.leq(f, e)) check(hs(theta[e] - theta[f]) <= 5 * delta + kSlack, "chain bound fails" + pair_text(e, f));
        if (in(ef, 0)) {
          check(hs(theta[e] + theta[f] - I) <= 10 * delta + kSlack, "separation sum bound fails" + pair_text(e, f));
          check(hs(theta[e] - theta[f]) >= 4.0 / 3.0 - 10 * delta - kSlack,
                "separation gap bound fails" + pair_text(e, f));
        }
      }
    }

  std::vector<Index> s1;
  for (Index x = 0; x < n; ++x)
    if (in(x, 1)) s1.push_back(x);

  if (!s1.empty()) {
    auto related = [&](Index e, Index f) { return in(s(e, f), 1); };
    for (Index e : s1)
      for (Index f : s1) {
        if (related(e, f)) check(hs(theta[e] - theta[f]) <= 10 * delta + kSlack, "related pair too far apart");
        else check(hs(theta[e] - theta[f]) > 1.0, "close pair not related" + pair_text(e, f));
        for (Index g : s1)
          if (related(e, f) && related(f, g)) check(related(e, g), "relation not transitive");
      }
    const Index p0 = s1.front();
    cert.p0 = p0;
    std::vector<Index> outside;
    for (Index e : s1)
      if (!related(p0, e)) outside.push_back(e);
    for (Index e : outside)
      for (Index f : outside) check(related(e, f), "more than two classes in S1");

    const KeyEstimateReport key = key_estimates(theta[p0], delta);
    check(key.trace_class == 1, "theta(p0) is not near a rank-one idempotent");
    const Mat2 P = key.nearby_idempotent;
    check(hs(P - theta[p0]) <= rho(delta) * delta + kSlack, "P too far from theta(p0)");
    cert.projector = P;

    const double radius = 12 * delta + kSlack;
    for (Index e : s1) {
      const bool near_p = hs(theta[e] - P) <= radius;
      const bool near_q = hs(theta[e] - (I - P)) <= radius;
      const bool in_class = related(p0, e);
      check(near_p == in_class, "ball around P does not match the class of p0" + pair_text(p0, e));
      check(near_q == !in_class, "ball around I-P does not match the other class" + pair_text(p0, e));
      cert.classes[e] = in_class ? ElementClass::Sp : ElementClass::Sq;
      cert.corrected[e] = in_class ? P : Mat2(I - P);
    }

    auto cls = [&](Index x) { return cert.classes[x]; };
    for (Index e = 0; e < n; ++e)
      for (Index f = 0; f < n; ++f) {
        const Index ef = s(e, f);
        const ElementClass ce = cls(e), cf = cls(f), cef = cls(ef);
        if (ce == ElementClass::S2 && (cf == ElementClass::Sp || cf == ElementClass::Sq))
          check(cef == cf, "S2*S1 leaves the class of its S1 factor" + pair_text(e, f));
        if ((ce == ElementClass::Sp || ce == ElementClass::Sq) && ce == cf)
          check(cef == ce, "Sp or Sq not closed" + pair_text(e, f));
        if (ce == ElementClass::Sp && cf == ElementClass::Sq) check(cef == ElementClass::S0, "Sp*Sq not in S0" + pair_text(e, f));
      }
  }

  double scale = 1.0;
  for (const auto& v : cert.corrected) scale = std::max(scale, v.squaredNorm());
  cert.corrected_defect = defect(s, cert.corrected, Norm::HS).defect;
  check(cert.corrected_defect <= kSlack * scale, "corrected M2 map is not multiplicative");
  cert.claimed_bound = 12 * delta;
  cert.achieved_distance = sup_distance(theta, cert.corrected, Norm::HS);
  check(cert.achieved_distance <= cert.claimed_bound + kSlack, "M2 distance exceeds 12 delta");
  cert.checks = check.count;
  return cert;
}

}  // namespace amnm
