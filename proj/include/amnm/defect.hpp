#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "amnm/algebra.hpp"
#include "amnm/matrix.hpp"
#include "amnm/semilattice.hpp"
#include "amnm/weights.hpp"

namespace amnm {

/// Norm on the codomain: absolute value on scalars, |a|+|b| on T₂,
/// Hilbert–Schmidt or operator norm on Mat₂.
enum class Norm { Abs, T2, HS, Op };

std::string to_string(Norm norm);
Norm parse_norm(const std::string& text);

/// The requested norm does not apply to the codomain of the map.
class NormMismatch : public Error {
 public:
  using Error::Error;
};

double norm_of(double x, Norm norm);
double norm_of(const Complex& z, Norm norm);
double norm_of(const T2Element& x, Norm norm);
double norm_of(const Mat2& a, Norm norm);
Rational norm_of(const Rational& x, Norm norm);
Rational norm_of(const BasicT2<Rational>& x, Norm norm);
Rational norm_of(const Matrix2<Rational>& a, Norm norm);

template <class Value>
using real_of_t = decltype(norm_of(std::declval<const Value&>(), Norm::Abs));

template <class T>
struct is_matrix2 : std::false_type {};
template <class S>
struct is_matrix2<Eigen::Matrix<S, 2, 2>> : std::true_type {};

/// Scalar and T₂ values commute; Mat₂ values in general do not.
template <class Value>
inline constexpr bool has_commutative_codomain_v = !is_matrix2<Value>::value;

template <class Real>
struct DefectReport {
  Real defect{};
  Index e = 0;  // witness pair attaining the maximum
  Index f = 0;
  Norm norm = Norm::Abs;
};

/// diff_ω(θ) = max ‖θ(e)θ(f) − θ(ef)‖ / (ω(e)ω(f)), with the lexicographically
/// first maximizing pair as witness. Commutative codomains scan the pairs
/// e <= f only; Mat₂ scans all ordered pairs because θ(e)θ(f) and θ(f)θ(e)
/// can differ.
template <class Value, class Real = real_of_t<Value>>
DefectReport<Real> defect(const Semilattice& s, const Weight<Real>& weight, const AlgebraMap<Value>& map, Norm norm) {
  if (map.size() != s.size()) throw StructureMismatch("map length differs from semilattice size");
  if (weight.size() != s.size()) throw StructureMismatch("weight length differs from semilattice size");
  DefectReport<Real> out{Real(0), 0, 0, norm};
  bool first = true;
  for (Index e = 0; e < s.size(); ++e) {
    for (Index f = has_commutative_codomain_v<Value> ? e : 0; f < s.size(); ++f) {
      const Value product = map[e] * map[f];
      const Value gap = product - map[s(e, f)];
      const Real ratio = norm_of(gap, norm) / (weight[e] * weight[f]);
      if (first || ratio > out.defect) {
        out.defect = ratio;
        out.e = e;
        out.f = f;
        first = false;
      }
    }
  }
  return out;
}

template <class Value, class Real = real_of_t<Value>>
DefectReport<Real> defect(const Semilattice& s, const AlgebraMap<Value>& map, Norm norm) {
  return defect<Value, Real>(s, unit_weight<Real>(s.size()), map, norm);
}

/// Pointwise multiplicativity in the codomain's own equality (exact for
/// rational values).
template <class Value>
bool is_multiplicative_exact(const Semilattice& s, const AlgebraMap<Value>& map) {
  for (Index e = 0; e < s.size(); ++e)
    for (Index f = 0; f < s.size(); ++f) {
      const Value product = map[e] * map[f];
      if (!(product == map[s(e, f)])) return false;
    }
  return true;
}

/// ‖θ − φ‖_{∞,ω⁻¹} = max ‖θ(x) − φ(x)‖ / ω(x).
template <class Value, class Real = real_of_t<Value>>
Real weighted_sup_distance(const Weight<Real>& weight, const AlgebraMap<Value>& a, const AlgebraMap<Value>& b,
                           Norm norm) {
  if (a.size() != b.size() || a.size() != weight.size())
    throw StructureMismatch("maps and weight must have the same length");
  Real best(0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Value gap = a[x] - b[x];
    const Real ratio = norm_of(gap, norm) / weight[x];
    if (ratio > best) best = ratio;
  }
  return best;
}

template <class Value, class Real = real_of_t<Value>>
Real sup_distance(const AlgebraMap<Value>& a, const AlgebraMap<Value>& b, Norm norm) {
  return weighted_sup_distance<Value, Real>(unit_weight<Real>(a.size()), a, b, norm);
}

struct BinaryRounding {
  ScalarMap rounded;          // values in {0, 1}
  double defect = 0;          // δ = diff_ω(ψ)
  double distance = 0;        // ‖ψ − φ‖_{∞,ω⁻¹}, at most δ^{1/2}
  double rounded_defect = 0;  // diff_ω(φ), at most 3δ^{1/2} + 2δ
};

/// Rounds each value of ψ to the nearer of {0, 1} and checks both weighted
/// bounds; throws std::logic_error if either fails.
BinaryRounding round_to_binary(const Semilattice& s, const Weight<double>& weight, const ScalarMap& psi);

}  // namespace amnm
