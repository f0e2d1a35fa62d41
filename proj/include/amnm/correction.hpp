#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amnm/defect.hpp"
#include "amnm/filters.hpp"

namespace amnm {

/// Measured defect is at or above the admissible threshold.
class DefectTooLarge : public Error {
 public:
  DefectTooLarge(double defect, double limit, const std::string& what)
      : Error(what), defect_(defect), limit_(limit) {}
  double defect() const { return defect_; }
  double limit() const { return limit_; }

 private:
  double defect_;
  double limit_;
};

/// 2δC(ε)/ε >= 1 for the weighted correction.
class PreconditionGap : public Error {
 public:
  PreconditionGap(double defect, double flighty, double epsilon, double ratio, const std::string& what)
      : Error(what), defect_(defect), flighty_(flighty), epsilon_(epsilon), ratio_(ratio) {}
  double defect() const { return defect_; }
  double flighty() const { return flighty_; }
  double epsilon() const { return epsilon_; }
  double ratio() const { return ratio_; }

 private:
  double defect_, flighty_, epsilon_, ratio_;
};

/// A runtime check of the correction proof failed.
class ClassificationFailure : public Error {
 public:
  using Error::Error;
};

template <class Value>
struct Certificate {
  AlgebraMap<Value> input;
  AlgebraMap<Value> corrected;
  Norm norm = Norm::Abs;
  double defect = 0;            // δ of the input
  double corrected_defect = 0;  // defect of the output
  double claimed_bound = 0;
  double achieved_distance = 0;
};

struct ScalarCertificate : Certificate<Complex> {
  ElementSet support;  // S₁ = ψ⁻¹(D₁(7/25))
};

struct WeightedCertificate : Certificate<Complex> {
  double epsilon = 0;
  double flighty = 0;  // C(ε)
  double ratio = 0;    // 2δC(ε)/ε
  ElementSet fixed;    // S_fix = W_{2/ε}
  ElementSet seeds;    // E
  ElementSet filter;   // F, empty when E is
};

struct T2Certificate : Certificate<T2Element> {
  ElementSet support;
};

enum class ElementClass { S0, Sp, Sq, S2 };
std::string to_string(ElementClass c);

struct M2Certificate : Certificate<Mat2> {
  double delta_bound = 0;  // the caller's δ
  std::vector<ElementClass> classes;
  std::optional<Index> p0;
  Mat2 projector = Mat2::Zero();  // P, zero when S₁ is empty
  std::size_t checks = 0;         // runtime assertions evaluated
};

/// Nearest character for an unweighted scalar map with defect < 1/5.
ScalarCertificate correct_scalar(const Semilattice& s, const ScalarMap& psi);

/// Nearest filter indicator for a 0/1-valued map on a weighted semilattice.
WeightedCertificate correct_weighted(const Semilattice& s, const Weight<double>& weight, const ScalarMap& psi,
                                     double epsilon);

/// Nearest multiplicative T₂ map (of the form χ·1) for defect < 1/5.
T2Certificate correct_T2(const Semilattice& s, const T2Map& theta);

/// Multiplicative Mat₂ map within 12δ in HS norm, for measured defect <= δ < 0.03.
M2Certificate correct_M2(const Semilattice& s, const M2Map& theta, double delta);

}  // namespace amnm
