#include "amnm/defect.hpp"

#include <cmath>
#include <stdexcept>

namespace amnm {

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::Abs: return "abs";
    case Norm::T2: return "t2";
    case Norm::HS: return "hs";
    case Norm::Op: return "op";
  }
  return "unknown";
}

Norm parse_norm(const std::string& text) {
  if (text == "abs") return Norm::Abs;
  if (text == "t2") return Norm::T2;
  if (text == "hs") return Norm::HS;
  if (text == "op") return Norm::Op;
  throw NormMismatch("unknown norm '" + text + "'");
}

namespace {

void require(Norm given, Norm wanted, const char* codomain) {
  if (given != wanted) throw NormMismatch("norm " + to_string(given) + " does not apply to " + codomain + " values");
}

void require_matrix_norm(Norm given) {
  if (given != Norm::HS && given != Norm::Op)
    throw NormMismatch("norm " + to_string(given) + " does not apply to Mat2 values");
}

}  // namespace

double norm_of(double x, Norm norm) {
  require(norm, Norm::Abs, "scalar");
  return std::abs(x);
}

double norm_of(const Complex& z, Norm norm) {
  require(norm, Norm::Abs, "scalar");
  return std::abs(z);
}

double norm_of(const T2Element& x, Norm norm) {
  require(norm, Norm::T2, "T2");
  return t2_norm(x);
}

double norm_of(const Mat2& a, Norm norm) {
  require_matrix_norm(norm);
  return norm == Norm::HS ? hs_norm(a) : op_norm(a);
}

Rational norm_of(const Rational& x, Norm norm) {
  require(norm, Norm::Abs, "scalar");
  return abs(x);
}

Rational norm_of(const BasicT2<Rational>& x, Norm norm) {
  require(norm, Norm::T2, "T2");
  return t2_norm(x);
}

Rational norm_of(const Matrix2<Rational>& a, Norm norm) {
  require_matrix_norm(norm);
  return norm == Norm::HS ? hs_norm(a) : op_norm(a);
}

BinaryRounding round_to_binary(const Semilattice& s, const Weight<double>& weight, const ScalarMap& psi) {
  BinaryRounding out;
  out.defect = defect(s, weight, psi, Norm::Abs).defect;
  out.rounded.resize(psi.size());
  for (std::size_t x = 0; x < psi.size(); ++x)
    out.rounded[x] = std::abs(psi[x] - 1.0) < std::abs(psi[x]) ? 1.0 : 0.0;
  out.distance = weighted_sup_distance(weight, psi, out.rounded, Norm::Abs);
  out.rounded_defect = defect(s, weight, out.rounded, Norm::Abs).defect;

  const double root = std::sqrt(out.defect);
  const double slack = tolerance::kRoundTrip;
  if (out.distance > root + slack) throw std::logic_error("round_to_binary: distance exceeds defect^(1/2)");
  if (out.rounded_defect > 3.0 * root + 2.0 * out.defect + slack)
    throw std::logic_error("round_to_binary: rounded defect exceeds 3 defect^(1/2) + 2 defect");
  return out;
}

}  // namespace amnm
