#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "amnm/correction.hpp"
#include "amnm/counterexamples.hpp"
#include "amnm/oracle.hpp"

namespace amnm {

using Json = nlohmann::ordered_json;

/// Malformed JSON or a document of the wrong shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class MapKind { Scalar, T2, M2 };

/// A map as read from a document. Exactly one of the value vectors is
/// filled, according to `codomain`. Real-valued entries are also kept as
/// exact rationals when every entry is real.
struct MapDocument {
  MapKind codomain = MapKind::Scalar;
  ScalarMap scalar;
  T2Map t2;
  M2Map m2;
  std::optional<AlgebraMap<Rational>> scalar_exact;
  std::optional<AlgebraMap<BasicT2<Rational>>> t2_exact;
  std::optional<AlgebraMap<Matrix2<Rational>>> m2_exact;
};

/// {"n", "table", "labels"?, "weights"?, "map"?}. Numbers may be JSON
/// numbers or strings such as "3/7".
struct InputDocument {
  Semilattice lattice;
  std::optional<Weight<double>> weight;
  std::optional<Weight<Rational>> weight_exact;
  std::optional<MapDocument> map;
  std::string digest;  // FNV-1a of the raw text
};

/// Throws ParseError for malformed input and AxiomViolation for a table that
/// is not a semilattice. Weights are not checked here.
InputDocument parse_input(std::string_view text);

std::string fnv1a_hex(std::string_view text);
std::string to_string(MapKind c);

inline Json to_json(double x) { return Json(x); }
Json to_json(const Complex& z);
Json to_json(const T2Element& x);
Json to_json(const Mat2& a);
Json to_json(const Rational& q);
Json to_json(const ElementSet& e);
template <class Value>
Json to_json(const AlgebraMap<Value>& map) {
  Json out = Json::array();
  for (const auto& v : map) out.push_back(to_json(v));
  return out;
}

Json semilattice_json(const Semilattice& s);
Json certificate_json(const ScalarCertificate& c);
Json certificate_json(const WeightedCertificate& c);
Json certificate_json(const T2Certificate& c);
Json certificate_json(const M2Certificate& c);
Json oracle_json(const OracleResult& r);

template <class Real>
Json report_json(const CounterexampleReport<Real>& r) {
  Json out;
  out["family"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  out["parameters"] = params;
  out["defect"] = to_json(r.defect);
  out["defect_closed_form"] = to_json(r.closed_form);
  out["defect_matches"] = r.defect_matches;
  Json certified;
  certified["distance_lower_bound"] = to_json(r.distance_lower_bound);
  certified["method"] = r.method;
  if (r.method == "exhaustive") certified["distance_minimum"] = to_json(r.distance_found);
  out["certified"] = certified;
  if (r.numerical_distance) {
    Json numerical;
    numerical["optimizer_distance"] = *r.numerical_distance;
    numerical["note"] = "upper bound on distance";
    out["numerical"] = numerical;
  }
  return out;
}


}  // namespace amnm
