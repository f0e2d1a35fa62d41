#include "amnm/json_io.hpp"

#include <cstdio>

namespace amnm {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(MapKind c) {
  switch (c) {
    case MapKind::Scalar: return "scalar";
    case MapKind::T2: return "t2";
    case MapKind::M2: return "m2";
  }
  return "?";
}

namespace {

Rational exact_number(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number()) return Rational(j.get<double>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": cannot read number '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError(where + ": expected a number");
}

double number(const Json& j, const std::string& where) { return to_double(exact_number(j, where)); }

// A complex entry is a number, a numeric string, or [re, im]. `real` is set
// to false when the imaginary part is nonzero.
Complex complex_entry(const Json& j, const std::string& where, Rational& exact, bool& real) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(where + ": complex entries are [re, im]");
    const Rational re = exact_number(j[0], where), im = exact_number(j[1], where);
    if (im != 0) real = false;
    exact = re;
    return {to_double(re), to_double(im)};
  }
  exact = exact_number(j, where);
  return {to_double(exact), 0.0};
}

MapDocument parse_map(const Json& j, std::size_t n) {
  if (!j.is_object()) throw ParseError("map: expected an object");
  if (!j.contains("codomain") || !j["codomain"].is_string()) throw ParseError("map: missing codomain");
  if (!j.contains("values") || !j["values"].is_array()) throw ParseError("map: missing values");
  const std::string kind = j["codomain"];
  const Json& values = j["values"];
  if (values.size() != n) throw ParseError("map: expected " + std::to_string(n) + " values");

  MapDocument out;
  bool real = true;
  Rational q;
  if (kind == "scalar") {
    out.codomain = MapKind::Scalar;
    AlgebraMap<Rational> exact;
    for (std::size_t x = 0; x < n; ++x) {
      out.scalar.push_back(complex_entry(values[x], "map value " + std::to_string(x), q, real));
      exact.push_back(q);
    }
    if (real) out.scalar_exact = std::move(exact);
  } else if (kind == "t2") {
    out.codomain = MapKind::T2;
    AlgebraMap<BasicT2<Rational>> exact;
    for (std::size_t x = 0; x < n; ++x) {
      const std::string where = "map value " + std::to_string(x);
      if (!values[x].is_array() || values[x].size() != 2) throw ParseError(where + ": t2 values are [a, b]");
      Rational qa, qb;
      const Complex a = complex_entry(values[x][0], where, qa, real);
      const Complex b = complex_entry(values[x][1], where, qb, real);
      out.t2.push_back({a, b});
      exact.push_back({qa, qb});
    }
    if (real) out.t2_exact = std::move(exact);
  } else if (kind == "m2") {
    out.codomain = MapKind::M2;
    AlgebraMap<Matrix2<Rational>> exact;
    for (std::size_t x = 0; x < n; ++x) {
      const std::string where = "map value " + std::to_string(x);
      if (!values[x].is_array() || values[x].size() != 4) throw ParseError(where + ": m2 values are 4 entries, row-major");
      Mat2 m;
      Matrix2<Rational> e;
      for (int k = 0; k < 4; ++k) {
        m(k / 2, k % 2) = complex_entry(values[x][k], where, q, real);
        e(k / 2, k % 2) = q;
      }
      out.m2.push_back(m);
      exact.push_back(e);
    }
    if (real) out.m2_exact = std::move(exact);
  } else {
    throw ParseError("map: unknown codomain '" + kind + "'");
  }
  return out;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected an object");
  if (!j.contains("table") || !j["table"].is_array()) throw ParseError("document: missing table");

  Semilattice::Table table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw ParseError("table: rows must be arrays");
    std::vector<Index> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError("table: entries must be nonnegative integers");
      r.push_back(static_cast<Index>(v.get<long long>()));
    }
    table.push_back(std::move(r));
  }
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<std::size_t>() != table.size()))
    throw ParseError("document: n does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != table.size()) throw ParseError("labels: wrong length");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels: expected strings");
      labels.push_back(l);
    }
  }

  InputDocument doc;
  doc.digest = fnv1a_hex(text);
  doc.lattice = Semilattice::validate(table, std::move(labels));
  const std::size_t n = doc.lattice.size();
  if (j.contains("weights")) {
    const Json& w = j["weights"];
    if (!w.is_array() || w.size() != n) throw ParseError("weights: expected " + std::to_string(n) + " numbers");
    Weight<Rational> exact;
    Weight<double> approx;
    for (std::size_t x = 0; x < n; ++x) {
      exact.push_back(exact_number(w[x], "weight " + std::to_string(x)));
      approx.push_back(number(w[x], "weight " + std::to_string(x)));
    }
    doc.weight = std::move(approx);
    doc.weight_exact = std::move(exact);
  }
  if (j.contains("map")) doc.map = parse_map(j["map"], n);
  return doc;
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const T2Element& x) { return Json::array({to_json(x.a), to_json(x.b)}); }

Json to_json(const Mat2& a) {
  return Json::array({to_json(a(0, 0)), to_json(a(0, 1)), to_json(a(1, 0)), to_json(a(1, 1))});
}

Json to_json(const Rational& q) {
  return Json(to_string(q));
}

Json to_json(const ElementSet& e) {
  Json out = Json::array();
  for (Index i : e.members()) out.push_back(i);
  return out;
}

Json semilattice_json(const Semilattice& s) {
  Json out;
  out["n"] = s.size();
  out["table"] = s.table();
  if (!s.labels().empty()) out["labels"] = s.labels();
  return out;
}

namespace {

template <class Value>
Json base_certificate(const Certificate<Value>& c, const std::string& kind) {
  Json out;
  out["kind"] = kind;
  out["norm"] = to_string(c.norm);
  out["defect"] = c.defect;
  out["claimed_bound"] = c.claimed_bound;
  out["achieved_distance"] = c.achieved_distance;
  out["corrected_defect"] = c.corrected_defect;
  out["tolerance"] = tolerance::kStructural;
  out["bound_holds"] = c.achieved_distance <= c.claimed_bound + tolerance::kStructural;
  out["corrected"] = to_json(c.corrected);
  return out;
}

}  // namespace

Json certificate_json(const ScalarCertificate& c) {
  Json out = base_certificate(c, "scalar");
  out["support"] = to_json(c.support);
  return out;
}

Json certificate_json(const WeightedCertificate& c) {
  Json out = base_certificate(c, "weighted");
  out["epsilon"] = c.epsilon;
  out["flighty_constant"] = c.flighty;
  out["ratio"] = c.ratio;
  out["fixed"] = to_json(c.fixed);
  out["seeds"] = to_json(c.seeds);
  out["filter"] = to_json(c.filter);
  return out;
}

Json certificate_json(const T2Certificate& c) {
  Json out = base_certificate(c, "t2");
  out["support"] = to_json(c.support);
  return out;
}

Json certificate_json(const M2Certificate& c) {
  Json out = base_certificate(c, "m2");
  out["delta"] = c.delta_bound;
  Json classes = Json::array();
  for (auto k : c.classes) classes.push_back(to_string(k));
  out["classes"] = classes;
  out["p0"] = c.p0 ? Json(*c.p0) : Json(nullptr);
  out["projector"] = to_json(c.projector);
  out["checks"] = c.checks;
  return out;
}

Json oracle_json(const OracleResult& r) {
  auto filter_json = [](const std::optional<Index>& f) { return f ? Json(*f) : Json(nullptr); };
  Json out;
  out["note"] = "upper bound on distance";
  out["norm"] = to_string(r.norm);
  out["distance"] = r.distance;
  out["starts"] = r.starts;
  Json family;
  family["f1"] = filter_json(r.family.f1);
  family["f2"] = filter_json(r.family.f2);
  family["P"] = to_json(r.family.P);
  out["family"] = family;
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cell;
    cell["f1"] = filter_json(c.f1);
    cell["f2"] = filter_json(c.f2);
    cell["lower_bound"] = c.lower_bound;
    cell["best"] = c.best;
    cell["pruned"] = c.pruned;
    cells.push_back(cell);
  }
  out["cells"] = cells;
  return out;
}

}  // namespace amnm
