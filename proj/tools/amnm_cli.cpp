// Command-line front end: validation, structure invariants, defects,
// corrections, counterexample tables, oracle search and the acceptance suite.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "amnm/correction.hpp"
#include "amnm/counterexamples.hpp"
#include "amnm/json_io.hpp"
#include "amnm/oracle.hpp"
#include "amnm/order.hpp"
#include "amnm/suite.hpp"

using namespace amnm;

namespace {

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kAxiom = 2,
  kParse = 3,
  kDefectTooLarge = 4,
  kNoEligibleIndex = 5,
};

struct Common {
  bool json = false;
  bool rational = false;
  bool timing = false;
  std::uint64_t seed = 20240601;
  std::size_t starts = 16;
};

struct Run {
  std::string command;
  std::string digest;
  Json outputs = Json::array();
  bool passed = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

int finish(const Common& c, Run& run, int code, const std::string& text) {
  if (c.json) {
    Json report;
    report["command"] = run.command;
    report["input_digest"] = run.digest.empty() ? Json(nullptr) : Json(run.digest);
    report["outputs"] = run.outputs;
    report["summary"] = {{"passed", run.passed}, {"exit_code", code}};
    if (c.timing)
      report["wall_time_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - run.start).count();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string label(const Semilattice& s, Index i) {
  return s.labels().empty() ? std::to_string(i) : s.labels()[i];
}

const MapDocument& require_map(const InputDocument& doc) {
  if (!doc.map) throw ParseError("document has no map");
  return *doc.map;
}

Norm default_norm(MapKind k) {
  switch (k) {
    case MapKind::Scalar: return Norm::Abs;
    case MapKind::T2: return Norm::T2;
    case MapKind::M2: return Norm::HS;
  }
  return Norm::Abs;
}

// Exceptions shared by every command that reads an input document.
template <class F>
int guarded(const Common& c, Run& run, F&& body) {
  try {
    return body();
  } catch (const AxiomViolation& e) {
    run.passed = false;
    std::string witness;
    for (Index i : e.witness()) witness += (witness.empty() ? "" : ", ") + std::to_string(i);
    run.outputs.push_back({{"error", "axiom_violation"}, {"axiom", to_string(e.kind())}, {"witness", e.witness()}});
    return finish(c, run, kAxiom, "axiom violation (" + to_string(e.kind()) + ") at (" + witness + "): " + e.what() + "\n");
  } catch (const ParseError& e) {
    run.passed = false;
    run.outputs.push_back({{"error", "parse_error"}, {"message", e.what()}});
    return finish(c, run, kParse, std::string("parse error: ") + e.what() + "\n");
  } catch (const DefectTooLarge& e) {
    run.passed = false;
    run.outputs.push_back({{"error", "defect_too_large"}, {"defect", e.defect()}, {"limit", e.limit()}});
    return finish(c, run, kDefectTooLarge,
                  "defect too large: measured " + fmt(e.defect()) + ", limit " + fmt(e.limit()) + "\n");
  } catch (const PreconditionGap& e) {
    run.passed = false;
    run.outputs.push_back({{"error", "precondition_gap"},
                           {"defect", e.defect()},
                           {"flighty_constant", e.flighty()},
                           {"epsilon", e.epsilon()},
                           {"ratio", e.ratio()}});
    return finish(c, run, kDefectTooLarge, std::string("precondition gap: ") + e.what() + "\n");
  } catch (const NoEligibleIndex& e) {
    run.passed = false;
    run.outputs.push_back({{"error", "no_eligible_index"}, {"message", e.what()}});
    return finish(c, run, kNoEligibleIndex, std::string("no eligible index: ") + e.what() + "\n");
  } catch (const std::exception& e) {
    run.passed = false;
    run.outputs.push_back({{"error", "failure"}, {"message", e.what()}});
    return finish(c, run, kFailed, std::string("error: ") + e.what() + "\n");
  }
}

int cmd_validate(const Common& c, const std::string& path) {
  Run run{"validate"};
  return guarded(c, run, [&] {
    const std::string text = read_file(path);
    const InputDocument doc = parse_input(text);
    run.digest = doc.digest;
    std::ostringstream out;
    out << "semilattice with " << doc.lattice.size() << " elements: axioms hold\n";
    Json result{{"n", doc.lattice.size()}, {"axioms", "ok"}};
    if (doc.weight_exact) {
      const auto& w = *doc.weight_exact;
      for (Index x = 0; x < w.size(); ++x)
        if (!(w[x] > 0)) {
          run.passed = false;
          run.outputs.push_back({{"error", "nonpositive_weight"}, {"witness", {x}}});
          return finish(c, run, kAxiom, "weight at element " + std::to_string(x) + " is not positive\n");
        }
      if (auto bad = submultiplicative_violation(doc.lattice, w)) {
        run.passed = false;
        run.outputs.push_back({{"error", "not_submultiplicative"}, {"witness", {bad->first, bad->second}}});
        return finish(c, run, kAxiom,
                      "weight not submultiplicative at (" + std::to_string(bad->first) + ", " +
                          std::to_string(bad->second) + ")\n");
      }
      out << "weight is positive and submultiplicative\n";
      result["weight"] = "ok";
    }
    run.outputs.push_back(result);
    return finish(c, run, kOk, out.str());
  });
}

int cmd_invariants(const Common& c, const std::string& path, std::size_t samples) {
  Run run{"invariants"};
  return guarded(c, run, [&] {
    const InputDocument doc = parse_input(read_file(path));
    run.digest = doc.digest;
    const Semilattice& s = doc.lattice;
    Json result{{"n", s.size()}, {"width", width(s)}, {"height", height(s)}};
    std::ostringstream out;
    out << "n        " << s.size() << "\nwidth    " << width(s) << "\nheight   " << height(s) << "\n";
    if (s.size() <= 20) {
      result["breadth"] = breadth(s);
      result["breadth_method"] = "exhaustive";
      out << "breadth  " << breadth(s) << " (exhaustive)\n";
    } else {
      const std::size_t b = breadth_sampled(s, samples, c.seed);
      result["breadth_lower_bound"] = b;
      result["breadth_method"] = "sampled";
      result["samples"] = samples;
      out << "breadth  >= " << b << " (sampled, " << samples << " subsets, seed " << c.seed << ")\n";
    }
    run.outputs.push_back(result);
    return finish(c, run, kOk, out.str());
  });
}

int cmd_filters(const Common& c, const std::string& path) {
  Run run{"filters"};
  return guarded(c, run, [&] {
    const InputDocument doc = parse_input(read_file(path));
    run.digest = doc.digest;
    const Semilattice& s = doc.lattice;
    Json list = Json::array();
    std::ostringstream out;
    const auto filters = enumerate_filters(s);
    out << filters.size() << " filters\n";
    for (const auto& f : filters) {
      list.push_back({{"min", f.principal_min}, {"members", to_json(f.members)}});
      out << "  up(" << label(s, f.principal_min) << ") = {";
      bool first = true;
      for (Index x : f.members.members()) {
        out << (first ? "" : ", ") << label(s, x);
        first = false;
      }
      out << "}\n";
    }
    run.outputs.push_back({{"count", filters.size()}, {"filters", list}});
    return finish(c, run, kOk, out.str());
  });
}

template <class Value, class Real>
Json defect_json(const Semilattice& s, const Weight<Real>& w, const AlgebraMap<Value>& map, Norm norm,
                 std::string& text) {
  const auto r = defect(s, w, map, norm);
  Json out{{"defect", to_json(r.defect)}, {"norm", to_string(norm)}, {"witness", {r.e, r.f}}};
  if constexpr (std::is_same_v<Real, Rational>) {
    out["exact"] = true;
    text = "defect " + to_string(r.defect);
  } else {
    out["exact"] = false;
    out["tolerance"] = tolerance::kRoundTrip;
    text = "defect " + fmt(r.defect);
  }
  text += " (" + to_string(norm) + " norm) at (" + label(s, r.e) + ", " + label(s, r.f) + ")\n";
  return out;
}

int cmd_defect(const Common& c, const std::string& path, const std::string& norm_text) {
  Run run{"defect"};
  return guarded(c, run, [&] {
    const InputDocument doc = parse_input(read_file(path));
    run.digest = doc.digest;
    const MapDocument& m = require_map(doc);
    const Semilattice& s = doc.lattice;
    const Norm norm = norm_text.empty() ? default_norm(m.codomain) : parse_norm(norm_text);
    std::string text;
    Json result;
    if (c.rational) {
      const Weight<Rational> w = doc.weight_exact ? *doc.weight_exact : unit_weight<Rational>(s.size());
      if (m.codomain == MapKind::Scalar && m.scalar_exact) result = defect_json(s, w, *m.scalar_exact, norm, text);
      else if (m.codomain == MapKind::T2 && m.t2_exact) result = defect_json(s, w, *m.t2_exact, norm, text);
      else if (m.codomain == MapKind::M2 && m.m2_exact) result = defect_json(s, w, *m.m2_exact, norm, text);
      else throw ParseError("--rational needs real-valued map entries");
    } else {
      const Weight<double> w = doc.weight ? *doc.weight : unit_weight<double>(s.size());
      if (m.codomain == MapKind::Scalar) result = defect_json(s, w, m.scalar, norm, text);
      else if (m.codomain == MapKind::T2) result = defect_json(s, w, m.t2, norm, text);
      else result = defect_json(s, w, m.m2, norm, text);
    }
    result["weighted"] = doc.weight.has_value();
    run.outputs.push_back(result);
    return finish(c, run, kOk, text);
  });
}

int cmd_correct(const Common& c, const std::string& path, const std::string& target, std::optional<double> delta,
                std::optional<double> epsilon, bool oracle) {
  Run run{"correct"};
  return guarded(c, run, [&] {
    const InputDocument doc = parse_input(read_file(path));
    run.digest = doc.digest;
    const MapDocument& m = require_map(doc);
    const Semilattice& s = doc.lattice;
    std::ostringstream out;
    auto expect = [&](MapKind k) {
      if (m.codomain != k) throw ParseError("target " + target + " needs a " + to_string(k) + " map");
    };
    auto summarize = [&](const auto& cert, Json j) {
      const bool ok = cert.achieved_distance <= cert.claimed_bound + tolerance::kStructural &&
                      cert.corrected_defect <= tolerance::kStructural * 1e3;
      run.passed = run.passed && ok;
      out << target << " correction: defect " << fmt(cert.defect) << ", distance " << fmt(cert.achieved_distance)
          << " <= bound " << fmt(cert.claimed_bound) << (ok ? "" : "  [FAILED]") << "\n";
      return j;
    };

    Json cert_json;
    if (target == "scalar") {
      expect(MapKind::Scalar);
      const auto cert = correct_scalar(s, m.scalar);
      cert_json = summarize(cert, certificate_json(cert));
    } else if (target == "weighted") {
      expect(MapKind::Scalar);
      if (!doc.weight) throw ParseError("target weighted needs weights");
      if (!epsilon) throw ParseError("target weighted needs --epsilon");
      const auto cert = correct_weighted(s, *doc.weight, m.scalar, *epsilon);
      cert_json = summarize(cert, certificate_json(cert));
    } else if (target == "t2") {
      expect(MapKind::T2);
      const auto cert = correct_T2(s, m.t2);
      cert_json = summarize(cert, certificate_json(cert));
    } else if (target == "m2") {
      expect(MapKind::M2);
      const double d = delta ? *delta : defect(s, m.m2, Norm::HS).defect;
      const auto cert = correct_M2(s, m.m2, d);
      cert_json = summarize(cert, certificate_json(cert));
      out << "classes:";
      for (Index x = 0; x < s.size(); ++x) out << " " << label(s, x) << "=" << to_string(cert.classes[x]);
      out << "\n";
      if (oracle) {
        const OracleResult o = nearest_mult_M2(s, unit_weight<double>(s.size()), m.m2, Norm::HS, c.starts, c.seed);
        Json oj = oracle_json(o);
        const bool agrees = o.distance <= cert.achieved_distance + 1e-6;
        oj["agrees"] = agrees;
        run.passed = run.passed && agrees;
        cert_json["oracle"] = oj;
        out << "oracle: distance " << fmt(o.distance) << " (upper bound on distance, " << c.starts
            << " starts per cell)" << (agrees ? "" : "  [DISAGREES]") << "\n";
      }
    } else {
      throw ParseError("unknown target '" + target + "'");
    }
    run.outputs.push_back(cert_json);
    return finish(c, run, run.passed ? kOk : kFailed, out.str());
  });
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
  return out;
}

template <class Real>
Weight<Real> weight_from(const std::string& list, const Real& base, std::size_t M) {
  Weight<Real> w;
  if (!list.empty()) {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if constexpr (std::is_same_v<Real, Rational>) w.push_back(parse_rational(item));
      else w.push_back(std::stod(item));
    }
    return w;
  }
  Real p(1);
  for (std::size_t n = 1; n <= M; ++n) {
    p *= base;
    w.push_back(p);
  }
  return w;
}

template <class Real>
std::string show(const Real& x) {
  if constexpr (std::is_same_v<Real, Rational>) return to_string(x);
  else return fmt(x);
}

struct FamilyArgs {
  std::string family;
  std::string C = "2";
  std::string blocks = "2,3,4,5";
  std::string weights;
  std::string base = "2";
  std::size_t M = 12;
  std::size_t m_from = 1, m_to = 10;
  std::string delta = "0.02";
};

template <class Real>
Real number_of(const std::string& text) {
  if constexpr (std::is_same_v<Real, Rational>) return parse_rational(text);
  else return to_double(parse_rational(text));
}

template <class Real>
int run_family(const Common& c, Run& run, const FamilyArgs& a) {
  std::ostringstream out;
  auto add = [&](CounterexampleReport<Real> rep) {
    run.passed = run.passed && rep.defect_matches;
    run.outputs.push_back(report_json(rep));
    std::string params;
    for (const auto& [k, v] : rep.parameters) params += k + "=" + v + " ";
    out << params << "| defect " << show(rep.defect) << " | closed form " << show(rep.closed_form)
        << " | distance >= " << show(rep.distance_lower_bound) << " (" << rep.method << ")";
    if (rep.numerical_distance) out << " | optimizer " << fmt(*rep.numerical_distance) << " (upper bound)";
    out << "\n";
  };

  if (a.family == "psi_n") {
    const auto fam = psi_n_family<Real>(number_of<Real>(a.C), parse_list(a.blocks));
    for (const auto& r : fam.reports) add(r);
  } else if (a.family == "t2") {
    const Weight<Real> w = weight_from<Real>(a.weights, number_of<Real>(a.base), a.M);
    for (std::size_t m = a.m_from; m <= a.m_to; ++m) {
      const auto ce = theta_m_T2<Real>(w, m);
      add(ce.report);
      out << "    referee map: defect " << show(ce.referee_defect) << ", distance " << show(ce.referee_distance)
          << "\n";
    }
  } else if (a.family == "m2") {
    const Weight<Real> w = weight_from<Real>(a.weights, number_of<Real>(a.base), a.M);
    auto ce = theta_M2<Real>(w, number_of<Real>(a.delta));
    if constexpr (std::is_same_v<Real, double>)
      ce.report.numerical_distance = optimizer_distance(ce.lattice, w, ce.theta, c.starts, c.seed);
    add(ce.report);
  } else if (a.family == "m2nonunif") {
    if constexpr (std::is_same_v<Real, Rational>) {
      throw PreconditionViolated("m2nonunif involves irrational norms; run it without --rational");
    } else {
      const Weight<double> w = weight_from<double>(a.weights, number_of<double>(a.base), a.M);
      auto ce = theta_M2_nonunif(w, number_of<double>(a.delta));
      ce.report.numerical_distance = optimizer_distance(ce.lattice, w, ce.theta, c.starts, c.seed);
      run.passed = run.passed && ce.exact_identity && ce.weighted_norm <= ce.weighted_norm_bound;
      add(ce.report);
      out << "    stated bound 3|theta(n+1)|/w(n)^2 = " << fmt(ce.stated_bound) << ", weighted norm "
          << fmt(ce.weighted_norm) << " <= " << fmt(ce.weighted_norm_bound) << "\n";
    }
  } else {
    throw PreconditionViolated("unknown family '" + a.family + "'");
  }
  return finish(c, run, run.passed ? kOk : kFailed, out.str());
}

int cmd_counterexamples(const Common& c, const FamilyArgs& a) {
  Run run{"counterexamples"};
  return guarded(c, run, [&] { return c.rational ? run_family<Rational>(c, run, a) : run_family<double>(c, run, a); });
}

int cmd_oracle(const Common& c, const std::string& path) {
  Run run{"oracle"};
  return guarded(c, run, [&] {
    const InputDocument doc = parse_input(read_file(path));
    run.digest = doc.digest;
    const MapDocument& m = require_map(doc);
    const Semilattice& s = doc.lattice;
    const Weight<double> w = doc.weight ? *doc.weight : unit_weight<double>(s.size());
    std::ostringstream out;
    if (m.codomain == MapKind::M2) {
      const OracleResult o = nearest_mult_M2(s, w, m.m2, Norm::HS, c.starts, c.seed);
      run.outputs.push_back(oracle_json(o));
      out << "nearest multiplicative Mat2 map found: distance " << fmt(o.distance)
          << " (upper bound on distance, HS norm, " << c.starts << " starts per cell)\n";
    } else {
      double best = -1;
      std::size_t arg = 0, count = 0;
      if (m.codomain == MapKind::Scalar) {
        const auto maps = enumerate_mult_scalar(s);
        count = maps.size();
        for (std::size_t i = 0; i < maps.size(); ++i) {
          const double d = weighted_sup_distance(w, m.scalar, maps[i], Norm::Abs);
          if (best < 0 || d < best) best = d, arg = i;
        }
      } else {
        const auto maps = enumerate_mult_T2(s);
        count = maps.size();
        for (std::size_t i = 0; i < maps.size(); ++i) {
          const double d = weighted_sup_distance(w, m.t2, maps[i], Norm::T2);
          if (best < 0 || d < best) best = d, arg = i;
        }
      }
      const Json nearest = arg == 0 ? Json("zero") : Json(arg - 1);
      run.outputs.push_back({{"method", "exhaustive"}, {"maps", count}, {"distance", best}, {"nearest_filter", nearest}});
      out << "exhaustive over " << count << " multiplicative maps: distance " << fmt(best) << " (nearest: "
          << (arg == 0 ? std::string("zero map") : "up(" + label(s, static_cast<Index>(arg - 1)) + ")") << ")\n";
    }
    return finish(c, run, kOk, out.str());
  });
}

int cmd_suite(const Common& c, int only) {
  Run run{"suite"};
  SuiteOptions opt;
  opt.seed = c.seed;
  std::vector<CriterionResult> results;
  if (only > 0) results.push_back(run_criterion(only, opt));
  else results = run_acceptance(opt);
  std::ostringstream out;
  for (const auto& r : results) {
    run.passed = run.passed && r.passed;
    Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (c.timing) j["seconds"] = r.seconds;
    run.outputs.push_back(j);
    char head[96];
    std::snprintf(head, sizeof head, "%s criterion %d (%s) %.2fs: ", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds);
    out << head << r.detail << "\n";
  }
  return finish(c, run, run.passed ? kOk : kFailed, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximately multiplicative maps on finite semilattices"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Emit a JSON run report");
  app.add_flag("--rational", common.rational, "Exact rational arithmetic where supported");
  app.add_flag("--timing", common.timing, "Include wall time in reports");
  app.add_option("--seed", common.seed, "Seed for randomized steps");
  app.add_option("--starts", common.starts, "Optimizer starts per oracle cell")->check(CLI::PositiveNumber);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check semilattice axioms and weight submultiplicativity");
  validate->add_option("input", path, "Input JSON document")->required();

  std::size_t samples = 2000;
  auto* invariants = app.add_subcommand("invariants", "Breadth, width and height");
  invariants->add_option("input", path, "Input JSON document")->required();
  invariants->add_option("--samples", samples, "Subsets sampled when breadth is not exhaustive");

  auto* filters = app.add_subcommand("filters", "Enumerate filters");
  filters->add_option("input", path, "Input JSON document")->required();

  std::string norm;
  auto* defect_cmd = app.add_subcommand("defect", "Multiplicative defect of the input map");
  defect_cmd->add_option("input", path, "Input JSON document")->required();
  defect_cmd->add_option("--norm", norm, "abs, t2, hs or op");

  std::string target;
  std::optional<double> delta, epsilon;
  bool oracle = false;
  auto* correct = app.add_subcommand("correct", "Correct the input map to a multiplicative one");
  correct->add_option("input", path, "Input JSON document")->required();
  correct->add_option("--target", target, "scalar, weighted, t2 or m2")->required();
  correct->add_option("--delta", delta, "Defect bound for m2 (defaults to the measured defect)");
  correct->add_option("--epsilon", epsilon, "Tolerance for the weighted correction");
  correct->add_flag("--oracle", oracle, "Cross-check m2 results against the oracle search");

  FamilyArgs fam;
  auto* counter = app.add_subcommand("counterexamples", "Tabulate counterexample families");
  counter->add_option("--family", fam.family, "psi_n, t2, m2 or m2nonunif")->required();
  counter->add_option("--C", fam.C, "Weight base C for psi_n");
  counter->add_option("--blocks", fam.blocks, "Comma-separated block sizes for psi_n");
  counter->add_option("--weights", fam.weights, "Comma-separated weights on N_min");
  counter->add_option("--base", fam.base, "Weight w(n) = base^n when --weights is absent");
  counter->add_option("--M", fam.M, "Truncation of N_min when --weights is absent");
  counter->add_option("--m-from", fam.m_from, "First m for the t2 family");
  counter->add_option("--m-to", fam.m_to, "Last m for the t2 family");
  counter->add_option("--delta", fam.delta, "Target defect for m2 families");

  auto* oracle_cmd = app.add_subcommand("oracle", "Nearest multiplicative map by search");
  oracle_cmd->add_option("input", path, "Input JSON document")->required();

  int criterion = 0;
  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--criterion", criterion, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*validate) return cmd_validate(common, path);
  if (*invariants) return cmd_invariants(common, path, samples);
  if (*filters) return cmd_filters(common, path);
  if (*defect_cmd) return cmd_defect(common, path, norm);
  if (*correct) return cmd_correct(common, path, target, delta, epsilon, oracle);
  if (*counter) return cmd_counterexamples(common, fam);
  if (*oracle_cmd) return cmd_oracle(common, path);
  if (*suite) return cmd_suite(common, criterion);
  return kFailed;
}
