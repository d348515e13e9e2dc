#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affinekit/antithesis.hpp"
#include "affinekit/error.hpp"
#include "affinekit/heine_borel.hpp"
#include "affinekit/interval_lemmas.hpp"
#include "affinekit/model_io.hpp"
#include "affinekit/parser.hpp"
#include "affinekit/semantics.hpp"
#include "affinekit/topo_suites.hpp"

namespace py = pybind11;
using namespace affinekit;

namespace {

py::dict report_dict(const TopoReport& rep) {
  py::list verdicts;
  for (const auto& v : rep.verdicts) {
    py::dict d;
    d["name"] = v.name;
    d["pass"] = v.pass;
    d["value"] = std::string(to_word(v.value));
    d["instances"] = v.instances;
    d["failures"] = v.failures;
    d["informational"] = v.informational;
    d["counterexample"] = v.counterexample;
    verdicts.append(d);
  }
  py::dict facts;
  for (const auto& [k, v] : rep.facts) facts[py::str(k)] = v;
  py::dict out;
  out["ok"] = rep.ok();
  out["verdicts"] = verdicts;
  out["facts"] = facts;
  return out;
}

AffineFormula as_formula(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse_affine(f.cast<std::string>());
  return f.cast<AffineFormula>();
}

Filter3 filter_from_codes(const std::string& codes) {
  Filter3 f;
  for (char c : codes) {
    if (c == 'p') f.push_back(kProven);
    else if (c == 'n') f.push_back(kRefuted);
    else if (c == 'u') f.push_back(kUndetermined);
    else throw Error("filter codes use p, n and u");
  }
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine-logic antithesis translation, pair semantics, cuts and finite topology";

  // Translators run newest first, so the base class is registered first.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<EvalError>(m, "EvalError", base.ptr());

  py::class_<PairValue>(m, "PairValue")
      .def(py::init<bool, bool>(), py::arg("pos"), py::arg("neg"))
      .def_readonly("pos", &PairValue::pos)
      .def_readonly("neg", &PairValue::neg)
      .def_property_readonly("word", [](PairValue v) { return std::string(to_word(v)); })
      .def("disjoint", &PairValue::disjoint)
      .def("__eq__", [](PairValue a, PairValue b) { return a == b; })
      .def("__hash__", [](PairValue v) { return (v.pos ? 2 : 0) + (v.neg ? 1 : 0); })
      .def("__repr__", [](PairValue v) { return "PairValue(" + std::string(to_word(v)) + ")"; });
  m.attr("PROVEN") = kProven;
  m.attr("REFUTED") = kRefuted;
  m.attr("UNDETERMINED") = kUndetermined;

  m.def("tensor", [](PairValue a, PairValue b) { return tensor(a, b); });
  m.def("par", [](PairValue a, PairValue b) { return par(a, b); });
  m.def("with_", [](PairValue a, PairValue b) { return with(a, b); });
  m.def("plus", [](PairValue a, PairValue b) { return plus(a, b); });
  m.def("lollipop", [](PairValue a, PairValue b) { return lollipop(a, b); });
  m.def("negate", [](PairValue a) { return negate(a); });
  m.def("of_course", [](PairValue a) { return of_course(a); });
  m.def("why_not", [](PairValue a) { return why_not(a); });

  py::class_<AffineFormula>(m, "Formula")
      .def("__str__", [](const AffineFormula& f) { return render(f); })
      .def("__repr__", [](const AffineFormula& f) { return "Formula(" + render(f) + ")"; })
      .def("__eq__", [](const AffineFormula& a, const AffineFormula& b) { return a == b; })
      .def_property_readonly("size", &AffineFormula::size)
      .def_property_readonly("depth", &AffineFormula::depth)
      .def("free_vars", [](const AffineFormula& f) { return free_vars(f); })
      .def("desugar", [](const AffineFormula& f) { return desugar(f); });

  m.def("parse", [](const std::string& text, bool closed) {
    return parse_affine(text, closed ? ParseMode::Closed : ParseMode::Open);
  }, py::arg("text"), py::arg("closed") = false);

  m.def("translate", [](const py::object& f, bool simplified) {
    TranslationPair t = translate(as_formula(f));
    if (simplified) t = {simplify(t.pos), simplify(t.neg)};
    return py::make_tuple(render(t.pos), render(t.neg));
  }, py::arg("formula"), py::arg("simplify") = false,
     "Positive and negative parts of the translation, rendered");

  py::class_<Interpretation>(m, "Interpretation")
      .def_static("from_json", &parse_interpretation)
      .def_static("load", &load_interpretation)
      .def("to_json", &interpretation_to_json)
      .def("sort_size", &Interpretation::sort_size);

  m.def("eval_pair", [](const py::object& f, const Interpretation& model) {
    return eval_pair(as_formula(f), model);
  });
  m.def("eval_translated", [](const py::object& f, const Interpretation& model) {
    const TranslationPair t = translate(as_formula(f));
    return PairValue{eval_classical(t.pos, model), eval_classical(t.neg, model)};
  });
  m.def("check_disjointness", [](const py::object& f, const Interpretation& model) {
    const auto rep = check_disjointness(as_formula(f), model);
    py::dict d;
    d["ok"] = rep.ok();
    d["evaluations"] = rep.evaluations;
    d["violations"] = rep.violation_count;
    return d;
  });
  m.def("equivalence_oracle", [](int depth, int atoms, int carrier, std::size_t samples,
                                 std::uint64_t seed) {
    OracleOptions o{depth, atoms, carrier, samples, seed};
    const auto rep = equivalence_oracle(o);
    py::dict d;
    d["ok"] = rep.ok();
    d["formulas"] = rep.formulas;
    d["assignments"] = rep.assignments;
    d["checks"] = rep.checks;
    d["mismatches"] = rep.mismatches;
    return d;
  }, py::arg("depth") = 2, py::arg("atoms") = 2, py::arg("carrier") = 0,
     py::arg("samples") = 0, py::arg("seed") = 1);

  m.def("cover", [](const std::string& spec, bool verify) {
    const CoverProblem p = CoverProblem::parse(spec);
    const CoverDecision d = decide_cover(p);
    const SubcoverResult s = verify ? extract_and_verify(p) : extract_subcover(p);
    py::dict out;
    out["covered"] = d.covered;
    out["witness"] = d.witness ? py::object(py::str(d.witness->str())) : py::object(py::none());
    out["indices"] = s.indices;
    py::list chain;
    for (const auto& c : s.chain) chain.append(c.str());
    out["chain"] = chain;
    if (verify) out["verified"] = s.verified;
    out["reflection_agrees"] = decide_cover(reflect(p)).covered == d.covered;
    return out;
  }, py::arg("spec"), py::arg("verify") = false,
     "Decide and extract a finite subcover for \"a b ; q r ; ...\"");

  m.def("lemma_suite", []() {
    py::list out;
    for (const auto& c : lemma_suite().checks) {
      py::dict d;
      d["lemma"] = c.lemma;
      d["instance"] = c.instance;
      d["pass"] = c.pass;
      d["witness"] = c.witness;
      out.append(d);
    }
    return out;
  });

  m.def("topo_suite", [](const std::string& name, std::size_t carrier, std::uint64_t seed,
                         std::size_t random, std::optional<std::string> tables_json) {
    SuiteOptions o;
    o.carrier = carrier;
    o.seed = seed;
    o.random = random;
    std::optional<TopoTables> tables;
    if (tables_json) {
      tables = parse_topo_tables(*tables_json);
      o.carrier = tables->carrier;
    }
    return report_dict(run_topo_suite(name, o, tables ? &*tables : nullptr));
  }, py::arg("name"), py::arg("carrier") = 2, py::arg("seed") = 7, py::arg("random") = 6,
     py::arg("tables_json") = py::none());
  m.def("topo_suite_names", []() {
    std::vector<std::string> out;
    for (auto s : topo_suite_names()) out.emplace_back(s);
    return out;
  });

  m.def("basis_interior", [](const std::vector<std::string>& codes, std::size_t carrier) {
    BasisFamily b{carrier, {}};
    for (const auto& c : codes) {
      b.sets.push_back(subset_from_code(c));
      if (b.sets.back().size() != carrier) throw Error("basis set " + c + " has the wrong size");
    }
    return operator_code(basis_interior(b));
  }, py::arg("codes"), py::arg("carrier"), "Interior operator of a basis family as a table code");
  m.def("is_filter", [](const std::string& codes, std::size_t carrier) {
    return is_filter(carrier, filter_from_codes(codes));
  }, py::arg("codes"), py::arg("carrier"));
  m.def("filter_count", [](std::size_t carrier) { return enumerate_filters(carrier).size(); });
  m.def("compactness_props", []() { return report_dict(check_compactness_props()); });
}
