#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affinekit/antithesis.hpp"
#include "affinekit/error.hpp"
#include "affinekit/heine_borel.hpp"
#include "affinekit/interval_lemmas.hpp"
#include "affinekit/model_io.hpp"
#include "affinekit/parser.hpp"
#include "affinekit/semantics.hpp"
#include "affinekit/topo_suites.hpp"
#include "report.hpp"

using namespace affinekit;
using affinekit::cli::Json;
using affinekit::cli::RunReport;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

Json pair_json(PairValue v) {
  return Json{{"value", std::string(to_word(v))}, {"pos", v.pos}, {"neg", v.neg}};
}

// translate
struct TranslateArgs {
  std::string formula;
  std::string part = "both";
  bool simplify = false;
};

void run_translate(const TranslateArgs& a, RunReport& r) {
  const AffineFormula f = parse_affine(a.formula);
  TranslationPair t = translate(f);
  if (a.simplify) t = {affinekit::simplify(t.pos), affinekit::simplify(t.neg)};
  if (a.part != "neg") r.field("pos", render(t.pos));
  if (a.part != "pos") r.field("neg", render(t.neg));
  r.bare = a.part != "both";
}

// eval
struct EvalArgs {
  std::string formula;
  std::string model;
  std::string mode = "both";
};

void run_eval(const EvalArgs& a, RunReport& r) {
  const AffineFormula f = parse_affine(a.formula, ParseMode::Closed);
  const Interpretation m = load_interpretation(a.model);
  std::optional<PairValue> pair, translated;
  if (a.mode != "translated") {
    pair = eval_pair(f, m);
    r.field("pair", pair_json(*pair));
    r.check("disjoint", pair->disjoint(), "pair value is both pos and neg");
  }
  if (a.mode != "pair") {
    const TranslationPair t = translate(f);
    translated = PairValue{eval_classical(t.pos, m), eval_classical(t.neg, m)};
    r.field("translated", pair_json(*translated));
  }
  if (pair && translated) {
    r.check("agreement", *pair == *translated,
            "pair " + std::string(to_word(*pair)) + " vs translated " +
                std::string(to_word(*translated)));
  }
}

// selfcheck
void run_selfcheck(const OracleOptions& o, RunReport& r) {
  const OracleReport rep = equivalence_oracle(o);
  r.field("depth", o.max_depth);
  r.field("atoms", o.atom_count);
  r.field("carrier", o.carrier_size);
  r.field("formulas", rep.formulas);
  r.field("explicit_formulas", rep.explicit_formulas);
  r.field("assignments", rep.assignments);
  r.field("comparisons", rep.checks);
  r.field("classes", rep.classes);
  r.field("mismatches", rep.mismatches);
  std::string detail;
  if (rep.first_counterexample) {
    const auto& c = *rep.first_counterexample;
    detail = c.formula + " under " + c.assignment + ": pair " + std::string(to_word(c.pair)) +
             ", classical (" + (c.classical_pos ? "true" : "false") + ", " +
             (c.classical_neg ? "true" : "false") + ")";
  }
  r.check("oracle_identity", rep.ok(), detail);
}

// lemmas
struct LemmaArgs {
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

void run_lemmas(const LemmaArgs& a, RunReport& r) {
  LemmaReport rep = lemma_suite();
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  for (std::size_t i = 0; i < a.random; ++i) {
    const Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
    LemmaReport part = lemma_suite_for(x, y, z);
    rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
  }
  r.field("checks", rep.checks.size());
  r.field("failures", rep.failures());
  for (const auto& c : rep.checks) {
    r.check(c.lemma + " " + c.instance, c.pass, c.pass ? "" : "witness " + c.witness);
  }
}

// cover
struct CoverArgs {
  std::string spec;
  bool verify = false;
};

void run_cover(const CoverArgs& a, RunReport& r) {
  const CoverProblem p = CoverProblem::parse(a.spec);
  const CoverDecision d = decide_cover(p);
  const SubcoverResult s = a.verify ? extract_and_verify(p) : extract_subcover(p);
  r.field("covered", d.covered);
  r.field("witness", d.witness ? Json(d.witness->str()) : Json(nullptr));
  r.field("indices", s.indices);
  Json chain = Json::array();
  for (const auto& c : s.chain) chain.push_back(c.str());
  r.field("chain", chain);
  if (s.stuck) r.field("stuck", s.stuck->str());
  if (a.verify) r.field("verified", s.verified);
  r.check("decision_matches_sweep", d.covered == s.success);
  r.check("subcover", s.success, s.stuck ? "uncovered point " + s.stuck->str() : "");
  if (a.verify && s.success) r.check("inclusion", s.verified, "grid inclusion failed");
}

// topo
struct TopoArgs {
  std::string suite;
  std::size_t carrier = 2;
  std::string tables;
  std::string level = "full";
  std::uint64_t seed = 7;
  std::size_t random = 6;
};

void run_topo(const TopoArgs& a, bool carrier_given, RunReport& r) {
  SuiteOptions o;
  o.carrier = a.carrier;
  o.seed = a.seed;
  o.random = a.random;
  o.level = a.level == "moore" ? AxiomLevel::Moore
                               : (a.level == "cech" ? AxiomLevel::Cech : AxiomLevel::Full);
  std::optional<TopoTables> tables;
  if (!a.tables.empty()) {
    tables = load_topo_tables(a.tables);
    if (carrier_given && tables->carrier != a.carrier) {
      throw ParseError("--carrier " + std::to_string(a.carrier) + " disagrees with the tables' carrier " +
                           std::to_string(tables->carrier),
                       1, 1);
    }
    o.carrier = tables->carrier;
  }
  r.field("suite", a.suite);
  r.field("carrier", o.carrier);
  r.add(run_topo_suite(a.suite, o, tables ? &*tables : nullptr));
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affinekit: affine-logic translation, pair semantics, cuts, covers and finite topology"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  TranslateArgs ta;
  auto* translate_cmd = app.add_subcommand("translate", "Antithesis translation of a formula");
  translate_cmd->add_option("--formula", ta.formula, "Affine formula")->required();
  translate_cmd->add_option("--part", ta.part, "pos, neg or both")
      ->check(CLI::IsMember({"pos", "neg", "both"}));
  translate_cmd->add_flag("--simplify", ta.simplify, "Drop conjuncts implied by disjointness");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a closed formula in a finite model");
  eval_cmd->add_option("--formula", ea.formula, "Closed affine formula")->required();
  eval_cmd->add_option("--model", ea.model, "Interpretation JSON file")->required();
  eval_cmd->add_option("--mode", ea.mode, "pair, translated or both")
      ->check(CLI::IsMember({"pair", "translated", "both"}));

  OracleOptions oo;
  auto* self_cmd = app.add_subcommand("selfcheck", "Exhaustive pair/translation oracle");
  self_cmd->add_option("--depth", oo.max_depth, "Maximum formula depth (<= 3)");
  self_cmd->add_option("--atoms", oo.atom_count, "Number of atoms (<= 2)");
  self_cmd->add_option("--carrier", oo.carrier_size, "0 for propositional atoms, else carrier size (<= 2)");
  self_cmd->add_option("--samples", oo.random_samples, "Extra random top-depth formulas");
  self_cmd->add_option("--seed", oo.seed, "Seed for the random samples");

  LemmaArgs la;
  auto* lemma_cmd = app.add_subcommand("lemmas", "Interval lemma suite over cut grids");
  lemma_cmd->add_option("--random", la.random, "Additional random rational triples");
  lemma_cmd->add_option("--seed", la.seed, "Seed for the random triples");

  CoverArgs ca;
  auto* cover_cmd = app.add_subcommand("cover", "Finite subcover of [a,b] by open intervals");
  cover_cmd->add_option("--spec", ca.spec, "\"a b ; q r ; ...\"")->required();
  cover_cmd->add_flag("--verify", ca.verify, "Check the subcover inclusion over the cut grid");

  TopoArgs tp;
  auto* topo_cmd = app.add_subcommand("topo", "Finite topology checks");
  std::vector<std::string> suites;
  for (auto s : topo_suite_names()) suites.emplace_back(s);
  topo_cmd->add_option("--suite", tp.suite, "Suite to run")->required()->check(CLI::IsMember(suites));
  auto* carrier_opt = topo_cmd->add_option("--carrier", tp.carrier, "Carrier size");
  topo_cmd->add_option("--tables", tp.tables, "Topo tables JSON file");
  topo_cmd->add_option("--level", tp.level, "Axiom level for supplied operators")
      ->check(CLI::IsMember({"moore", "cech", "full"}));
  topo_cmd->add_option("--seed", tp.seed, "Seed for random pool members");
  topo_cmd->add_option("--random", tp.random, "Random pool members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunReport report;
  report.command = echo(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*translate_cmd) run_translate(ta, report);
    if (*eval_cmd) run_eval(ea, report);
    if (*self_cmd) run_selfcheck(oo, report);
    if (*lemma_cmd) run_lemmas(la, report);
    if (*cover_cmd) run_cover(ca, report);
    if (*topo_cmd) run_topo(tp, carrier_opt->count() > 0, report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json) {
      std::cout << Json{{"command", report.command}, {"ok", false}, {"error", e.what()}}.dump(2)
                << "\n";
    }
    return kExitUsage;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (json ? report.to_json() : report.to_text());
  return report.ok() ? kExitOk : kExitFailed;
}
