#include "affinekit/topo_suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "affinekit/error.hpp"

namespace affinekit {

namespace {

std::string family_code(const BasisFamily& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    if (i) out += ",";
    out += subset_code(b.sets[i]);
  }
  return out + "}";
}

void absorb_all(Verdict& agg, const TopoReport& rep, const std::string& context) {
  bool pass = true;
  Verdict one;
  for (const auto& v : rep.verdicts) {
    if (v.pass || v.informational) continue;
    if (pass) {
      one = v;
      one.counterexample = v.name + " " + v.counterexample;
    }
    pass = false;
  }
  one.pass = pass;
  absorb(agg, one, context);
}

Verdict expect(std::string name, bool pass, std::string counterexample = {}) {
  Verdict v;
  v.name = std::move(name);
  v.pass = pass;
  if (!pass) {
    v.failures = 1;
    v.counterexample = std::move(counterexample);
  }
  return v;
}

void require_carrier(std::size_t m, std::size_t max, std::string_view suite) {
  if (m == 0 || m > max) {
    throw BudgetError("suite '" + std::string(suite) + "' supports carriers of size 1 to " +
                      std::to_string(max));
  }
}

std::vector<InteriorOperator> distinct_generated(const std::vector<BasisFamily>& pool,
                                                 bool bases_only) {
  std::vector<InteriorOperator> out;
  for (const auto& b : pool) {
    if (bases_only && !is_basis(b)) continue;
    InteriorOperator op = basis_interior(b);
    if (std::find(out.begin(), out.end(), op) == out.end()) out.push_back(std::move(op));
  }
  return out;
}

std::string collection_code(const Collection& c) {
  std::string out;
  for (PairValue v : c) out += to_char(v);
  return out;
}

TopoReport axioms_suite(const SuiteOptions& o, const TopoTables* tables) {
  TopoReport rep;
  if (tables) {
    for (std::size_t i = 0; i < tables->operators.size(); ++i) {
      for (auto v : check_operator_axioms(tables->operators[i], o.level).verdicts) {
        v.name = "operator[" + std::to_string(i) + "]." + v.name;
        rep.verdicts.push_back(v);
      }
    }
    return rep;
  }
  const std::size_t m = o.carrier;
  require_carrier(m, 4, "axioms");
  Verdict id = aggregate_verdict("identity_full");
  absorb_all(id, check_operator_axioms(InteriorOperator::identity(m), AxiomLevel::Full), "");
  rep.verdicts.push_back(id);

  const auto empty = check_operator_axioms(InteriorOperator::constant(m, nothing(m)),
                                           AxiomLevel::Full);
  rep.verdicts.push_back(expect("empty_operator_fails_I4", !empty.find("I4")->pass,
                                "I4 holds for int s = nothing"));

  Verdict moore = aggregate_verdict("basis_generated_moore");
  Verdict full = aggregate_verdict("basis_generated_full");
  const auto pool = basis_pool(m, o.random, o.seed);
  for (const auto& b : pool) {
    const InteriorOperator op = basis_interior(b);
    const std::string ctx = "B=" + family_code(b);
    absorb_all(moore, check_operator_axioms(op, AxiomLevel::Moore), ctx);
    if (is_basis(b)) absorb_all(full, check_operator_axioms(op, AxiomLevel::Full), ctx);
  }
  rep.verdicts.push_back(moore);
  rep.verdicts.push_back(full);
  rep.facts.emplace_back("basis_families", std::to_string(pool.size()));
  rep.facts.emplace_back("bases", std::to_string(full.instances));
  return rep;
}

TopoReport basis_suite(const SuiteOptions& o, const TopoTables* tables) {
  TopoReport rep;
  if (tables) {
    for (std::size_t i = 0; i < tables->bases.size(); ++i) {
      const auto& b = tables->bases[i];
      const std::string tag = "basis[" + std::to_string(i) + "]";
      const bool basis = is_basis(b);
      rep.facts.emplace_back(tag + ".is_basis", basis ? "true" : "false");
      const InteriorOperator op = basis_interior(b);
      rep.facts.emplace_back(tag + ".interior", operator_code(op));
      Verdict moore = aggregate_verdict(tag + ".moore");
      absorb_all(moore, check_operator_axioms(op, AxiomLevel::Moore), "");
      rep.verdicts.push_back(moore);
      if (basis) {
        Verdict full = aggregate_verdict(tag + ".full");
        absorb_all(full, check_operator_axioms(op, AxiomLevel::Full), "");
        rep.verdicts.push_back(full);
      }
    }
    return rep;
  }
  const std::size_t m = o.carrier;
  require_carrier(m, 4, "basis");
  const BasisFamily singles = singleton_basis(m);
  rep.verdicts.push_back(expect("singletons_is_basis", is_basis(singles)));
  Verdict sfull = aggregate_verdict("singletons_full");
  absorb_all(sfull, check_operator_axioms(basis_interior(singles), AxiomLevel::Full), "");
  rep.verdicts.push_back(sfull);
  rep.verdicts.push_back(expect("empty_family_not_basis", !is_basis(BasisFamily{m, {}})));
  const BasisFamily whole_family{m, {whole(m)}};
  rep.verdicts.push_back(expect("whole_is_basis", is_basis(whole_family)));
  rep.facts.emplace_back("whole_interior", operator_code(basis_interior(whole_family)));

  std::size_t bases = 0;
  const auto pool = basis_pool(m, o.random, o.seed);
  for (const auto& b : pool) bases += is_basis(b) ? 1 : 0;
  rep.facts.emplace_back("basis_families", std::to_string(pool.size()));
  rep.facts.emplace_back("bases", std::to_string(bases));
  return rep;
}

TopoReport correspondence_suite(const SuiteOptions& o, const TopoTables* tables) {
  std::vector<InteriorOperator> ops;
  std::size_t m = o.carrier;
  if (tables) {
    ops = tables->operators;
    m = tables->carrier;
  } else {
    require_carrier(m, 3, "correspondence");
    ops.push_back(InteriorOperator::identity(m));
    for (auto& op : distinct_generated(basis_pool(m, o.random, o.seed), false)) {
      if (std::find(ops.begin(), ops.end(), op) == ops.end()) ops.push_back(std::move(op));
    }
  }
  require_carrier(m, 3, "correspondence");
  const std::size_t max_family = m <= 2 ? 3 : 2;
  Verdict o1 = aggregate_verdict("O1"), o2 = aggregate_verdict("O2");
  Verdict rt = aggregate_verdict("roundtrip"), uo = aggregate_verdict("union_of_opens");
  Verdict cd = aggregate_verdict("closure_duality");
  for (const auto& op : ops) {
    const std::string ctx = "int=" + operator_code(op);
    const TopoReport r = roundtrip_check(op);
    absorb(o1, *r.find("O1"), ctx);
    absorb(o2, *r.find("O2"), ctx);
    absorb(rt, *r.find("roundtrip"), ctx);
    absorb(uo, union_of_opens_check(op, max_family).verdicts.front(), ctx);
    absorb(cd, closure_duality_check(op).verdicts.front(), ctx);
  }
  TopoReport rep;
  rep.verdicts = {o1, o2, rt, uo, cd};
  rep.facts.emplace_back("operators", std::to_string(ops.size()));
  return rep;
}

TopoReport product_suite(const SuiteOptions& o, const TopoTables* tables) {
  std::vector<InteriorOperator> factors;
  TopoReport rep;
  if (tables) {
    factors = tables->operators;
    require_carrier(tables->carrier, 2, "product");
  } else {
    require_carrier(o.carrier, 2, "product");
    const std::size_t m = o.carrier;
    const InteriorOperator id = InteriorOperator::identity(m);
    rep.verdicts.push_back(
        expect("discrete_tensor_is_discrete",
               product_interior(id, id, ProductFlavor::Tensor) == InteriorOperator::identity(m * m)));
    factors.push_back(id);
    for (auto& op : distinct_generated(basis_pool(m, o.random, o.seed), true)) {
      if (std::find(factors.begin(), factors.end(), op) == factors.end()) {
        factors.push_back(std::move(op));
      }
    }
  }
  for (auto flavor : {ProductFlavor::Tensor, ProductFlavor::With}) {
    const std::string prefix = flavor == ProductFlavor::Tensor ? "tensor." : "with.";
    std::vector<Verdict> agg;
    for (Axiom a : axioms_for(AxiomLevel::Full)) {
      agg.push_back(aggregate_verdict(prefix + "preserves_" + axiom_name(a)));
    }
    for (const auto& x : factors) {
      for (const auto& y : factors) {
        const TopoReport r = product_axiom_check(x, y, flavor);
        const std::string ctx = "X=" + operator_code(x) + " Y=" + operator_code(y);
        for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
          agg[i].informational = r.verdicts[i].informational;
          absorb(agg[i], r.verdicts[i], ctx);
        }
      }
    }
    rep.verdicts.insert(rep.verdicts.end(), agg.begin(), agg.end());
  }
  rep.facts.emplace_back("factors", std::to_string(factors.size()));
  return rep;
}

TopoReport filters_suite(const SuiteOptions& o, const TopoTables* tables) {
  TopoReport rep;
  if (tables) {
    require_carrier(tables->carrier, 2, "filters");
    for (std::size_t i = 0; i < tables->filters.size(); ++i) {
      const PairValue v = filter_value(tables->carrier, tables->filters[i]);
      Verdict verdict = expect("filter[" + std::to_string(i) + "]", v.pos,
                               "Fil is " + std::string(to_word(v)));
      verdict.value = v;
      rep.verdicts.push_back(verdict);
    }
    return rep;
  }
  const std::size_t m = o.carrier;
  require_carrier(m, 2, "filters");
  const std::size_t n = subset_count(m);
  rep.facts.emplace_back("filter_count", std::to_string(enumerate_filters(m).size()));
  Filter3 principal(n, kUndetermined);
  principal.back() = kProven;
  rep.verdicts.push_back(expect("whole_only_filter", is_filter(m, principal)));
  rep.verdicts.push_back(expect("all_pos_filter", is_filter(m, Filter3(n, kProven))));
  Verdict lemma = aggregate_verdict("isfilter_lemma");
  std::vector<Subset3> subs;
  for (std::size_t i = 0; i < n; ++i) subs.push_back(subset_from_index(i, m));
  for (std::size_t k = 0; k <= 2; ++k) {
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<Subset3> fam;
      for (std::size_t i : pick) fam.push_back(subs[i]);
      const Filter3 f = filter_from_family(m, fam);
      const PairValue v = filter_value(m, f);
      Verdict one = expect("isfilter_lemma", v.pos, "F=" + collection_code(f));
      absorb(lemma, one, "U=" + family_code(BasisFamily{m, fam}));
      std::size_t i = k;
      while (i > 0 && ++pick[i - 1] == n) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  rep.verdicts.push_back(lemma);
  return rep;
}

TopoReport compact_suite(const SuiteOptions& o, const TopoTables* tables) {
  TopoReport rep;
  if (tables) {
    const std::size_t m = tables->carrier;
    require_carrier(m, 2, "compact");
    const auto filters = enumerate_filters(m);
    for (std::size_t i = 0; i < tables->operators.size(); ++i) {
      const auto table = compactness_table(tables->operators[i], filters);
      std::string line;
      for (std::size_t s = 0; s < table.size(); ++s) {
        const Subset3 sub = subset_from_index(s, m);
        if (!tables->subsets.empty() &&
            std::find(tables->subsets.begin(), tables->subsets.end(), sub) ==
                tables->subsets.end()) {
          continue;
        }
        if (!line.empty()) line += ' ';
        line += subset_code(sub) + ":" + std::string(to_word(table[s]));
      }
      rep.facts.emplace_back("operator[" + std::to_string(i) + "].Cpt", line);
    }
    return rep;
  }
  require_carrier(o.carrier, 2, "compact");
  CompactnessOptions c;
  c.max_carrier = o.carrier;
  c.random_operators = o.random;
  c.seed = o.seed;
  rep = check_compactness_props(c);
  for (std::size_t m = 1; m <= o.carrier; ++m) {
    rep.facts.emplace_back("filter_count_m" + std::to_string(m),
                           std::to_string(enumerate_filters(m).size()));
  }
  return rep;
}

}  // namespace

std::vector<BasisFamily> basis_pool(std::size_t m, std::size_t random_count, std::uint64_t seed) {
  if (m == 0 || m > 4) throw BudgetError("basis pools support carriers of size 1 to 4");
  const std::size_t n = subset_count(m);
  std::vector<BasisFamily> out;
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](std::vector<std::size_t> key) {
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    BasisFamily b{m, {}};
    for (std::size_t i : key) b.sets.push_back(subset_from_index(i, m));
    out.push_back(std::move(b));
  };
  add({});
  for (std::size_t i = 0; i < n; ++i) add({i});
  if (m <= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) add({i, j});
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t r = 0; r < random_count; ++r) add({pick(rng), pick(rng), pick(rng)});
  return out;
}

BasisFamily singleton_basis(std::size_t m) {
  BasisFamily b{m, {}};
  for (std::size_t i = 0; i < m; ++i) {
    Subset3 s = unknown(m);
    s[i] = kProven;
    b.sets.push_back(s);
  }
  return b;
}

const std::vector<std::string_view>& topo_suite_names() {
  static const std::vector<std::string_view> names{"axioms",  "correspondence", "basis",
                                                   "product", "filters",        "compact"};
  return names;
}

TopoReport run_topo_suite(std::string_view suite, const SuiteOptions& options,
                          const TopoTables* tables) {
  if (suite == "axioms") return axioms_suite(options, tables);
  if (suite == "correspondence") return correspondence_suite(options, tables);
  if (suite == "basis") return basis_suite(options, tables);
  if (suite == "product") return product_suite(options, tables);
  if (suite == "filters") return filters_suite(options, tables);
  if (suite == "compact") return compact_suite(options, tables);
  throw Error("unknown topo suite '" + std::string(suite) + "'");
}

}  // namespace affinekit
