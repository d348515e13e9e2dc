#include <random>
#include <string>

#include <doctest.h>

#include "affinekit/antithesis.hpp"
#include "affinekit/error.hpp"
#include "affinekit/parser.hpp"
#include "affinekit/semantics.hpp"
#include "affinekit/topo.hpp"
#include "affinekit/topo_suites.hpp"

using namespace affinekit;

namespace {

Subset3 S(std::string_view code) { return subset_from_code(code); }

InteriorOperator from_code(std::size_t m, const std::string& code) {
  InteriorOperator op;
  op.m = m;
  std::size_t start = 0;
  while (start <= code.size()) {
    const std::size_t dot = std::min(code.find('.', start), code.size());
    op.table.push_back(S(code.substr(start, dot - start)));
    start = dot + 1;
  }
  return op;
}

Filter3 filter_from_codes(std::string_view codes) {
  Filter3 f;
  for (char c : codes) f.push_back(c == 'p' ? kProven : (c == 'n' ? kRefuted : kUndetermined));
  return f;
}

// Carrier of size one with every one of the 27 tables as a filter candidate.
// Fil and Cpt are translated and evaluated classically.
struct ClassicalCompactness {
  Interpretation m;
  std::vector<Filter3> candidates;

  explicit ClassicalCompactness(const InteriorOperator& op) {
    const std::vector<Subset3> subs{S("n"), S("u"), S("p")};
    for (std::size_t i = 0; i < 27; ++i) {
      candidates.push_back({from_digit(i % 3), from_digit(i / 3 % 3), from_digit(i / 9)});
    }
    m.add_sort("X", 1);
    m.add_sort("P", 3);
    m.add_sort("Fl", 27);
    std::vector<PairValue> mem, cl, f, fc, fm;
    for (const auto& s : subs) {
      mem.push_back(s[0]);
      cl.push_back(closure(op, s)[0]);
    }
    for (const auto& c : candidates) {
      for (const auto& s : subs) {
        f.push_back(c[subset_index(s)]);
        fc.push_back(c[subset_index(complement(s))]);
        for (const auto& t : subs) fm.push_back(c[subset_index(mult_intersection(s, t))]);
      }
    }
    m.add_atom("mem", {"X", "P"}, mem);
    m.add_atom("cl", {"X", "P"}, cl);
    m.add_atom("F", {"Fl", "P"}, f);
    m.add_atom("Fc", {"Fl", "P"}, fc);
    m.add_atom("Fm", {"Fl", "P", "P"}, fm);
    const auto fil = translate(parse_affine(
        "!((forall s:P. forall t:P. F(f,s) -o (forall x:X. mem(x,s) -o mem(x,t)) -o F(f,t)) * "
        "F(f,2) * (forall s:P. forall t:P. F(f,s) * F(f,t) -o Fm(f,s,t)))"));
    std::vector<PairValue> fil_values;
    for (std::size_t i = 0; i < 27; ++i) {
      const Env env{{"f", "Fl", i}};
      fil_values.push_back({eval_classical(fil.pos, m, env), eval_classical(fil.neg, m, env)});
    }
    m.add_atom("Fil", {"Fl"}, fil_values);
  }

  bool is_filter(std::size_t i) const { return m.atom("Fil").values[i] == kProven; }

  PairValue cpt(const Subset3& s) const {
    const auto t = translate(parse_affine(
        "forall f:Fl. Fil(f) -o ~Fc(f,s) -o "
        "(exists x:X. mem(x,s) * !(forall t:P. F(f,t) -o cl(x,t)))"));
    const Env env{{"s", "P", subset_index(s)}};
    return {eval_classical(t.pos, m, env), eval_classical(t.neg, m, env)};
  }
};

}  // namespace

TEST_SUITE("topo") {
  TEST_CASE("identity satisfies every axiom") {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto rep = check_operator_axioms(InteriorOperator::identity(m), AxiomLevel::Full);
      CHECK(rep.ok());
      CHECK(rep.verdicts.size() == 5);
    }
    CHECK(axioms_for(AxiomLevel::Moore).size() == 3);
    CHECK(axioms_for(AxiomLevel::Cech).size() == 4);
    CHECK(axiom_name(Axiom::I4) == "I4");
  }

  TEST_CASE("the empty operator fails only I4") {
    const auto rep = check_operator_axioms(InteriorOperator::constant(2, S("nn")), AxiomLevel::Full);
    CHECK_FALSE(rep.ok());
    for (const auto& v : rep.verdicts) CHECK(v.pass == (v.name != "I4"));
    CHECK(rep.find("I4")->value == kRefuted);
  }

  TEST_CASE("operator validation") {
    InteriorOperator bad = InteriorOperator::identity(1);
    bad.table.pop_back();
    CHECK_THROWS_AS(check_operator_axioms(bad, AxiomLevel::Full), Error);
  }

  TEST_CASE("closure of the identity is the identity") {
    const auto id = InteriorOperator::identity(2);
    for (std::size_t i = 0; i < 9; ++i) {
      const Subset3 s = subset_from_index(i, 2);
      CHECK(closure(id, s) == s);
    }
  }

  TEST_CASE("basis interiors") {
    const BasisFamily whole_only{2, {S("pp")}};
    CHECK(operator_code(basis_interior(whole_only)) == "nn.nn.nn.nn.uu.uu.nn.uu.pp");
    CHECK(is_basis(whole_only));
    CHECK(is_basis(singleton_basis(3)));
    CHECK(check_operator_axioms(basis_interior(singleton_basis(3)), AxiomLevel::Full).ok());
    const BasisFamily empty{2, {}};
    CHECK_FALSE(is_basis(empty));
    CHECK(basis_conditions(empty).find("basis_cover")->value == kRefuted);
    CHECK(basis_conditions(empty).find("basis_intersection")->pass);
  }

  TEST_CASE("basis-generated operators are Moore, and full when the family is a basis") {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& b : basis_pool(m, 4, 99)) {
        const auto op = basis_interior(b);
        REQUIRE(check_operator_axioms(op, AxiomLevel::Moore).ok());
        if (is_basis(b)) REQUIRE(check_operator_axioms(op, AxiomLevel::Full).ok());
      }
    }
  }

  TEST_CASE("opens round trip") {
    for (const auto& b : basis_pool(2, 4, 5)) {
      const auto op = basis_interior(b);
      REQUIRE(roundtrip_check(op).ok());
      REQUIRE(union_of_opens_check(op, 2).ok());
      REQUIRE(closure_duality_check(op).ok());
    }
    const Collection opens = opens_from_interior(InteriorOperator::identity(1));
    CHECK(opens == Collection{kProven, kProven, kProven});
    CHECK(interior_from_opens(1, opens) == InteriorOperator::identity(1));
    CHECK_THROWS_AS(union_of_opens_check(InteriorOperator::identity(1), 4), BudgetError);
  }

  TEST_CASE("Moore operators round trip while a non-monotone one breaks it") {
    std::size_t moore = 0, broken = 0;
    for (std::size_t code = 0; code < 27; ++code) {
      InteriorOperator op;
      op.m = 1;
      for (std::size_t i = 0, c = code; i < 3; ++i, c /= 3) op.table.push_back(subset_from_index(c % 3, 1));
      const bool is_moore = check_operator_axioms(op, AxiomLevel::Moore).ok();
      const bool round = roundtrip_check(op).ok();
      if (is_moore) {
        ++moore;
        REQUIRE(round);
      }
      if (!check_axioms(op, std::vector<Axiom>{Axiom::I2}).ok() && !round) ++broken;
    }
    CHECK(moore > 0);
    CHECK(broken > 0);
  }

  TEST_CASE("products") {
    const auto id = InteriorOperator::identity(1);
    CHECK(product_interior(id, InteriorOperator::identity(2), ProductFlavor::Tensor) ==
          InteriorOperator::identity(2));
    const auto x = from_code(2, "nn.un.un.nn.un.un.nn.un.un");
    const auto y = from_code(2, "nn.un.un.nn.un.pu.nn.un.pu");
    CHECK(check_axioms(x, std::vector<Axiom>{Axiom::I3}).ok());
    CHECK(check_axioms(y, std::vector<Axiom>{Axiom::I3}).ok());
    const auto rep = product_axiom_check(x, y, ProductFlavor::With);
    const Verdict* i3 = rep.find("preserves_I3");
    REQUIRE(i3);
    CHECK_FALSE(i3->pass);
    CHECK(i3->informational);
    CHECK(i3->counterexample.find("s=uunn, x=0 (und)") != std::string::npos);
    CHECK(rep.ok());
    CHECK(product_axiom_check(x, y, ProductFlavor::Tensor).ok());
    CHECK_THROWS_AS(product_interior(InteriorOperator::identity(3), InteriorOperator::identity(2),
                                     ProductFlavor::Tensor),
                    BudgetError);
  }

  TEST_CASE("filters") {
    CHECK(enumerate_filters(1).size() == 3);
    CHECK(enumerate_filters(2).size() == 15);
    CHECK(is_filter(1, filter_from_codes("nup")));
    CHECK(is_filter(1, filter_from_codes("ppp")));
    CHECK_FALSE(is_filter(1, filter_from_codes("nnp")));
    CHECK(is_filter(2, filter_from_codes("uuuuuuuup")));
    CHECK_FALSE(is_filter(2, filter_from_codes("nnnnnnnnp")));
    CHECK(filter_value(1, filter_from_codes("nnn")) == kRefuted);
    CHECK_THROWS_AS(enumerate_filters(3), BudgetError);
    CHECK_THROWS_AS(enumerate_filters(0), BudgetError);
  }

  TEST_CASE("filters from families satisfy the filter axioms") {
    for (const auto& b : basis_pool(2, 0, 1)) {
      if (b.sets.size() > 2) continue;
      REQUIRE(is_filter(2, filter_from_family(2, b.sets)));
    }
  }

  TEST_CASE("compactness regressions") {
    const auto id1 = InteriorOperator::identity(1);
    CHECK(compactness_value(id1, S("p"), enumerate_filters(1)) == kUndetermined);
    CHECK(compactness_value(id1, S("n"), enumerate_filters(1)) == kProven);
    const auto id2 = InteriorOperator::identity(2);
    CHECK(is_compact_bruteforce(id2, S("nn")));
    CHECK_FALSE(is_compact_bruteforce(id2, S("pp")));
    CHECK_FALSE(is_compact_bruteforce(id2, S("uu")));
    CHECK_FALSE(is_compact_bruteforce(id2, S("pu")));
  }

  TEST_CASE("compactness against the classical reading of the translation") {
    for (std::size_t code = 0; code < 27; code += 2) {
      InteriorOperator op;
      op.m = 1;
      for (std::size_t i = 0, c = code; i < 3; ++i, c /= 3) op.table.push_back(subset_from_index(c % 3, 1));
      const ClassicalCompactness oracle(op);
      std::vector<Filter3> filters;
      for (std::size_t i = 0; i < 27; ++i) {
        if (oracle.is_filter(i)) filters.push_back(oracle.candidates[i]);
      }
      REQUIRE(filters == enumerate_filters(1));
      for (const char* s : {"n", "u", "p"}) {
        REQUIRE(compactness_value(op, S(s), filters) == oracle.cpt(S(s)));
      }
    }
  }

  TEST_CASE("operator pools") {
    CHECK(operator_pool(1, 0, 7).size() == 27);
    CHECK(operator_pool(2, 6, 7).size() == 46);
    CHECK_THROWS_AS(operator_pool(4, 0, 7), BudgetError);
  }

  TEST_CASE("compactness propositions") {
    const auto rep = check_compactness_props();
    CHECK(rep.ok());
    for (const char* name : {"isfilter_lemma", "compact_invariance", "finite_subcover",
                             "closed_in_compact_additive", "closed_in_compact_multiplicative",
                             "image_of_compact"}) {
      const Verdict* v = rep.find(name);
      REQUIRE(v);
      CHECK(v->instances > 0);
      CHECK(v->failures == 0);
    }
  }

  TEST_CASE("suites") {
    SuiteOptions o;
    o.carrier = 2;
    for (const char* name : {"axioms", "basis", "correspondence", "filters", "compact"}) {
      INFO(name);
      CHECK(run_topo_suite(name, o).ok());
    }
    CHECK_THROWS_AS(run_topo_suite("nope", o), Error);
    o.carrier = 3;
    CHECK_THROWS_AS(run_topo_suite("filters", o), BudgetError);
  }
}
