#include <array>
#include <random>
#include <string>

#include <doctest.h>

#include "affinekit/antithesis.hpp"
#include "affinekit/error.hpp"
#include "affinekit/parser.hpp"
#include "affinekit/semantics.hpp"
#include "support.hpp"

using namespace affinekit;

namespace {

// Rows indexed by the left operand, columns by the right, in the order
// neg, und, pos; hand-evaluated from the table.
std::string table_of(PairValue (*op)(PairValue, PairValue)) {
  std::string out;
  for (PairValue a : kThreeValues) {
    if (!out.empty()) out += ' ';
    for (PairValue b : kThreeValues) out += to_char(op(a, b));
  }
  return out;
}

std::string table_of(PairValue (*op)(PairValue)) {
  std::string out;
  for (PairValue a : kThreeValues) out += to_char(op(a));
  return out;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("connective tables") {
    CHECK(table_of(tensor) == "nnn nnu nup");
    CHECK(table_of(par) == "nup upp ppp");
    CHECK(table_of(with) == "nnn nuu nup");
    CHECK(table_of(plus) == "nup uup ppp");
    CHECK(table_of(lollipop) == "ppp upp nup");
    CHECK(table_of(negate) == "pun");
    CHECK(table_of(of_course) == "nnp");
    CHECK(table_of(why_not) == "npp");
  }

  TEST_CASE("units") {
    for (PairValue a : kThreeValues) {
      CHECK(par(a, kRefuted) == a);
      CHECK(tensor(a, kProven) == a);
      CHECK(with(a, kProven) == a);
      CHECK(plus(a, kRefuted) == a);
    }
    CHECK(par(kUndetermined, kUndetermined) == kProven);
    CHECK(tensor(kUndetermined, kUndetermined) == kRefuted);
  }

  TEST_CASE("digits") {
    for (int d = 0; d < 3; ++d) CHECK(to_digit(from_digit(d)) == d);
    CHECK(to_word(kContradictory) == "contradictory");
    CHECK_FALSE(kContradictory.disjoint());
  }

  TEST_CASE("interpretation validation") {
    Interpretation m;
    m.add_sort("S", 2);
    CHECK_THROWS_AS(m.add_atom("p", {"T"}, {kProven, kProven}), Error);
    CHECK_THROWS_AS(m.add_atom("p", {"S"}, {kProven}), Error);
    m.add_atom("p", {"S"}, {kProven, kContradictory});
    CHECK_THROWS_AS(m.validate(), EvalError);
    m.set_value("p", 1, kRefuted);
    CHECK_NOTHROW(m.validate());
    const std::array<std::size_t, 1> one{1};
    CHECK(m.row("p", one) == 1);
  }

  TEST_CASE("evaluation errors") {
    Interpretation m;
    m.add_sort("S", 2);
    m.add_atom("p", {"S"}, {kProven, kRefuted});
    CHECK_THROWS_AS(eval_pair(parse_affine("q"), m), EvalError);
    CHECK_THROWS_AS(eval_pair(parse_affine("p(x)"), m), EvalError);
    CHECK_THROWS_AS(eval_pair(parse_affine("forall x:T. p(x)"), m), EvalError);
    CHECK_THROWS_AS(eval_pair(parse_affine("p"), m), EvalError);
    CHECK_THROWS_AS(eval_pair(parse_affine("p(2)"), m), EvalError);
  }

  TEST_CASE("quantifiers fold over the carrier") {
    Interpretation m;
    m.add_sort("S", 3);
    m.add_atom("p", {"S"}, {kProven, kUndetermined, kProven});
    CHECK(eval_pair(parse_affine("forall x:S. p(x)"), m) == kUndetermined);
    CHECK(eval_pair(parse_affine("exists x:S. p(x)"), m) == kProven);
    CHECK(eval_pair(parse_affine("exists x:S. ~p(x)"), m) == kUndetermined);
    CHECK(eval_pair(parse_affine("p(1) @ p(1)"), m) == kProven);
    CHECK(eval_pair(parse_affine("p(1) * p(1)"), m) == kRefuted);
    CHECK(eval_pair(parse_affine("p(x)"), m, {{"x", "S", 0}}) == kProven);
  }

  TEST_CASE("compiled programs follow set_value") {
    Interpretation m;
    m.add_sort("S", 2);
    m.add_atom("p", {"S"}, {kProven, kProven});
    PairProgram prog(parse_affine("forall y:S. p(y) * p(x)"), m, {{"x", "S"}});
    const std::array<std::size_t, 1> x0{0};
    CHECK(prog.eval(x0) == kProven);
    m.set_value("p", 1, kUndetermined);
    CHECK(prog.eval(x0) == kUndetermined);
    m.set_value("p", 1, kRefuted);
    CHECK(prog.eval(x0) == kRefuted);
  }

  TEST_CASE("pair evaluation equals classical evaluation of the translation") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3000; ++i) {
      const std::size_t carrier = static_cast<std::size_t>(i % 4);
      testing::FormulaGen gen{rng, 3, carrier, true};
      const AffineFormula f = gen.gen(1 + i % 5);
      const Interpretation m = testing::random_interpretation(rng, 3, carrier);
      const auto t = translate(f);
      const PairValue v = eval_pair(f, m);
      INFO(render(f));
      REQUIRE(v.disjoint());
      REQUIRE(v.pos == eval_classical(t.pos, m));
      REQUIRE(v.neg == eval_classical(t.neg, m));
    }
  }

  TEST_CASE("disjointness holds under disjoint models") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t carrier = 1 + static_cast<std::size_t>(i % 3);
      testing::FormulaGen gen{rng, 3, carrier, true};
      const AffineFormula f = gen.gen(1 + i % 5);
      const auto rep = check_disjointness(f, testing::random_interpretation(rng, 3, carrier));
      REQUIRE(rep.ok());
      REQUIRE(rep.evaluations > 0);
    }
  }

  TEST_CASE("disjointness check reports contradictory inputs") {
    Interpretation m;
    m.add_sort("S", 2);
    m.add_atom("p", {"S"}, {kRefuted, kContradictory});
    const auto rep = check_disjointness(parse_affine("forall x:S. !p(x)"), m);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().subformula == "p(x)");
    CHECK(rep.violations.front().env == "x=1");
  }

  TEST_CASE("exhaustive oracle at small budgets") {
    OracleOptions o;
    o.max_depth = 2;
    o.random_samples = 200;
    auto rep = equivalence_oracle(o);
    CHECK(rep.ok());
    CHECK(rep.assignments == 9);
    o.carrier_size = 2;
    rep = equivalence_oracle(o);
    CHECK(rep.ok());
    o.max_depth = 4;
    CHECK_THROWS_AS(equivalence_oracle(o), BudgetError);
  }
}
