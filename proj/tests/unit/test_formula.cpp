#include <random>

#include <doctest.h>

#include "affinekit/error.hpp"
#include "affinekit/formula.hpp"
#include "affinekit/parser.hpp"
#include "support.hpp"

using namespace affinekit;
using F = AffineFormula;

namespace {

bool has_lollipop_or_fold(const F& f) {
  if (f.kind() == AffineKind::Lollipop || f.kind() == AffineKind::BigTensor ||
      f.kind() == AffineKind::BigPar) {
    return true;
  }
  for (const auto& c : f.children()) {
    if (has_lollipop_or_fold(c)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("parse examples") {
    CHECK(parse_affine("p * q") == F::tensor(F::atom("p"), F::atom("q")));
    CHECK(parse_affine("p -o ?q") == F::lollipop(F::atom("p"), F::why_not(F::atom("q"))));
    CHECK(parse_affine("forall x:S. p(x) & q(x)") ==
          F::forall("x", "S", F::with(F::atom("p", {"x"}), F::atom("q", {"x"}))));
  }

  TEST_CASE("precedence and associativity") {
    const F p = F::atom("p"), q = F::atom("q"), r = F::atom("r");
    CHECK(parse_affine("p * q @ r") == F::par(F::tensor(p, q), r));
    CHECK(parse_affine("p + q & r") == F::plus(p, F::with(q, r)));
    CHECK(parse_affine("p -o q -o r") == F::lollipop(p, F::lollipop(q, r)));
    CHECK(parse_affine("p @ q @ r") == F::par(F::par(p, q), r));
    CHECK(parse_affine("~!?p") == F::lin_neg(F::of_course(F::why_not(p))));
    CHECK_THROWS_AS(parse_affine("p * exists x:S. q(x)"), ParseError);
    CHECK(parse_affine("p * (exists x:S. q(x))") ==
          F::tensor(p, F::exists("x", "S", F::atom("q", {"x"}))));
    CHECK(parse_affine("  top\n @ bot ") == F::par(F::top(), F::bot()));
  }

  TEST_CASE("render examples") {
    const F p = F::atom("p"), q = F::atom("q");
    CHECK(render(F::tensor(p, q)) == "p * q");
    CHECK(render(F::lin_neg(F::tensor(p, q))) == "~(p * q)");
    CHECK(render(F::big_par({})) == "bot");
    CHECK(render(F::big_tensor({})) == "top");
    CHECK(render(F::lollipop(p, F::why_not(q))) == "p -o ?q");
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_affine("p *\n  * q");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_affine("p -o"), ParseError);
    CHECK_THROWS_AS(parse_affine("(p"), ParseError);
    CHECK_THROWS_AS(parse_affine("forall x. p"), ParseError);
    CHECK_THROWS_AS(parse_affine("p $ q"), ParseError);
    CHECK_THROWS_AS(parse_affine("9p"), ParseError);
  }

  TEST_CASE("closed mode rejects unbound variables") {
    CHECK_THROWS_AS(parse_affine("p(x)", ParseMode::Closed), ParseError);
    CHECK_NOTHROW(parse_affine("forall x:S. p(x)", ParseMode::Closed));
    CHECK_NOTHROW(parse_affine("p(0)", ParseMode::Closed));
    CHECK_NOTHROW(parse_affine("p(x)", ParseMode::Open));
  }

  TEST_CASE("desugar examples") {
    const F p = F::atom("p"), q = F::atom("q"), r = F::atom("r");
    CHECK(desugar(F::lollipop(p, q)) == F::par(F::lin_neg(p), q));
    CHECK(desugar(F::big_tensor({p, q, r})) == F::tensor(p, F::tensor(q, r)));
    CHECK(desugar(p) == p);
    CHECK(unfold_big(F::big_par({})) == F::bot());
    CHECK(unfold_big(F::big_tensor({})) == F::top());
    CHECK(unfold_big(F::big_par({q})) == q);
  }

  TEST_CASE("free variables") {
    CHECK(free_vars(F::atom("p", {"x"})) == std::set<VarName>{"x"});
    CHECK(free_vars(F::forall("x", "S", F::atom("p", {"x"}))).empty());
    CHECK(free_vars(F::tensor(F::atom("p", {"x"}),
                              F::exists("y", "S", F::atom("q", {"y"})))) == std::set<VarName>{"x"});
    CHECK(free_vars(F::atom("p", {"0", "x"})) == std::set<VarName>{"x"});
  }

  TEST_CASE("identifiers") {
    CHECK(is_identifier("a_1"));
    CHECK_FALSE(is_identifier("1a"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("_a"));
    CHECK(is_constant_arg("12"));
    CHECK_FALSE(is_constant_arg("x"));
  }

  TEST_CASE("parse(render(f)) round trip, depth <= 8") {
    std::mt19937_64 rng(11);
    testing::FormulaGen gen{rng, 3, 2};
    gen.leaf_bias = 0.2;
    for (int i = 0; i < 3000; ++i) {
      const F f = gen.gen(1 + i % 8);
      const std::string text = render(f);
      INFO(text);
      REQUIRE(parse_affine(text, ParseMode::Closed) == f);
    }
  }

  TEST_CASE("folds round trip through their unfolding") {
    std::mt19937_64 rng(12);
    testing::FormulaGen gen{rng, 2, 2, true};
    for (int i = 0; i < 1000; ++i) {
      const F f = gen.gen(1 + i % 6);
      REQUIRE(parse_affine(render(f)) == unfold_big(f));
    }
  }

  TEST_CASE("desugar is idempotent and keeps free variables") {
    std::mt19937_64 rng(13);
    testing::FormulaGen gen{rng, 3, 2, true};
    for (int i = 0; i < 2000; ++i) {
      std::vector<std::string> scope{"y"};
      const F f = gen.gen(1 + i % 7, scope);
      const F d = desugar(f);
      REQUIRE_FALSE(has_lollipop_or_fold(d));
      REQUIRE(desugar(d) == d);
      REQUIRE(free_vars(d) == free_vars(f));
    }
  }
}
