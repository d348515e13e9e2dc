#include <random>

#include <doctest.h>

#include "affinekit/error.hpp"
#include "affinekit/heine_borel.hpp"
#include "support.hpp"

using namespace affinekit;
using ER = ExtendedRational;
using Indices = std::vector<std::size_t>;

TEST_SUITE("heine_borel") {
  TEST_CASE("parse") {
    const auto p = CoverProblem::parse("0 1 ; -1/2 1/2 ; 1/4 inf");
    CHECK(p.a == Rational(0));
    CHECK(p.b == Rational(1));
    REQUIRE(p.family.size() == 2);
    CHECK(p.family[0].q == ER(Rational(-1, 2)));
    CHECK(p.family[1].r == ER::pos_inf());
    CHECK_THROWS_AS(CoverProblem::parse("0"), ParseError);
    CHECK_THROWS_AS(CoverProblem::parse("0 1 ; 2"), ParseError);
    CHECK_THROWS_AS(CoverProblem::parse("inf 1"), ParseError);
  }

  TEST_CASE("decide examples") {
    CHECK(decide_cover(CoverProblem::parse("0 1 ; -1/2 1/2 ; 1/4 2")).covered);
    const auto gap = decide_cover(CoverProblem::parse("0 2 ; 0 1 ; 1 2"));
    CHECK_FALSE(gap.covered);
    REQUIRE(gap.witness);
    CHECK(*gap.witness == Rational(0));
    const auto p = CoverProblem::parse("0 2 ; 0 1 ; 1 2");
    for (int x : {0, 1, 2}) CHECK_FALSE(testing::point_covered(p.family, {0, 1}, x));
    const auto inner = decide_cover(CoverProblem::parse("0 2 ; -1 1 ; 1 3"));
    CHECK_FALSE(inner.covered);
    CHECK(*inner.witness == Rational(1));
    const auto degenerate = decide_cover(CoverProblem::parse("1 0"));
    CHECK(degenerate.covered);
    CHECK_FALSE(degenerate.witness);
  }

  TEST_CASE("extract examples") {
    const auto r = extract_subcover(CoverProblem::parse("0 1 ; -1 1/4 ; 0 1/2 ; 1/8 3/4 ; 1/2 2"));
    CHECK(r.success);
    CHECK(r.indices == Indices{0, 2, 3});
    CHECK(r.chain == std::vector<ER>{Rational(1, 4), Rational(3, 4), Rational(2)});
    CHECK(extract_subcover(CoverProblem::parse("0 1 ; -1 2")).indices == Indices{0});
    const auto stuck = extract_subcover(CoverProblem::parse("0 1 ; 0 2"));
    CHECK_FALSE(stuck.success);
    REQUIRE(stuck.stuck);
    CHECK(*stuck.stuck == Rational(0));
    const auto empty = extract_subcover(CoverProblem::parse("1 0"));
    CHECK(empty.success);
    CHECK(empty.indices.empty());
  }

  TEST_CASE("ties go to the lowest index and empty intervals are skipped") {
    const auto r = extract_subcover(CoverProblem::parse("0 1 ; 3 -2 ; -1 2 ; -1/2 2"));
    CHECK(r.indices == Indices{1});
  }

  TEST_CASE("verify examples") {
    const auto p = CoverProblem::parse("0 1 ; -1 1/4 ; 0 1/2 ; 1/8 3/4 ; 1/2 2");
    CHECK(verify_subcover_inclusion(p, {0, 2, 3}));
    CHECK_FALSE(verify_subcover_inclusion(p, {0, 3}));
    CHECK_FALSE(verify_subcover_inclusion(CoverProblem::parse("0 1 ; 0 2"), {0}));
    CHECK(verify_subcover_inclusion(CoverProblem::parse("1 0"), {}));
    CHECK_THROWS_AS(verify_subcover_inclusion(p, {7}), Error);
    CHECK(extract_and_verify(p).verified);
  }

  TEST_CASE("reflection") {
    const auto p = CoverProblem::parse("0 1 ; -1 1/4 ; 1/8 inf");
    const auto r = reflect(p);
    CHECK(r.a == Rational(-1));
    CHECK(r.b == Rational(0));
    CHECK(r.family[1].q == ER::neg_inf());
    CHECK(r.family[1].r == ER(Rational(-1, 8)));
    CHECK(reflect(r).family[0].q == p.family[0].q);
  }

  TEST_CASE("CovL at sampled lowercuts") {
    const auto covering = CoverProblem::parse("0 1 ; -1/2 1/2 ; 1/4 2");
    CHECK(covl_holds_at(covering, Rational(2)));
    CHECK(covu_holds_at(covering, Rational(-1)));
    const auto gap = CoverProblem::parse("0 2 ; -1 1 ; 1 3");
    CHECK_FALSE(covl_holds_at(gap, Rational(1)));
    const auto x = covl_covu_crosscheck(gap);
    CHECK(x.consistent());
    CHECK_FALSE(x.decided);
    REQUIRE(x.covl_counter);
    CHECK(*x.covl_counter == ER(Rational(1)));
  }

  TEST_CASE("engines agree with the midpoint oracle on random problems") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 1500; ++i) {
      const CoverProblem p = testing::random_cover_problem(rng, 10);
      const bool expected = testing::brute_covered(p);
      const auto d = decide_cover(p);
      const auto s = extract_and_verify(p);
      REQUIRE(d.covered == expected);
      REQUIRE(s.success == expected);
      REQUIRE(s.verified == expected);
      REQUIRE(verify_subcover_inclusion(p, s.indices) == expected);
      if (!expected) {
        REQUIRE(d.witness);
        REQUIRE_FALSE(testing::point_covered(p.family, s.indices, *d.witness));
        Indices all(p.family.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        REQUIRE_FALSE(testing::point_covered(p.family, all, *d.witness));
      }
      REQUIRE(covl_covu_crosscheck(p).consistent());
      if (p.family.size() <= 8 && expected) {
        REQUIRE(s.indices.size() == testing::minimum_subcover(p).value());
      }
    }
  }

  TEST_CASE("monotonicity") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 500; ++i) {
      CoverProblem p = testing::random_cover_problem(rng, 8);
      if (!decide_cover(p).covered) continue;
      CoverProblem more = p;
      more.family.push_back({testing::random_rational(rng), testing::random_rational(rng)});
      REQUIRE(decide_cover(more).covered);
      if (p.a <= p.b) {
        CoverProblem smaller = p;
        smaller.a = midpoint(p.a, p.b);
        REQUIRE(decide_cover(smaller).covered);
      }
    }
  }
}
