#include <random>

#include <doctest.h>

#include "affinekit/cuts.hpp"
#include "affinekit/error.hpp"
#include "affinekit/interval_lemmas.hpp"
#include "affinekit/subsets.hpp"
#include "support.hpp"

using namespace affinekit;
using ER = ExtendedRational;

namespace {

const ER kNegInf = ER::neg_inf();
const ER kPosInf = ER::pos_inf();

std::vector<Cut> grid_of(std::initializer_list<Rational> pts) {
  const std::vector<Rational> v(pts);
  return grid_cuts(v);
}

}  // namespace

TEST_SUITE("cuts") {
  TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2).num() == -1);
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(midpoint(0, 1) == Rational(1, 2));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational::parse("a"), Error);
    CHECK(kNegInf < ER(Rational(-1000)));
    CHECK(ER(Rational(1000)) < kPosInf);
    CHECK(ER::parse("-inf") == kNegInf);
    CHECK(ER::parse("inf") == kPosInf);
    CHECK(-kPosInf == kNegInf);
  }

  TEST_CASE("cut relations") {
    CHECK(cut_relations(0, Cut::point(Rational(1, 2))) == CutRelations{true, true, false, false});
    CHECK(cut_relations(0, Cut(0, 1)) == CutRelations{false, true, false, false});
    for (int q = -2; q <= 2; ++q) {
      CHECK(cut_relations(q, Cut(kNegInf, kPosInf)) == CutRelations{false, false, false, false});
    }
    CHECK_THROWS_AS(Cut(1, 0), Error);
  }

  TEST_CASE("order coherence over a grid") {
    const auto grid = grid_of({-1, 0, Rational(1, 3), 2});
    const std::vector<Rational> probes{-2, -1, 0, Rational(1, 6), Rational(1, 3), 1, 2, 3};
    for (const auto& x : grid) {
      for (const auto& q : probes) {
        const auto r = cut_relations(q, x);
        CHECK((!r.q_lt_x || r.q_le_x));
        CHECK((!r.x_lt_q || r.x_le_q));
        for (const auto& s : probes) {
          if (s <= q) {
            CHECK((!cut_relations(q, x).q_lt_x || cut_relations(s, x).q_lt_x));
            CHECK((!cut_relations(s, x).x_lt_q || cut_relations(q, x).x_lt_q));
          }
          if (lt(ER(q), x) && lt(x, ER(s))) CHECK(q < s);
        }
      }
    }
  }

  TEST_CASE("interval cut examples") {
    CHECK(closed_cut(0, 1)(Cut::point(Rational(1, 2))) == kProven);
    CHECK(open_cut(0, 1)(Cut::point(0)) == kRefuted);
    const CutSubset degenerate = closed_cut(1, 0);
    for (const auto& x : grid_of({0, 1})) CHECK(degenerate(x) == kRefuted);
    CHECK(closed_cut(0, 1)(Cut(0, 1)) == kProven);
    CHECK(open_cut(0, 1)(Cut(0, 1)) == kRefuted);
    CHECK(open_cut(0, 2)(Cut(0, 1)) == kUndetermined);
    CHECK(closed_open_cut(0, 1)(Cut::point(1)) == kRefuted);
    CHECK(open_closed_cut(0, 1)(Cut::point(1)) == kProven);
    CHECK_THROWS_AS(interval_cut({IntervalKind::Closed, 0, kPosInf}).label(), Error);
    CHECK_NOTHROW(interval_cut({IntervalKind::Open, kNegInf, kPosInf}));
    CHECK(IntervalSpec{IntervalKind::ClosedOpen, 0, 1}.str() == "[0,1)");
  }

  TEST_CASE("interval cuts are disjoint") {
    const auto grid = grid_of({-1, 0, Rational(1, 2), 1, 2});
    const std::vector<ER> ends{kNegInf, -1, 0, Rational(1, 2), 1, 2, kPosInf};
    for (const auto& a : ends) {
      for (const auto& b : ends) {
        if (a.is_pos_inf() || b.is_neg_inf()) {
          CHECK_THROWS_AS(open_cut(a, b), Error);
          continue;
        }
        CHECK_FALSE(find_overlap(open_cut(a, b), grid));
        if (a.finite() && b.finite()) {
          CHECK_FALSE(find_overlap(closed_cut(a, b), grid));
          CHECK_FALSE(find_overlap(mult_union(closed_cut(a, b), open_cut(b, a)), grid));
          CHECK_FALSE(find_overlap(mult_intersection(closed_cut(a, b), open_cut(a, b)), grid));
        }
        if (b.finite()) CHECK_FALSE(find_overlap(open_closed_cut(a, b), grid));
        if (a.finite()) CHECK_FALSE(find_overlap(closed_open_cut(a, b), grid));
      }
    }
  }

  TEST_CASE("inclusion examples") {
    const auto grid = grid_of({0, 1, 2});
    CHECK(included(closed_cut(0, 1), closed_cut(0, 1), grid).holds);
    CHECK(included(closed_cut(0, 1), closed_open_cut(0, 2), grid).holds);
    const auto r = included(closed_cut(0, 2), closed_cut(0, 1), grid);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    const Cut w = Cut::point(Rational(3, 2));
    CHECK(closed_cut(0, 2)(w) == kProven);
    CHECK(closed_cut(0, 1)(w) != kProven);
  }

  TEST_CASE("monotonicity of closed intervals") {
    const std::vector<Rational> ends{-1, 0, Rational(1, 2), 1, 2};
    const auto grid = grid_cuts(ends);
    for (const auto& a2 : ends) {
      for (const auto& a : ends) {
        for (const auto& b : ends) {
          for (const auto& b2 : ends) {
            if (a2 <= a && b <= b2) CHECK(included(closed_cut(a, b), closed_cut(a2, b2), grid).holds);
          }
        }
      }
    }
  }

  TEST_CASE("multiplicative union examples") {
    const auto grid = grid_of({0, 1, 2});
    CHECK(mult_union(closed_cut(0, 1), open_cut(1, 2))(Cut::point(3)) == kRefuted);
    CHECK(included(closed_open_cut(0, 2), mult_union(closed_cut(0, 1), open_cut(1, 2)), grid).holds);
    const std::vector<CutSubset> none;
    CHECK(mult_union_fold(none)(Cut::point(0)) == kRefuted);
    const std::vector<CutSubset> one{closed_cut(0, 1)};
    for (const auto& x : grid) CHECK(mult_union_fold(one)(x) == closed_cut(0, 1)(x));
    const std::vector<CutSubset> three{closed_cut(0, 1), open_cut(Rational(1, 2), 2), open_cut(1, 3)};
    for (const auto& x : grid) {
      CHECK(mult_union_fold(three)(x) ==
            mult_union(three[0], mult_union(three[1], three[2]))(x));
    }
  }

  TEST_CASE("grid construction") {
    const auto g = grid_of({0, 1});
    auto has = [&](const Cut& c) { return std::find(g.begin(), g.end(), c) != g.end(); };
    CHECK(has(Cut(0, 0)));
    CHECK(has(Cut(0, 1)));
    CHECK(has(Cut::point(Rational(1, 2))));
    CHECK(has(Cut(kNegInf, 0)));
    CHECK(has(Cut(1, kPosInf)));
    CHECK(has(Cut(kNegInf, kPosInf)));
    for (std::size_t k = 0; k <= 5; ++k) {
      std::vector<Rational> ends;
      for (std::size_t i = 0; i < k; ++i) ends.push_back(Rational(static_cast<std::int64_t>(i)));
      const std::size_t values = grid_values(ends).size();
      CHECK(values == (k == 0 ? 1 : 2 * k + 1));
      CHECK(grid_cuts(ends).size() == (values + 2) * (values + 3) / 2);
    }
    const auto empty = grid_cuts(std::vector<Rational>{});
    auto has_empty = [&](const Cut& c) { return std::find(empty.begin(), empty.end(), c) != empty.end(); };
    CHECK(has_empty(Cut(kNegInf, kPosInf)));
    CHECK(has_empty(Cut(kNegInf, 0)));
    CHECK(has_empty(Cut(0, kPosInf)));
    CHECK(has_empty(Cut(0, 0)));
  }

  TEST_CASE("fixed lemma suite") {
    const LemmaReport rep = lemma_suite();
    CHECK(rep.ok());
    CHECK(rep.failures() == 0);
    CHECK(check_interval_union(0, 1, 2).pass);
    CHECK(check_cover_step_pos(0, 1, 2).pass);
    CHECK(check_cover_step_neg(0, 1, 2).pass);
    CHECK(check_basis_whole().pass);
    CHECK(check_basis_intersection(0, 2, 1, 3).pass);
    CHECK(check_closed_in_closed_open(0, 1, 2).pass);
  }

  TEST_CASE("lemmas on random triples with extra cuts") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
      const Rational a = testing::random_rational(rng), b = testing::random_rational(rng),
                     c = testing::random_rational(rng);
      std::vector<Cut> extra;
      for (int k = 0; k < 30; ++k) {
        Rational l = testing::random_rational(rng), u = testing::random_rational(rng);
        if (u < l) std::swap(l, u);
        extra.emplace_back(l, u);
      }
      const auto plain = lemma_suite_for(a, b, c);
      const auto rich = lemma_suite_for(a, b, c, extra);
      REQUIRE(plain.ok());
      REQUIRE(rich.ok());
      REQUIRE(plain.checks.size() == rich.checks.size());
    }
  }

  TEST_CASE("finite multiplicative union is associative and commutative") {
    for (std::size_t m = 1; m <= 3; ++m) {
      const std::size_t n = subset_count(m);
      for (std::size_t i = 0; i < n; ++i) {
        const Subset3 u = subset_from_index(i, m);
        for (std::size_t j = 0; j < n; ++j) {
          const Subset3 v = subset_from_index(j, m);
          REQUIRE(equivalent(mult_union(u, v), mult_union(v, u)));
          for (std::size_t k = 0; k < n; ++k) {
            const Subset3 w = subset_from_index(k, m);
            REQUIRE(equivalent(mult_union(u, mult_union(v, w)), mult_union(mult_union(u, v), w)));
          }
        }
      }
    }
  }

  TEST_CASE("finite subsets") {
    CHECK(subset_code(subset_from_index(5, 2)) == "pu");
    CHECK(subset_index(subset_from_code("pu")) == 5);
    CHECK(subset_count(3) == 27);
    CHECK(subset_code(complement(subset_from_code("pun"))) == "nup");
    CHECK(subset_code(of_course(subset_from_code("pun"))) == "pnn");
    CHECK(subset_code(why_not(subset_from_code("pun"))) == "ppn");
    CHECK(subset_code(mult_union(subset_from_code("uu"), subset_from_code("un"))) == "pu");
    CHECK(included(subset_from_code("un"), subset_from_code("pu")));
    CHECK_FALSE(included(subset_from_code("pu"), subset_from_code("un")));
    CHECK(inclusion_value(subset_from_code("u"), subset_from_code("u")) == kProven);
    CHECK(inclusion_value(subset_from_code("p"), subset_from_code("n")) == kRefuted);
  }
}
