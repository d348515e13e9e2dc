#include "affinekit/interval_lemmas.hpp"

#include <algorithm>
#include <array>

namespace affinekit {

bool LemmaReport::ok() const { return failures() == 0; }

std::size_t LemmaReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const LemmaCheck& c) { return !c.pass; }));
}

namespace {

std::vector<Cut> make_grid(std::vector<Rational> constants, std::span<const Cut> extra) {
  std::vector<Cut> grid = grid_cuts(constants);
  grid.insert(grid.end(), extra.begin(), extra.end());
  return grid;
}

std::string triple(const char* names, const Rational& a, const Rational& b, const Rational& c) {
  return std::string(names) + "=(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

LemmaCheck inclusion_check(std::string lemma, std::string instance, const CutSubset& u,
                           const CutSubset& v, const std::vector<Cut>& grid) {
  LemmaCheck out{std::move(lemma), std::move(instance), true, "", grid.size()};
  InclusionResult r = included(u, v, grid);
  if (!r.holds) {
    out.pass = false;
    out.witness = r.witness->str();
  }
  return out;
}

template <class Pred>
LemmaCheck pointwise_check(std::string lemma, std::string instance, const std::vector<Cut>& grid,
                           Pred pred) {
  LemmaCheck out{std::move(lemma), std::move(instance), true, "", grid.size()};
  for (const auto& x : grid) {
    if (!pred(x)) {
      out.pass = false;
      out.witness = x.str();
      break;
    }
  }
  return out;
}

inline bool implies(bool p, bool q) { return !p || q; }

}  // namespace

LemmaCheck check_interval_union(const Rational& a, const Rational& b, const Rational& c,
                                std::span<const Cut> extra) {
  auto grid = make_grid({a, b, c}, extra);
  return inclusion_check("interval_union", triple("(a,b,c)", a, b, c), closed_open_cut(a, c),
                         mult_union(closed_cut(a, b), open_cut(b, c)), grid);
}

LemmaCheck check_closed_in_closed_open(const Rational& a, const Rational& b, const Rational& c,
                                       std::span<const Cut> extra) {
  auto grid = make_grid({a, b, c}, extra);
  return inclusion_check("closed_in_closed_open", triple("(a,b,c)", a, b, c), closed_cut(a, b),
                         closed_open_cut(a, c), grid);
}

LemmaCheck check_cover_step_pos(const Rational& a, const Rational& q, const Rational& r,
                                std::span<const Cut> extra) {
  auto grid = make_grid({a, q, r}, extra);
  const ExtendedRational ea(a), eq(q), er(r);
  return pointwise_check("cover_step_pos", triple("(a,q,r)", a, q, r), grid, [&](const Cut& x) {
    const bool left = (implies(le(ea, x), lt(eq, x)) && implies(le(x, eq), lt(x, ea)));
    const bool right = (implies(lt(eq, x), le(er, x)) && implies(lt(x, er), le(x, eq)));
    return implies(le(ea, x) && lt(x, er),
                   implies(left, lt(eq, x) && lt(x, er)) && implies(right, le(ea, x) && le(x, eq)));
  });
}

LemmaCheck check_cover_step_neg(const Rational& a, const Rational& q, const Rational& r,
                                std::span<const Cut> extra) {
  auto grid = make_grid({a, q, r}, extra);
  const ExtendedRational ea(a), eq(q), er(r);
  return pointwise_check("cover_step_neg", triple("(a,q,r)", a, q, r), grid, [&](const Cut& x) {
    const bool hyp = implies(le(ea, x), lt(eq, x)) && implies(le(x, eq), lt(x, ea)) &&
                     implies(lt(eq, x), le(er, x)) && implies(lt(x, er), le(x, eq));
    return implies(hyp, implies(le(ea, x), le(er, x)) && implies(lt(x, er), lt(x, ea)));
  });
}

LemmaCheck check_basis_whole(std::span<const Cut> extra) {
  auto grid = make_grid({}, extra);
  const CutSubset all = open_cut(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
  return pointwise_check("basis_whole", "(-inf,inf)", grid,
                         [&](const Cut& x) { return all(x) == kProven; });
}

LemmaCheck check_basis_intersection(const ExtendedRational& q0, const ExtendedRational& r0,
                                    const ExtendedRational& q1, const ExtendedRational& r1,
                                    std::span<const Cut> extra) {
  const std::array<ExtendedRational, 4> ends{q0, r0, q1, r1};
  auto grid = make_grid(finite_endpoints(ends), extra);
  const ExtendedRational q2 = std::max(q0, q1);
  const ExtendedRational r2 = std::min(r0, r1);
  const CutSubset i0 = open_cut(q0, r0), i1 = open_cut(q1, r1), i2 = open_cut(q2, r2);
  std::string instance = "(" + q0.str() + "," + r0.str() + ")*(" + q1.str() + "," + r1.str() + ")";
  LemmaCheck out = pointwise_check("basis_intersection", instance, grid, [&](const Cut& x) {
    return implies(i0(x).pos && i1(x).pos, i2(x).pos);
  });
  if (!out.pass) return out;
  for (const auto* target : {&i0, &i1}) {
    InclusionResult r = included(i2, *target, grid);
    if (!r.holds) {
      out.pass = false;
      out.witness = r.witness->str();
      break;
    }
  }
  return out;
}

LemmaReport lemma_suite_for(const Rational& a, const Rational& b, const Rational& c,
                            std::span<const Cut> extra) {
  LemmaReport rep;
  rep.checks.push_back(check_interval_union(a, b, c, extra));
  std::array<Rational, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  if (s[1] < s[2]) rep.checks.push_back(check_closed_in_closed_open(s[0], s[1], s[2], extra));
  rep.checks.push_back(check_cover_step_pos(a, b, c, extra));
  rep.checks.push_back(check_cover_step_neg(a, b, c, extra));
  rep.checks.push_back(check_basis_whole(extra));
  rep.checks.push_back(check_basis_intersection(a, c, b, c + (c - a), extra));
  rep.checks.push_back(check_basis_intersection(ExtendedRational::neg_inf(), b, a,
                                                ExtendedRational::pos_inf(), extra));
  return rep;
}

LemmaReport lemma_suite() {
  LemmaReport rep;
  const std::array<std::array<Rational, 3>, 5> instances{{
      {0, 1, 2},
      {0, 0, 1},
      {Rational(-1, 2), Rational(1, 3), Rational(3, 4)},
      {2, 1, 3},
      {1, 2, 0},
  }};
  for (const auto& t : instances) {
    LemmaReport part = lemma_suite_for(t[0], t[1], t[2]);
    rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
  }
  return rep;
}

}  // namespace affinekit
