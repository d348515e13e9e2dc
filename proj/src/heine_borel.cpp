#include "affinekit/heine_borel.hpp"

#include <algorithm>
#include <sstream>

#include "affinekit/error.hpp"

namespace affinekit {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

CoverProblem CoverProblem::parse(std::string_view text) {
  auto groups = split(text, ';');
  CoverProblem p;
  auto head = words(groups[0]);
  if (head.size() != 2) throw ParseError("cover spec must start with 'a b'", 1, 1);
  p.a = Rational::parse(head[0]);
  p.b = Rational::parse(head[1]);
  for (std::size_t i = 1; i < groups.size(); ++i) {
    auto w = words(groups[i]);
    if (w.empty() && i + 1 == groups.size()) break;  // trailing ';'
    if (w.size() != 2) {
      throw ParseError("interval " + std::to_string(i - 1) + " must be 'q r'", 1, 1);
    }
    p.family.push_back({ExtendedRational::parse(w[0]), ExtendedRational::parse(w[1])});
  }
  return p;
}

CoverDecision decide_cover(const CoverProblem& p) {
  if (p.b < p.a) return {true, std::nullopt};
  std::vector<OpenInterval> iv;
  for (const auto& i : p.family) {
    if (i.q < i.r) iv.push_back(i);
  }
  std::sort(iv.begin(), iv.end(), [](const OpenInterval& x, const OpenInterval& y) {
    return x.q < y.q || (x.q == y.q && x.r > y.r);
  });
  // Maximal connected components of the union; open intervals sharing only an
  // endpoint stay apart.
  std::vector<OpenInterval> comps;
  for (const auto& i : iv) {
    if (!comps.empty() && i.q < comps.back().r) {
      comps.back().r = std::max(comps.back().r, i.r);
    } else {
      comps.push_back(i);
    }
  }
  const ExtendedRational a(p.a), b(p.b);
  for (const auto& c : comps) {
    if (c.q < a && a < c.r) {
      if (b < c.r) return {true, std::nullopt};
      return {false, c.r.value()};
    }
  }
  return {false, p.a};
}

SubcoverResult extract_subcover(const CoverProblem& p) {
  SubcoverResult res;
  if (p.b < p.a) {
    res.success = true;
    return res;
  }
  ExtendedRational t(p.a);
  const ExtendedRational b(p.b);
  while (!(b < t)) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < p.family.size(); ++i) {
      const auto& iv = p.family[i];
      if (iv.q < t && t < iv.r && (!best || p.family[*best].r < iv.r)) best = i;
    }
    if (!best) {
      res.stuck = t.value();
      return res;
    }
    res.indices.push_back(*best);
    t = p.family[*best].r;
    res.chain.push_back(t);
  }
  res.success = true;
  return res;
}

bool verify_subcover_inclusion(const CoverProblem& p, const std::vector<std::size_t>& indices) {
  std::vector<Rational> consts{p.a, p.b};
  std::vector<CutSubset> parts;
  for (std::size_t i : indices) {
    if (i >= p.family.size()) throw Error("subcover index " + std::to_string(i) + " out of range");
    const auto& iv = p.family[i];
    if (iv.q.finite()) consts.push_back(iv.q.value());
    if (iv.r.finite()) consts.push_back(iv.r.value());
    // Empty entries are not valid interval specs; their cut is pos nowhere.
    if (iv.q.is_pos_inf() || iv.r.is_neg_inf()) {
      parts.push_back(CutSubset());
    } else {
      parts.push_back(open_cut(iv.q, iv.r));
    }
  }
  const std::vector<Cut> grid = grid_cuts(consts);
  const CutSubset lhs = p.b < p.a ? CutSubset([](const Cut&) { return kRefuted; }, "[a,b]")
                                  : closed_cut(p.a, p.b);
  return included(lhs, mult_union_fold(parts), grid).holds;
}

SubcoverResult extract_and_verify(const CoverProblem& p) {
  SubcoverResult res = extract_subcover(p);
  if (res.success) res.verified = verify_subcover_inclusion(p, res.indices);
  return res;
}

CoverProblem reflect(const CoverProblem& p) {
  CoverProblem out{-p.b, -p.a, {}};
  out.family.reserve(p.family.size());
  for (const auto& iv : p.family) out.family.push_back({-iv.r, -iv.q});
  return out;
}

bool covl_holds_at(const CoverProblem& p, const ExtendedRational& s) {
  // L = {c | c < s}, cl L = {c | c <= s}.
  auto in_l = [&](const ExtendedRational& c) { return c < s; };
  auto in_cl = [&](const ExtendedRational& c) { return c <= s; };
  for (const auto& iv : p.family) {
    if (in_l(iv.q) && !in_cl(iv.r)) return true;  // hypothesis fails
  }
  return !in_cl(ExtendedRational(p.a)) || in_l(ExtendedRational(p.b));
}

bool covu_holds_at(const CoverProblem& p, const ExtendedRational& s) {
  // U = {c | s < c}, cl U = {c | s <= c}.
  auto in_u = [&](const ExtendedRational& c) { return s < c; };
  auto in_cl = [&](const ExtendedRational& c) { return s <= c; };
  for (const auto& iv : p.family) {
    if (in_u(iv.r) && !in_cl(iv.q)) return true;
  }
  return !in_cl(ExtendedRational(p.b)) || in_u(ExtendedRational(p.a));
}

CovCrosscheck covl_covu_crosscheck(const CoverProblem& p) {
  CovCrosscheck out;
  out.decided = decide_cover(p).covered;
  out.reflected = decide_cover(reflect(p)).covered;

  std::vector<ExtendedRational> ends;
  for (const auto& iv : p.family) {
    ends.push_back(iv.q);
    ends.push_back(iv.r);
  }
  std::vector<Rational> consts = finite_endpoints(ends);
  consts.push_back(p.a);
  consts.push_back(p.b);
  std::vector<ExtendedRational> samples{ExtendedRational::neg_inf(), ExtendedRational::pos_inf()};
  for (const auto& v : grid_values(consts)) samples.emplace_back(v);

  for (const auto& s : samples) {
    ++out.samples;
    if (out.covl_sampled && !covl_holds_at(p, s)) {
      out.covl_sampled = false;
      out.covl_counter = s;
    }
    if (out.covu_sampled && !covu_holds_at(p, s)) {
      out.covu_sampled = false;
      out.covu_counter = s;
    }
  }
  return out;
}

}  // namespace affinekit
