#include "affinekit/cuts.hpp"

#include <algorithm>

#include "affinekit/error.hpp"

namespace affinekit {

Cut::Cut(ExtendedRational l, ExtendedRational u) : lower(std::move(l)), upper(std::move(u)) {
  if (upper < lower) throw Error("cut with lower " + lower.str() + " above upper " + upper.str());
}

std::string Cut::str() const { return "Cut(" + lower.str() + "," + upper.str() + ")"; }

bool lt(const ExtendedRational& e, const Cut& x) {
  if (e.is_neg_inf()) return true;
  if (e.is_pos_inf()) return false;
  return e < x.lower;
}

bool le(const ExtendedRational& e, const Cut& x) {
  if (e.is_neg_inf()) return true;
  if (e.is_pos_inf()) return false;
  return e <= x.lower;
}

bool lt(const Cut& x, const ExtendedRational& e) {
  if (e.is_pos_inf()) return true;
  if (e.is_neg_inf()) return false;
  return x.upper < e;
}

bool le(const Cut& x, const ExtendedRational& e) {
  if (e.is_pos_inf()) return true;
  if (e.is_neg_inf()) return false;
  return x.upper <= e;
}

CutRelations cut_relations(const Rational& q, const Cut& x) {
  return {lt(q, x), le(q, x), lt(x, q), le(x, q)};
}

void IntervalSpec::validate() const {
  if (a.is_pos_inf()) throw Error("interval left endpoint cannot be +inf");
  if (b.is_neg_inf()) throw Error("interval right endpoint cannot be -inf");
  if (kind == IntervalKind::Closed && (!a.finite() || !b.finite())) {
    throw Error("closed interval needs finite endpoints");
  }
}

std::string IntervalSpec::str() const {
  const bool left_closed = kind == IntervalKind::Closed || kind == IntervalKind::ClosedOpen;
  const bool right_closed = kind == IntervalKind::Closed || kind == IntervalKind::OpenClosed;
  return std::string(left_closed ? "[" : "(") + a.str() + "," + b.str() + (right_closed ? "]" : ")");
}

CutSubset interval_cut(const IntervalSpec& spec) {
  spec.validate();
  const ExtendedRational a = spec.a;
  const ExtendedRational b = spec.b;
  CutSubset::Fn fn;
  switch (spec.kind) {
    case IntervalKind::Closed:
      fn = [a, b](const Cut& x) {
        return PairValue{le(a, x) && le(x, b), (!le(a, x) || lt(b, x)) && (!le(x, b) || lt(x, a))};
      };
      break;
    case IntervalKind::Open:
      fn = [a, b](const Cut& x) {
        return PairValue{lt(a, x) && lt(x, b), (!lt(a, x) || le(b, x)) && (!lt(x, b) || le(x, a))};
      };
      break;
    case IntervalKind::ClosedOpen:
      fn = [a, b](const Cut& x) {
        return PairValue{le(a, x) && lt(x, b), (!le(a, x) || le(b, x)) && (!lt(x, b) || lt(x, a))};
      };
      break;
    case IntervalKind::OpenClosed:
      fn = [a, b](const Cut& x) {
        return PairValue{lt(a, x) && le(x, b), (!lt(a, x) || lt(b, x)) && (!le(x, b) || le(x, a))};
      };
      break;
  }
  return CutSubset(std::move(fn), spec.str());
}

CutSubset closed_cut(const ExtendedRational& a, const ExtendedRational& b) {
  return interval_cut({IntervalKind::Closed, a, b});
}
CutSubset open_cut(const ExtendedRational& a, const ExtendedRational& b) {
  return interval_cut({IntervalKind::Open, a, b});
}
CutSubset closed_open_cut(const ExtendedRational& a, const ExtendedRational& b) {
  return interval_cut({IntervalKind::ClosedOpen, a, b});
}
CutSubset open_closed_cut(const ExtendedRational& a, const ExtendedRational& b) {
  return interval_cut({IntervalKind::OpenClosed, a, b});
}

namespace {

template <class Op>
CutSubset binary(const CutSubset& u, const CutSubset& v, Op op, const char* sym) {
  return CutSubset([u, v, op](const Cut& x) { return op(u(x), v(x)); },
                   "(" + u.label() + " " + sym + " " + v.label() + ")");
}

}  // namespace

CutSubset mult_union(const CutSubset& u, const CutSubset& v) {
  return binary(u, v, [](PairValue p, PairValue q) { return par(p, q); }, "@");
}
CutSubset mult_intersection(const CutSubset& u, const CutSubset& v) {
  return binary(u, v, [](PairValue p, PairValue q) { return tensor(p, q); }, "*");
}
CutSubset meet(const CutSubset& u, const CutSubset& v) {
  return binary(u, v, [](PairValue p, PairValue q) { return with(p, q); }, "&");
}
CutSubset join(const CutSubset& u, const CutSubset& v) {
  return binary(u, v, [](PairValue p, PairValue q) { return plus(p, q); }, "+");
}
CutSubset complement(const CutSubset& u) {
  return CutSubset([u](const Cut& x) { return negate(u(x)); }, "~" + u.label());
}
CutSubset of_course(const CutSubset& u) {
  return CutSubset([u](const Cut& x) { return of_course(u(x)); }, "!" + u.label());
}
CutSubset why_not(const CutSubset& u) {
  return CutSubset([u](const Cut& x) { return why_not(u(x)); }, "?" + u.label());
}

CutSubset mult_union_fold(std::span<const CutSubset> items) {
  if (items.empty()) return CutSubset();
  CutSubset acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = mult_union(items[i], acc);
  return acc;
}

std::vector<Rational> grid_values(std::span<const Rational> endpoints) {
  std::vector<Rational> pts(endpoints.begin(), endpoints.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.reserve(2 * pts.size() + 1);
  out.push_back(pts.front() - Rational(1));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out.push_back(midpoint(pts[i - 1], pts[i]));
    out.push_back(pts[i]);
  }
  out.push_back(pts.back() + Rational(1));
  return out;
}

std::vector<Cut> grid_cuts(std::span<const Rational> endpoints) {
  std::vector<ExtendedRational> line{ExtendedRational::neg_inf()};
  for (const auto& v : grid_values(endpoints)) line.emplace_back(v);
  line.push_back(ExtendedRational::pos_inf());
  std::vector<Cut> out;
  out.reserve(line.size() * (line.size() + 1) / 2);
  for (std::size_t i = 0; i < line.size(); ++i) {
    for (std::size_t j = i; j < line.size(); ++j) out.emplace_back(line[i], line[j]);
  }
  return out;
}

std::vector<Rational> finite_endpoints(std::span<const ExtendedRational> values) {
  std::vector<Rational> out;
  for (const auto& v : values) {
    if (v.finite()) out.push_back(v.value());
  }
  return out;
}

InclusionResult included(const CutSubset& u, const CutSubset& v, std::span<const Cut> grid) {
  for (const auto& x : grid) {
    PairValue l = u(x);
    PairValue r = v(x);
    if ((l.pos && !r.pos) || (r.neg && !l.neg)) return {false, x, l, r};
  }
  return {};
}

std::optional<Cut> find_overlap(const CutSubset& u, std::span<const Cut> grid) {
  for (const auto& x : grid) {
    if (!u(x).disjoint()) return x;
  }
  return std::nullopt;
}

}  // namespace affinekit
