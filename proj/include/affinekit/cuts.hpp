#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affinekit/pair_value.hpp"
#include "affinekit/rational.hpp"

namespace affinekit {

// Interval-domain element with rational or infinite endpoints, lower <= upper.
// lower is the supremum of the lowercut, upper the infimum of the uppercut.
struct Cut {
  ExtendedRational lower;
  ExtendedRational upper;

  Cut(ExtendedRational l, ExtendedRational u);
  static Cut point(const Rational& q) { return Cut(q, q); }

  std::string str() const;
  friend bool operator==(const Cut&, const Cut&) = default;
};

// Order predicates between an endpoint and a cut. -inf < x, -inf <= x, x < inf
// and x <= inf always hold; inf < x, inf <= x, x < -inf and x <= -inf never do.
bool lt(const ExtendedRational& e, const Cut& x);  // e < x
bool le(const ExtendedRational& e, const Cut& x);  // e <= x
bool lt(const Cut& x, const ExtendedRational& e);  // x < e
bool le(const Cut& x, const ExtendedRational& e);  // x <= e

struct CutRelations {
  bool q_lt_x;
  bool q_le_x;
  bool x_lt_q;
  bool x_le_q;

  friend bool operator==(const CutRelations&, const CutRelations&) = default;
};

CutRelations cut_relations(const Rational& q, const Cut& x);

enum class IntervalKind { Closed, Open, ClosedOpen, OpenClosed };

struct IntervalSpec {
  IntervalKind kind;
  ExtendedRational a;
  ExtendedRational b;

  // Throws Error if a is +inf, b is -inf, or a closed interval has an
  // infinite endpoint.
  void validate() const;
  std::string str() const;  // "[0,1)"
};

// Complemented subset of cuts, given pointwise.
class CutSubset {
 public:
  using Fn = std::function<PairValue(const Cut&)>;

  CutSubset() : fn_([](const Cut&) { return kRefuted; }), label_("empty") {}
  CutSubset(Fn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}

  PairValue operator()(const Cut& x) const { return fn_(x); }
  const std::string& label() const { return label_; }

 private:
  Fn fn_;
  std::string label_;
};

CutSubset interval_cut(const IntervalSpec& spec);
CutSubset closed_cut(const ExtendedRational& a, const ExtendedRational& b);
CutSubset open_cut(const ExtendedRational& a, const ExtendedRational& b);
CutSubset closed_open_cut(const ExtendedRational& a, const ExtendedRational& b);
CutSubset open_closed_cut(const ExtendedRational& a, const ExtendedRational& b);

CutSubset mult_union(const CutSubset& u, const CutSubset& v);         // ⅄
CutSubset mult_intersection(const CutSubset& u, const CutSubset& v);  // ⊠
CutSubset meet(const CutSubset& u, const CutSubset& v);               // ⊓
CutSubset join(const CutSubset& u, const CutSubset& v);               // ⊔
CutSubset complement(const CutSubset& u);
CutSubset of_course(const CutSubset& u);
CutSubset why_not(const CutSubset& u);

// Right-nested ⅄ fold. The empty fold is the unit (nothing positive,
// everything negative); a singleton folds to itself.
CutSubset mult_union_fold(std::span<const CutSubset> items);

// Grid values: the sorted distinct endpoints, the midpoints of consecutive
// ones, and one value below the minimum and one above the maximum. An empty
// endpoint set yields the single probe value 0.
std::vector<Rational> grid_values(std::span<const Rational> endpoints);
// All cuts (l, u) with l <= u drawn from grid_values plus -inf and +inf:
// (k+2)(k+3)/2 cuts for k grid values.
std::vector<Cut> grid_cuts(std::span<const Rational> endpoints);
// Finite endpoints of the given values, for building grids.
std::vector<Rational> finite_endpoints(std::span<const ExtendedRational> values);

struct InclusionResult {
  bool holds = true;
  std::optional<Cut> witness;  // first cut violating U+ ⊆ V+ or V- ⊆ U-
  PairValue lhs{};
  PairValue rhs{};
};

InclusionResult included(const CutSubset& u, const CutSubset& v, std::span<const Cut> grid);

// First grid cut where u is both positive and negative, if any.
std::optional<Cut> find_overlap(const CutSubset& u, std::span<const Cut> grid);

}  // namespace affinekit
