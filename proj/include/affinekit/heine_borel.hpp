#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "affinekit/cuts.hpp"

namespace affinekit {

struct OpenInterval {
  ExtendedRational q;
  ExtendedRational r;
};

// Cover [a,b] by the open intervals (q_i, r_i). Entries with q_i >= r_i are
// empty and never selected.
struct CoverProblem {
  Rational a;
  Rational b;
  std::vector<OpenInterval> family;

  // "a b ; q1 r1 ; q2 r2 ; ..." with rationals p/q and -inf / inf.
  static CoverProblem parse(std::string_view text);
};

struct CoverDecision {
  bool covered = false;
  // Least uncovered point of [a,b] when not covered.
  std::optional<Rational> witness;
};

struct SubcoverResult {
  bool success = false;
  std::vector<std::size_t> indices;
  std::vector<ExtendedRational> chain;  // reach after each selection
  std::optional<Rational> stuck;        // uncovered point on failure
  bool verified = false;                // set by extract_and_verify
};

// Union-of-components coverage test, independent of the greedy sweep.
// a > b is covered with no witness.
CoverDecision decide_cover(const CoverProblem& p);

// Greedy sweep from t = a: pick the interval with q < t < r of largest r
// (lowest index on ties), move t to r, stop once t > b.
SubcoverResult extract_subcover(const CoverProblem& p);

// [a,b]_cut ⊆ ⅄ of the selected interval cuts over the canonical grid of all
// involved endpoints. Throws Error on an index out of range.
bool verify_subcover_inclusion(const CoverProblem& p, const std::vector<std::size_t>& indices);

SubcoverResult extract_and_verify(const CoverProblem& p);

// Mirror image under x -> -x: [-b,-a] with intervals (-r_i, -q_i).
CoverProblem reflect(const CoverProblem& p);

// CovL for the rational lowercut {c | c < s} (s = -inf is empty, +inf is all):
// if q_i ∈ L -> r_i ∈ cl L for all i, then a ∈ cl L -> b ∈ L.
bool covl_holds_at(const CoverProblem& p, const ExtendedRational& s);
// CovU for the uppercut {c | s < c}: if r_i ∈ U -> q_i ∈ cl U for all i,
// then b ∈ cl U -> a ∈ U.
bool covu_holds_at(const CoverProblem& p, const ExtendedRational& s);

struct CovCrosscheck {
  bool decided = false;            // decide_cover(p)
  bool reflected = false;          // decide_cover(reflect(p))
  bool covl_sampled = true;        // CovL at every sampled lowercut
  bool covu_sampled = true;        // CovU at every sampled uppercut
  std::optional<ExtendedRational> covl_counter;  // first sampled L failing CovL
  std::optional<ExtendedRational> covu_counter;
  std::size_t samples = 0;

  // All four verdicts agree.
  bool consistent() const {
    return decided == reflected && decided == covl_sampled && decided == covu_sampled;
  }
};

// Samples lowercuts and uppercuts at -inf, +inf and every grid value of the
// problem's endpoints.
CovCrosscheck covl_covu_crosscheck(const CoverProblem& p);

}  // namespace affinekit
