#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affinekit/cuts.hpp"

namespace affinekit {

struct LemmaCheck {
  std::string lemma;
  std::string instance;
  bool pass = true;
  std::string witness;  // first failing cut, empty on success
  std::size_t grid_size = 0;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool ok() const;
  std::size_t failures() const;
};

// Every check evaluates over the canonical grid of its constants, extended by
// `extra` cuts when given.

// [a,c) ⊆ [a,b] ⅄ (b,c)
LemmaCheck check_interval_union(const Rational& a, const Rational& b, const Rational& c,
                                std::span<const Cut> extra = {});
// b < c implies [a,b] ⊆ [a,c); requires b < c.
LemmaCheck check_closed_in_closed_open(const Rational& a, const Rational& b, const Rational& c,
                                       std::span<const Cut> extra = {});
// Positive half of [a,r) ⊆ [a,q] ⅄ (q,r), unfolded into order predicates.
LemmaCheck check_cover_step_pos(const Rational& a, const Rational& q, const Rational& r,
                                std::span<const Cut> extra = {});
// Negative half of the same inclusion, unfolded.
LemmaCheck check_cover_step_neg(const Rational& a, const Rational& q, const Rational& r,
                                std::span<const Cut> extra = {});
// (-inf, inf) contains every cut.
LemmaCheck check_basis_whole(std::span<const Cut> extra = {});
// x ∈ (q0,r0) ⊗ x ∈ (q1,r1) gives x ∈ (q2,r2) with q2 = max, r2 = min, and
// (q2,r2) is included in both.
LemmaCheck check_basis_intersection(const ExtendedRational& q0, const ExtendedRational& r0,
                                    const ExtendedRational& q1, const ExtendedRational& r1,
                                    std::span<const Cut> extra = {});

// All of the above on one rational triple (any order); the b<c inclusion uses
// the two larger values when they differ.
LemmaReport lemma_suite_for(const Rational& a, const Rational& b, const Rational& c,
                            std::span<const Cut> extra = {});

// Fixed instances, including (0,1,2).
LemmaReport lemma_suite();

}  // namespace affinekit
