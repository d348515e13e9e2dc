#pragma once

#include "affinekit/formula.hpp"

namespace affinekit {

// The positive and negative intuitionistic readings of an affine formula.
struct TranslationPair {
  IntFormula pos;
  IntFormula neg;

  friend bool operator==(const TranslationPair&, const TranslationPair&) = default;
};

// Structural recursion over the antithesis table. An atom a becomes the two
// intuitionistic atoms a+ and a-; P ⊸ Q is read as ¬P ⅋ Q and n-ary folds
// through their right-nested unfolding. Total.
IntFormula translate_pos(const AffineFormula& f);
IntFormula translate_neg(const AffineFormula& f);
TranslationPair translate(const AffineFormula& f);

// True when the two formulas are recognisably the positive and negative halves
// of one translated formula (or otherwise syntactically exclusive), so that
// lhs -> ~rhs is guaranteed under every disjoint interpretation.
bool known_disjoint(const IntFormula& lhs, const IntFormula& rhs);

// Drops conjuncts that follow from disjointness: (X -> ~Y) /\ (Y -> Z) becomes
// Y -> Z whenever X and Z are known disjoint (either conjunct order). Never
// applied by translate(); the result is classically equivalent to the input
// under disjoint interpretations.
IntFormula simplify(const IntFormula& f);

}  // namespace affinekit
