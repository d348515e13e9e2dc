#include "affinekit/antithesis.hpp"

namespace affinekit {

namespace {

using I = IntFormula;

IntFormula half(const AffineFormula& f, bool positive);

// The ⅋ row, shared by Par and the ⊸ expansion.
IntFormula par_pos(const AffineFormula& p, const AffineFormula& q) {
  return I::conj(I::implies(half(p, false), half(q, true)),
                 I::implies(half(q, false), half(p, true)));
}

IntFormula half(const AffineFormula& f, bool positive) {
  switch (f.kind()) {
    case AffineKind::Atom:
      return I::atom(f.name(), positive ? Polarity::Pos : Polarity::Neg, f.args());
    case AffineKind::Top:
      return positive ? I::truth() : I::falsity();
    case AffineKind::Bot:
      return positive ? I::falsity() : I::truth();
    case AffineKind::With:
      return positive ? I::conj(half(f.child(0), true), half(f.child(1), true))
                      : I::disj(half(f.child(0), false), half(f.child(1), false));
    case AffineKind::Plus:
      return positive ? I::disj(half(f.child(0), true), half(f.child(1), true))
                      : I::conj(half(f.child(0), false), half(f.child(1), false));
    case AffineKind::Tensor: {
      const auto& p = f.child(0);
      const auto& q = f.child(1);
      if (positive) return I::conj(half(p, true), half(q, true));
      return I::conj(I::implies(half(p, true), half(q, false)),
                     I::implies(half(q, true), half(p, false)));
    }
    case AffineKind::Par: {
      const auto& p = f.child(0);
      const auto& q = f.child(1);
      if (positive) return par_pos(p, q);
      return I::conj(half(p, false), half(q, false));
    }
    case AffineKind::Lollipop:
      return half(AffineFormula::par(AffineFormula::lin_neg(f.child(0)), f.child(1)), positive);
    case AffineKind::LinNeg:
      return half(f.child(0), !positive);
    case AffineKind::OfCourse:
      return positive ? half(f.child(0), true) : I::negation(half(f.child(0), true));
    case AffineKind::WhyNot:
      return positive ? I::negation(half(f.child(0), false)) : half(f.child(0), false);
    case AffineKind::Forall:
      return positive ? I::forall(f.name(), f.sort(), half(f.child(0), true))
                      : I::exists(f.name(), f.sort(), half(f.child(0), false));
    case AffineKind::Exists:
      return positive ? I::exists(f.name(), f.sort(), half(f.child(0), true))
                      : I::forall(f.name(), f.sort(), half(f.child(0), false));
    case AffineKind::BigTensor:
    case AffineKind::BigPar:
      return half(unfold_big(f), positive);
  }
  return I::truth();
}

bool disjoint_ordered(const IntFormula& x, const IntFormula& z) {
  if (x.kind() == IntKind::False || z.kind() == IntKind::False) return true;
  if (x.kind() == IntKind::Atom && z.kind() == IntKind::Atom) {
    return x.name() == z.name() && x.args() == z.args() &&
           ((x.polarity() == Polarity::Pos && z.polarity() == Polarity::Neg) ||
            (x.polarity() == Polarity::Neg && z.polarity() == Polarity::Pos));
  }
  if (x.kind() == IntKind::Not && x.child(0) == z) return true;
  // & row: P+ /\ Q+  vs  P- \/ Q-
  if (x.kind() == IntKind::And && z.kind() == IntKind::Or) {
    return known_disjoint(x.child(0), z.child(0)) && known_disjoint(x.child(1), z.child(1));
  }
  // ⊕ row: P+ \/ Q+  vs  P- /\ Q-
  if (x.kind() == IntKind::Or && z.kind() == IntKind::And) {
    return known_disjoint(x.child(0), z.child(0)) && known_disjoint(x.child(1), z.child(1));
  }
  // ⊗ row: P+ /\ Q+  vs  (P+ -> Q-) /\ (Q+ -> P-)
  if (x.kind() == IntKind::And && z.kind() == IntKind::And &&
      z.child(0).kind() == IntKind::Implies && z.child(1).kind() == IntKind::Implies) {
    const auto& l = z.child(0);
    const auto& r = z.child(1);
    if (l.child(0) == x.child(0) && r.child(0) == x.child(1) &&
        known_disjoint(x.child(1), l.child(1)) && known_disjoint(x.child(0), r.child(1))) {
      return true;
    }
  }
  // ⅋ row: (P- -> Q+) /\ (Q- -> P+)  vs  P- /\ Q-
  if (x.kind() == IntKind::And && z.kind() == IntKind::And &&
      x.child(0).kind() == IntKind::Implies && x.child(1).kind() == IntKind::Implies) {
    const auto& l = x.child(0);
    if (l.child(0) == z.child(0) && known_disjoint(l.child(1), z.child(1))) return true;
  }
  if (x.is_quantifier() && z.is_quantifier() && x.kind() != z.kind() && x.name() == z.name() &&
      x.sort() == z.sort()) {
    return known_disjoint(x.child(0), z.child(0));
  }
  return false;
}

// Matches (X -> ~Y) against (Y -> Z) and returns true when the former is
// redundant.
bool redundant_pair(const IntFormula& weak, const IntFormula& strong) {
  if (weak.kind() != IntKind::Implies || strong.kind() != IntKind::Implies) return false;
  const auto& concl = weak.child(1);
  if (concl.kind() != IntKind::Not) return false;
  return concl.child(0) == strong.child(0) && known_disjoint(weak.child(0), strong.child(1));
}

IntFormula rebuild(const IntFormula& f, std::vector<IntFormula> kids) {
  switch (f.kind()) {
    case IntKind::And:
      return I::conj(kids[0], kids[1]);
    case IntKind::Or:
      return I::disj(kids[0], kids[1]);
    case IntKind::Implies:
      return I::implies(kids[0], kids[1]);
    case IntKind::Not:
      return I::negation(kids[0]);
    case IntKind::Forall:
      return I::forall(f.name(), f.sort(), kids[0]);
    case IntKind::Exists:
      return I::exists(f.name(), f.sort(), kids[0]);
    default:
      return f;
  }
}

}  // namespace

IntFormula translate_pos(const AffineFormula& f) { return half(f, true); }

IntFormula translate_neg(const AffineFormula& f) { return half(f, false); }

TranslationPair translate(const AffineFormula& f) { return {half(f, true), half(f, false)}; }

bool known_disjoint(const IntFormula& lhs, const IntFormula& rhs) {
  return disjoint_ordered(lhs, rhs) || disjoint_ordered(rhs, lhs);
}

IntFormula simplify(const IntFormula& f) {
  // The redundancy test needs the raw translated shapes, so it runs before the
  // children are simplified.
  IntFormula node = f;
  while (node.kind() == IntKind::And) {
    if (redundant_pair(node.child(0), node.child(1))) {
      node = node.child(1);
    } else if (redundant_pair(node.child(1), node.child(0))) {
      node = node.child(0);
    } else {
      break;
    }
  }
  std::vector<IntFormula> kids;
  kids.reserve(node.children().size());
  for (const auto& c : node.children()) kids.push_back(simplify(c));
  return rebuild(node, std::move(kids));
}

}  // namespace affinekit
