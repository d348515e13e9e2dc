#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

namespace affinekit {

// A complemented truth value: independent evidence for (pos) and against (neg).
// Valid values are disjoint; the contradictory pair is representable so that
// corrupted inputs can be detected rather than silently absorbed.
struct PairValue {
  bool pos = false;
  bool neg = false;

  constexpr bool disjoint() const { return !(pos && neg); }
  constexpr bool decided() const { return pos != neg; }

  friend constexpr bool operator==(PairValue, PairValue) = default;
};

inline constexpr PairValue kProven{true, false};
inline constexpr PairValue kRefuted{false, true};
inline constexpr PairValue kUndetermined{false, false};
inline constexpr PairValue kContradictory{true, true};

inline constexpr PairValue kThreeValues[] = {kRefuted, kUndetermined, kProven};

// Each connective below is one row of the antithesis table read truth-functionally.

constexpr PairValue negate(PairValue a) { return {a.neg, a.pos}; }

constexpr PairValue with(PairValue a, PairValue b) { return {a.pos && b.pos, a.neg || b.neg}; }

constexpr PairValue plus(PairValue a, PairValue b) { return {a.pos || b.pos, a.neg && b.neg}; }

constexpr PairValue tensor(PairValue a, PairValue b) {
  return {a.pos && b.pos, (!a.pos || b.neg) && (!b.pos || a.neg)};
}

constexpr PairValue par(PairValue a, PairValue b) {
  return {(!a.neg || b.pos) && (!b.neg || a.pos), a.neg && b.neg};
}

constexpr PairValue lollipop(PairValue a, PairValue b) { return par(negate(a), b); }

constexpr PairValue of_course(PairValue a) { return {a.pos, !a.pos}; }

constexpr PairValue why_not(PairValue a) { return {!a.neg, a.neg}; }

// Digit used by subset and filter table encodings: neg=0, und=1, pos=2.
// The contradictory value has no digit.
constexpr int to_digit(PairValue v) { return v.pos ? 2 : (v.neg ? 0 : 1); }

constexpr PairValue from_digit(int d) { return kThreeValues[d]; }

constexpr char to_char(PairValue v) {
  if (v.pos && v.neg) return 'c';
  return v.pos ? 'p' : (v.neg ? 'n' : 'u');
}

constexpr std::string_view to_word(PairValue v) {
  if (v.pos && v.neg) return "contradictory";
  return v.pos ? "pos" : (v.neg ? "neg" : "und");
}

}  // namespace affinekit
