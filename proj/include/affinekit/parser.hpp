#pragma once

#include <string_view>

#include "affinekit/formula.hpp"

namespace affinekit {

enum class ParseMode {
  Open,    // free variables allowed
  Closed,  // every variable must be bound by an enclosing quantifier
};

// Affine grammar, loosest to tightest:
//   formula := ("forall"|"exists") var ":" sort "." formula | lolli
//   lolli   := par ("-o" lolli)?
//   par     := mult (("@"|"+") mult)*
//   mult    := unary (("*"|"&") unary)*
//   unary   := ("~"|"!"|"?") unary | atomexp
//   atomexp := "top" | "bot" | name ("(" args ")")? | "(" formula ")"
// Throws ParseError carrying the line and column of the offending token.
AffineFormula parse_affine(std::string_view text, ParseMode mode = ParseMode::Open);

// Intuitionistic grammar mirroring render(IntFormula): "->" (right-assoc),
// "\/", "/\", "~", "true", "false", quantifiers, and atoms with an optional
// "+" / "-" polarity suffix.
IntFormula parse_int(std::string_view text, ParseMode mode = ParseMode::Open);

}  // namespace affinekit
