#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace affinekit {

using VarName = std::string;
using SortName = std::string;
using AtomName = std::string;

// Identifier rule shared by atoms, variables and sorts: a letter followed by
// letters, digits or underscores.
bool is_identifier(std::string_view text);

// Atom arguments are either variable names or element constants written as
// decimal literals ("0", "1", ...).
bool is_constant_arg(std::string_view text);

enum class AffineKind {
  Atom,
  Top,
  Bot,
  Tensor,    // ⊗  "*"
  Par,       // ⅋  "@"
  With,      // &  "&"
  Plus,      // ⊕  "+"
  Lollipop,  // ⊸  "-o"
  LinNeg,    // ¬  "~"
  OfCourse,  // !  "!"
  WhyNot,    // ?  "?"
  Forall,
  Exists,
  BigTensor,
  BigPar,
};

// Immutable affine-logic formula. Copies share structure.
class AffineFormula {
 public:
  AffineFormula();  // top

  static AffineFormula atom(AtomName name, std::vector<std::string> args = {});
  static AffineFormula top();
  static AffineFormula bot();
  static AffineFormula tensor(AffineFormula lhs, AffineFormula rhs);
  static AffineFormula par(AffineFormula lhs, AffineFormula rhs);
  static AffineFormula with(AffineFormula lhs, AffineFormula rhs);
  static AffineFormula plus(AffineFormula lhs, AffineFormula rhs);
  static AffineFormula lollipop(AffineFormula lhs, AffineFormula rhs);
  static AffineFormula lin_neg(AffineFormula body);
  static AffineFormula of_course(AffineFormula body);
  static AffineFormula why_not(AffineFormula body);
  static AffineFormula forall(VarName var, SortName sort, AffineFormula body);
  static AffineFormula exists(VarName var, SortName sort, AffineFormula body);
  static AffineFormula big_tensor(std::vector<AffineFormula> items);
  static AffineFormula big_par(std::vector<AffineFormula> items);

  AffineKind kind() const;
  // Atom name for atoms, bound variable for quantifiers, empty otherwise.
  const std::string& name() const;
  const SortName& sort() const;
  const std::vector<std::string>& args() const;
  const std::vector<AffineFormula>& children() const;
  const AffineFormula& child(std::size_t i) const { return children()[i]; }

  bool is_binary() const;
  bool is_unary() const;
  bool is_quantifier() const;

  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const AffineFormula& a, const AffineFormula& b);

 private:
  struct Node;
  explicit AffineFormula(std::shared_ptr<const Node> node);
  static AffineFormula make(AffineKind kind, std::string name, SortName sort,
                            std::vector<std::string> args, std::vector<AffineFormula> children);

  std::shared_ptr<const Node> node_;
};

enum class IntKind { Atom, True, False, And, Or, Implies, Not, Forall, Exists };

// Which half of a complemented atom an intuitionistic atom reads.
enum class Polarity { Plain, Pos, Neg };

class IntFormula {
 public:
  IntFormula();  // true

  static IntFormula atom(AtomName name, Polarity polarity, std::vector<std::string> args = {});
  static IntFormula truth();
  static IntFormula falsity();
  static IntFormula conj(IntFormula lhs, IntFormula rhs);
  static IntFormula disj(IntFormula lhs, IntFormula rhs);
  static IntFormula implies(IntFormula lhs, IntFormula rhs);
  static IntFormula negation(IntFormula body);
  static IntFormula forall(VarName var, SortName sort, IntFormula body);
  static IntFormula exists(VarName var, SortName sort, IntFormula body);

  IntKind kind() const;
  const std::string& name() const;
  Polarity polarity() const;
  const SortName& sort() const;
  const std::vector<std::string>& args() const;
  const std::vector<IntFormula>& children() const;
  const IntFormula& child(std::size_t i) const { return children()[i]; }

  bool is_quantifier() const { return kind() == IntKind::Forall || kind() == IntKind::Exists; }
  std::size_t size() const;

  friend bool operator==(const IntFormula& a, const IntFormula& b);

 private:
  struct Node;
  explicit IntFormula(std::shared_ptr<const Node> node);
  static IntFormula make(IntKind kind, std::string name, Polarity polarity, SortName sort,
                         std::vector<std::string> args, std::vector<IntFormula> children);

  std::shared_ptr<const Node> node_;
};

std::set<VarName> free_vars(const AffineFormula& f);
std::set<VarName> free_vars(const IntFormula& f);

// Removes every ⊸ (P ⊸ Q becomes ¬P ⅋ Q) and unfolds n-ary folds.
AffineFormula desugar(const AffineFormula& f);

// Unfolds BigTensor/BigPar only: the empty fold is its unit (⊤ for ⊗, ⊥ for ⅋),
// a singleton is its element, longer lists nest to the right.
AffineFormula unfold_big(const AffineFormula& f);

// Canonical ASCII rendering; parse(render(f)) reproduces f for formulas
// without n-ary folds (folds render through unfold_big).
std::string render(const AffineFormula& f);
std::string render(const IntFormula& f);

}  // namespace affinekit
