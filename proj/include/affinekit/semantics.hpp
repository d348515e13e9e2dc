#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affinekit/formula.hpp"
#include "affinekit/pair_value.hpp"

namespace affinekit {

// Truth table of one complemented atom. Rows are laid out row-major over the
// argument sorts (the last argument varies fastest).
struct AtomTable {
  std::vector<SortName> arg_sorts;
  std::vector<PairValue> values;
};

// A finite model: sort sizes plus a pair-valued table for every atom.
class Interpretation {
 public:
  // Sizes of zero are accepted for internal index sorts (empty families);
  // model files require positive sizes.
  void add_sort(const SortName& name, std::size_t size);
  // Throws if a sort is unknown or the table is not total over the carriers.
  // Contradictory entries are stored as given; see validate().
  void add_atom(const AtomName& name, std::vector<SortName> arg_sorts,
                std::vector<PairValue> values);

  bool has_sort(const SortName& name) const { return sorts_.contains(name); }
  std::size_t sort_size(const SortName& name) const;
  const AtomTable& atom(const AtomName& name) const;
  const AtomTable* find_atom(const AtomName& name) const;

  const std::map<SortName, std::size_t>& sorts() const { return sorts_; }
  const std::map<AtomName, AtomTable>& atoms() const { return atoms_; }

  // Row index of an argument tuple.
  std::size_t row(const AtomName& name, std::span<const std::size_t> args) const;

  // Overwrites one table entry in place. Compiled programs keep pointing at
  // the table, so enumerators can reuse them across assignments.
  void set_value(const AtomName& name, std::size_t row, PairValue value);

  // Throws EvalError naming the first contradictory (pos and neg) entry.
  void validate() const;

 private:
  std::map<SortName, std::size_t> sorts_;
  std::map<AtomName, AtomTable> atoms_;
};

struct Binding {
  VarName var;
  SortName sort;
  std::size_t value;
};

using Env = std::vector<Binding>;

// Declared free variable of a compiled formula, in argument order.
struct FreeVar {
  VarName var;
  SortName sort;
};

// A formula resolved against an interpretation: atoms point at their tables,
// variables at environment slots. The interpretation must outlive the program.
class PairProgram {
 public:
  PairProgram(const AffineFormula& f, const Interpretation& m, std::vector<FreeVar> free = {});

  ~PairProgram();
  PairProgram(const PairProgram&);
  PairProgram(PairProgram&&) noexcept;
  PairProgram& operator=(const PairProgram&);
  PairProgram& operator=(PairProgram&&) noexcept;

  PairValue eval(std::span<const std::size_t> free_values = {}) const;
  const std::vector<FreeVar>& free() const { return free_; }

  struct Node;

 private:
  std::vector<Node> nodes_;
  std::vector<FreeVar> free_;
  std::size_t slots_ = 0;
  std::size_t root_ = 0;
};

class ClassicalProgram {
 public:
  ClassicalProgram(const IntFormula& f, const Interpretation& m, std::vector<FreeVar> free = {});

  ~ClassicalProgram();
  ClassicalProgram(const ClassicalProgram&);
  ClassicalProgram(ClassicalProgram&&) noexcept;
  ClassicalProgram& operator=(const ClassicalProgram&);
  ClassicalProgram& operator=(ClassicalProgram&&) noexcept;

  bool eval(std::span<const std::size_t> free_values = {}) const;
  const std::vector<FreeVar>& free() const { return free_; }

  struct Node;

 private:
  std::vector<Node> nodes_;
  std::vector<FreeVar> free_;
  std::size_t slots_ = 0;
  std::size_t root_ = 0;
};

// Tarskian truth over finite carriers; a+ / a- read the two halves of a's table.
bool eval_classical(const IntFormula& f, const Interpretation& m, const Env& env = {});

// Pair evaluation: each connective applies its table row to pair values;
// quantifiers fold over the carrier.
PairValue eval_pair(const AffineFormula& f, const Interpretation& m, const Env& env = {});

struct DisjointnessViolation {
  std::string subformula;  // rendered
  std::string env;         // "x=0, y=1"
  PairValue value;
};

struct DisjointnessReport {
  std::uint64_t evaluations = 0;  // node evaluations inspected
  std::uint64_t violation_count = 0;
  std::vector<DisjointnessViolation> violations;  // first few, innermost first

  bool ok() const { return violation_count == 0; }
};

// Evaluates every subformula occurrence under every environment reached by the
// quantifiers of the closed formula f and records each contradictory value.
DisjointnessReport check_disjointness(const AffineFormula& f, const Interpretation& m);

struct OracleOptions {
  int max_depth = 3;
  int atom_count = 2;
  // 0: propositional atoms. m > 0: unary atoms over a sort of size m, with
  // forall/exists over that sort among the unary connectives.
  int carrier_size = 0;
  // Additional explicitly translated random formulas at the top depth.
  std::size_t random_samples = 20000;
  std::uint64_t seed = 20240917;
};

struct OracleCounterexample {
  std::string formula;
  std::string assignment;
  PairValue pair;
  bool classical_pos;
  bool classical_neg;
};

struct OracleReport {
  std::uint64_t formulas = 0;          // all formulas of depth <= max_depth covered
  std::uint64_t explicit_formulas = 0; // translated and evaluated one by one
  std::uint64_t assignments = 0;       // disjoint atom assignments per formula
  std::uint64_t checks = 0;            // (formula, assignment, environment) comparisons
  std::uint64_t mismatches = 0;
  std::size_t classes = 0;             // signature classes at depth max_depth - 1
  std::optional<OracleCounterexample> first_counterexample;

  bool ok() const { return mismatches == 0; }
};

// Exhaustive comparison of eval_pair(f) against the classical values of
// (f+, f-) over all formulas up to max_depth and all disjoint assignments.
// Budget: depth <= 3, atoms <= 2, carrier <= 2; BudgetError otherwise.
OracleReport equivalence_oracle(const OracleOptions& options);

}  // namespace affinekit
