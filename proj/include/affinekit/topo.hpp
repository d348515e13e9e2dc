#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affinekit/subsets.hpp"

namespace affinekit {

// Operator on the subsets of a finite carrier, tabulated by subset_index.
struct InteriorOperator {
  std::size_t m = 0;
  std::vector<Subset3> table;

  const Subset3& operator()(const Subset3& s) const { return table.at(subset_index(s)); }

  static InteriorOperator identity(std::size_t m);
  static InteriorOperator constant(std::size_t m, const Subset3& value);
  static InteriorOperator from_function(std::size_t m,
                                        const std::function<Subset3(const Subset3&)>& fn);

  friend bool operator==(const InteriorOperator&, const InteriorOperator&) = default;
};

// clo s = ~int ~s
Subset3 closure(const InteriorOperator& op, const Subset3& s);

enum class Axiom { I1, I2, I3, I4, I5 };
enum class AxiomLevel { Moore, Cech, Full };

std::vector<Axiom> axioms_for(AxiomLevel level);
std::string axiom_name(Axiom a);

struct Verdict {
  std::string name;
  PairValue value = kProven;  // pair value of the checked formula (last instance)
  bool pass = true;
  std::string counterexample;
  std::uint64_t instances = 1;
  std::uint64_t failures = 0;
  bool informational = false;  // reported, not part of ok()
};

struct TopoReport {
  std::vector<Verdict> verdicts;
  // Computed values that are not pass/fail, e.g. a filter count.
  std::vector<std::pair<std::string, std::string>> facts;

  bool ok() const;
  const Verdict* find(const std::string& name) const;
  void append(const TopoReport& other);
};

// Aggregation across instances: counts add up and the first failing instance
// supplies the value and counterexample, prefixed by its context.
Verdict aggregate_verdict(std::string name);
void absorb(Verdict& agg, const Verdict& one, const std::string& context);

// Entries joined by '.', e.g. "nn.nn.pn" for m = 1.
std::string operator_code(const InteriorOperator& op);

TopoReport check_axioms(const InteriorOperator& op, std::span<const Axiom> axioms);
TopoReport check_operator_axioms(const InteriorOperator& op, AxiomLevel level);

struct BasisFamily {
  std::size_t m = 0;
  std::vector<Subset3> sets;
};

// int s = {x | ∃i. x ∈ B(i) ⊗ B(i) ⊆ s}
InteriorOperator basis_interior(const BasisFamily& b);
// Verdicts "basis_cover" and "basis_intersection".
TopoReport basis_conditions(const BasisFamily& b);
bool is_basis(const BasisFamily& b);

// A 3-valued subset of P(X), tabulated by subset_index (3^m entries).
using Collection = std::vector<PairValue>;
using Filter3 = Collection;

// O = {s | s ⊆ int s}
Collection opens_from_interior(const InteriorOperator& op);
// int s = {x | ∃t. t ∈ O ⊗ t ⊆ s ⊗ x ∈ t}
InteriorOperator interior_from_opens(std::size_t m, const Collection& opens);
// O1, O2 for the derived collection and agreement of the round trip up to
// mutual inclusion.
TopoReport roundtrip_check(const InteriorOperator& op);
// For every family of open subsets of size <= max_family, their union is open.
TopoReport union_of_opens_check(const InteriorOperator& op, std::size_t max_family = 3);
// (clo s ⊆ s) and (~s ⊆ int ~s) have the same pair value for every s.
TopoReport closure_duality_check(const InteriorOperator& op);

enum class ProductFlavor { Tensor, With };

// Elements of X × Y are indexed x * |Y| + y.
InteriorOperator product_interior(const InteriorOperator& x, const InteriorOperator& y,
                                  ProductFlavor flavor);
// For each axiom claimed for the flavor (Tensor: I1-I5; With: I1, I2, I4, I5):
// if both factors satisfy it (I2 unconditionally) so does the product. I3 for
// the With flavor is reported as informational.
TopoReport product_axiom_check(const InteriorOperator& x, const InteriorOperator& y,
                               ProductFlavor flavor);

// Pair value of Fil(F); the ! makes it decided.
PairValue filter_value(std::size_t m, const Filter3& f);
bool is_filter(std::size_t m, const Filter3& f);
// All filters on a carrier of size 1 or 2 in table order; BudgetError above.
std::vector<Filter3> enumerate_filters(std::size_t m);

// Filter of the finite-subcover lemma: {s | ∃ finite F. ~s ⊆ ⅄_i U_F(i)}.
Filter3 filter_from_family(std::size_t m, std::span<const Subset3> family);

// Pair value of Cpt(s), quantifying over the given filters (which must be all
// filters on the carrier for the verdict to be exact).
PairValue compactness_value(const InteriorOperator& op, const Subset3& s,
                            std::span<const Filter3> filters);
std::vector<PairValue> compactness_table(const InteriorOperator& op,
                                         std::span<const Filter3> filters);
bool is_compact_bruteforce(const InteriorOperator& op, const Subset3& s);

// Operators used by the compactness propositions: every table for m = 1; for
// m = 2 the identity, constant operators, every operator generated by a basis
// family of at most two sets, and `random_count` seeded random tables.
std::vector<InteriorOperator> operator_pool(std::size_t m, std::size_t random_count,
                                            std::uint64_t seed);

struct CompactnessOptions {
  std::size_t max_carrier = 2;
  std::size_t max_family = 2;
  std::size_t random_operators = 6;
  std::uint64_t seed = 7;
  bool image = true;
};

// Verdicts: isfilter_lemma, compact_invariance, finite_subcover,
// closed_in_compact_additive, closed_in_compact_multiplicative,
// image_of_compact.
TopoReport check_compactness_props(const CompactnessOptions& options = {});

}  // namespace affinekit
