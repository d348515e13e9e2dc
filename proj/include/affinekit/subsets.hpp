#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "affinekit/pair_value.hpp"

namespace affinekit {

// Complemented subset of the finite carrier {0, ..., m-1}: one pair value per
// element. Subsets built by the functions below are always disjoint.
using Subset3 = std::vector<PairValue>;

// Base-3 index with element 0 least significant; digits neg=0, und=1, pos=2.
std::size_t subset_index(const Subset3& s);
Subset3 subset_from_index(std::size_t index, std::size_t m);
std::size_t subset_count(std::size_t m);  // 3^m

// String code over {p, n, u}, element 0 first: "pu" is pos at 0, und at 1.
std::string subset_code(const Subset3& s);
Subset3 subset_from_code(std::string_view code);

Subset3 whole(std::size_t m);    // all pos
Subset3 nothing(std::size_t m);  // all neg
Subset3 unknown(std::size_t m);  // all und

Subset3 mult_union(const Subset3& u, const Subset3& v);
Subset3 mult_intersection(const Subset3& u, const Subset3& v);
Subset3 meet(const Subset3& u, const Subset3& v);
Subset3 join(const Subset3& u, const Subset3& v);
Subset3 complement(const Subset3& u);
Subset3 of_course(const Subset3& u);
Subset3 why_not(const Subset3& u);

// Positive part of u ⊆ v: u+ ⊆ v+ and v- ⊆ u-.
bool included(const Subset3& u, const Subset3& v);
// Pair value of the affine inclusion ∀x. x∈u ⊸ x∈v.
PairValue inclusion_value(const Subset3& u, const Subset3& v);
bool equivalent(const Subset3& u, const Subset3& v);

}  // namespace affinekit
