#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "affinekit/model_io.hpp"
#include "affinekit/topo.hpp"

namespace affinekit {

// Basis families on a carrier of size m: every multiset of at most two
// subsets (at most one for m = 4), then `random_count` seeded families of
// three subsets. Deduplicated, in generation order.
std::vector<BasisFamily> basis_pool(std::size_t m, std::size_t random_count, std::uint64_t seed);

// The singleton family: set i is pos at i and und elsewhere.
BasisFamily singleton_basis(std::size_t m);

struct SuiteOptions {
  std::size_t carrier = 2;
  std::uint64_t seed = 7;
  std::size_t random = 6;
  AxiomLevel level = AxiomLevel::Full;  // axioms suite with tables
};

// Batch suites: "axioms", "correspondence", "basis", "product", "filters",
// "compact". Without tables each runs built-in pools; with tables it checks
// the supplied operators, bases, filters or subsets. Throws Error on an
// unknown suite and BudgetError when the carrier is too large for the suite.
TopoReport run_topo_suite(std::string_view suite, const SuiteOptions& options,
                          const TopoTables* tables = nullptr);

const std::vector<std::string_view>& topo_suite_names();

}  // namespace affinekit
