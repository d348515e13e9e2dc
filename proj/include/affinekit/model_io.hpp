#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "affinekit/semantics.hpp"
#include "affinekit/topo.hpp"

namespace affinekit {

// Interpretation document:
//   {"sorts": {"S": 2},
//    "atoms": {"p": {"args": ["S"], "table": ["pos", "und"]},
//              "q": {"table": ["neg"]}}}
// Tables are row-major over the argument sorts, last argument fastest; every
// entry is one of "pos", "neg", "und". Contradictory entries and non-positive
// sort sizes are rejected.
Interpretation parse_interpretation(std::string_view text);
Interpretation load_interpretation(const std::string& path);
std::string interpretation_to_json(const Interpretation& m);

// Topo tables document; every section is optional except "carrier":
//   {"carrier": 2,
//    "operators": [{"nn": "nn", "un": "nn", ..., "pp": "pp"}],
//    "bases": [["pu", "up"]],
//    "filters": [{"nn": "neg", ..., "pp": "pos"}],
//    "subsets": ["pp", "uu"]}
// Operator and filter rows are keyed by subset codes and must be total.
struct TopoTables {
  std::size_t carrier = 0;
  std::vector<InteriorOperator> operators;
  std::vector<BasisFamily> bases;
  std::vector<Filter3> filters;
  std::vector<Subset3> subsets;
};

TopoTables parse_topo_tables(std::string_view text);
TopoTables load_topo_tables(const std::string& path);
std::string topo_tables_to_json(const TopoTables& t);

std::string read_file(const std::string& path);

}  // namespace affinekit
