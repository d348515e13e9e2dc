#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "affinekit/topo.hpp"

namespace affinekit::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  std::uint64_t instances = 1;
  std::uint64_t failures = 0;
  bool informational = false;
};

// One subcommand run. Fields and checks keep insertion order so that reports
// of identical runs differ only in timing.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, Json>> fields;
  std::vector<Check> checks;
  double seconds = 0;
  // Text mode prints the single field's value alone (translate of one part).
  bool bare = false;

  void field(std::string key, Json value) { fields.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, bool pass, std::string detail = {});
  void add(const TopoReport& rep);

  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace affinekit::cli
