#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace affinekit::cli {

void RunReport::check(std::string name, bool pass, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.failures = pass ? 0 : 1;
  if (!pass) c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

void RunReport::add(const TopoReport& rep) {
  for (const auto& [key, value] : rep.facts) field(key, value);
  for (const auto& v : rep.verdicts) {
    Check c;
    c.name = v.name;
    c.pass = v.pass;
    c.detail = v.counterexample;
    c.instances = v.instances;
    c.failures = v.failures;
    c.informational = v.informational;
    checks.push_back(std::move(c));
  }
}

bool RunReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass || c.informational; });
}

std::string RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["ok"] = ok();
  Json f = Json::object();
  for (const auto& [key, value] : fields) f[key] = value;
  doc["fields"] = f;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["instances"] = c.instances;
    j["failures"] = c.failures;
    if (c.informational) j["informational"] = true;
    if (!c.detail.empty()) j["counterexample"] = c.detail;
    cs.push_back(j);
  }
  doc["checks"] = cs;
  doc["timing"] = {{"seconds", seconds}};
  return doc.dump(2) + "\n";
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  if (bare && fields.size() == 1 && checks.empty()) {
    const Json& v = fields.front().second;
    out << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return out.str();
  }
  for (const auto& [key, value] : fields) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : (c.informational ? "INFO " : "FAIL ")) << c.name;
    if (c.instances != 1 || c.failures > 1) {
      out << " [" << c.instances << " checked, " << c.failures << " failed]";
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  if (!checks.empty()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    out << (ok() ? "ok" : "FAILED") << " in " << buf << " s\n";
  }
  return out.str();
}

}  // namespace affinekit::cli
