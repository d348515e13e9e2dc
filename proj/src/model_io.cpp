#include "affinekit/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "affinekit/error.hpp"

namespace affinekit {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Byte offsets only; report them as a column on line 1.
    throw ParseError(e.what(), 1, e.byte);
  }
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(what, 1, 1); }

PairValue value_from_word(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected \"pos\", \"neg\" or \"und\"");
  const auto& w = j.get_ref<const std::string&>();
  if (w == "pos") return kProven;
  if (w == "neg") return kRefuted;
  if (w == "und") return kUndetermined;
  bad(where + ": unknown truth value '" + w + "'");
}

Subset3 subset_from_json(const json& j, std::size_t m, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a subset code");
  const auto& code = j.get_ref<const std::string&>();
  if (code.size() != m || code.find_first_not_of("pnu") != std::string::npos) {
    bad(where + ": '" + code + "' is not a subset code of length " + std::to_string(m));
  }
  return subset_from_code(code);
}

// Reads a total table keyed by subset codes.
template <class Fn>
auto keyed_table(const json& j, std::size_t m, const std::string& where, Fn&& entry) {
  if (!j.is_object()) bad(where + ": expected an object keyed by subset codes");
  const std::size_t n = subset_count(m);
  std::vector<decltype(entry(j, where))> out(n);
  std::vector<bool> seen(n, false);
  for (const auto& [key, val] : j.items()) {
    const std::size_t idx = subset_index(subset_from_json(key, m, where));
    seen[idx] = true;
    out[idx] = entry(val, where + "[" + key + "]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) bad(where + ": missing row " + subset_code(subset_from_index(i, m)));
  }
  return out;
}

std::size_t carrier_size(const json& doc) {
  if (!doc.contains("carrier") || !doc["carrier"].is_number_unsigned()) {
    bad("topo tables need a positive integer \"carrier\"");
  }
  const auto m = doc["carrier"].get<std::size_t>();
  if (m == 0 || m > 4) bad("carrier must be between 1 and 4");
  return m;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Interpretation parse_interpretation(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) bad("interpretation must be a JSON object");
  Interpretation m;
  if (doc.contains("sorts")) {
    if (!doc["sorts"].is_object()) bad("\"sorts\" must be an object");
    for (const auto& [name, size] : doc["sorts"].items()) {
      if (!size.is_number_unsigned() || size.get<std::size_t>() == 0) {
        bad("sort '" + name + "' needs a positive size");
      }
      m.add_sort(name, size.get<std::size_t>());
    }
  }
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_object()) bad("\"atoms\" must be an object");
    for (const auto& [name, spec] : doc["atoms"].items()) {
      std::vector<SortName> args;
      if (spec.contains("args")) {
        for (const auto& a : spec["args"]) {
          if (!a.is_string()) bad("atom '" + name + "': args must be sort names");
          args.push_back(a.get<std::string>());
        }
      }
      if (!spec.contains("table") || !spec["table"].is_array()) {
        bad("atom '" + name + "' needs a \"table\" array");
      }
      std::vector<PairValue> values;
      for (const auto& v : spec["table"]) values.push_back(value_from_word(v, "atom '" + name + "'"));
      m.add_atom(name, std::move(args), std::move(values));
    }
  }
  m.validate();
  return m;
}

Interpretation load_interpretation(const std::string& path) {
  return parse_interpretation(read_file(path));
}

std::string interpretation_to_json(const Interpretation& m) {
  json doc;
  doc["sorts"] = json::object();
  for (const auto& [name, size] : m.sorts()) doc["sorts"][name] = size;
  doc["atoms"] = json::object();
  for (const auto& [name, table] : m.atoms()) {
    json t;
    t["args"] = table.arg_sorts;
    t["table"] = json::array();
    for (PairValue v : table.values) t["table"].push_back(std::string(to_word(v)));
    doc["atoms"][name] = t;
  }
  return doc.dump(2);
}

TopoTables parse_topo_tables(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) bad("topo tables must be a JSON object");
  TopoTables t;
  t.carrier = carrier_size(doc);
  const std::size_t m = t.carrier;
  if (doc.contains("operators")) {
    std::size_t i = 0;
    for (const auto& op : doc["operators"]) {
      InteriorOperator o;
      o.m = m;
      o.table = keyed_table(op, m, "operators[" + std::to_string(i++) + "]",
                            [m](const json& j, const std::string& w) {
                              return subset_from_json(j, m, w);
                            });
      t.operators.push_back(std::move(o));
    }
  }
  if (doc.contains("bases")) {
    std::size_t i = 0;
    for (const auto& b : doc["bases"]) {
      const std::string where = "bases[" + std::to_string(i++) + "]";
      if (!b.is_array()) bad(where + ": expected an array of subset codes");
      BasisFamily fam{m, {}};
      for (const auto& s : b) fam.sets.push_back(subset_from_json(s, m, where));
      t.bases.push_back(std::move(fam));
    }
  }
  if (doc.contains("filters")) {
    if (m > 2) bad("filters are limited to carriers of size 1 or 2");
    std::size_t i = 0;
    for (const auto& f : doc["filters"]) {
      t.filters.push_back(keyed_table(f, m, "filters[" + std::to_string(i++) + "]",
                                      [](const json& j, const std::string& w) {
                                        return value_from_word(j, w);
                                      }));
    }
  }
  if (doc.contains("subsets")) {
    for (const auto& s : doc["subsets"]) t.subsets.push_back(subset_from_json(s, m, "subsets"));
  }
  return t;
}

TopoTables load_topo_tables(const std::string& path) {
  return parse_topo_tables(read_file(path));
}

std::string topo_tables_to_json(const TopoTables& t) {
  json doc;
  doc["carrier"] = t.carrier;
  const std::size_t n = subset_count(t.carrier);
  if (!t.operators.empty()) {
    doc["operators"] = json::array();
    for (const auto& op : t.operators) {
      json row = json::object();
      for (std::size_t i = 0; i < n; ++i) {
        row[subset_code(subset_from_index(i, t.carrier))] = subset_code(op.table.at(i));
      }
      doc["operators"].push_back(row);
    }
  }
  if (!t.bases.empty()) {
    doc["bases"] = json::array();
    for (const auto& b : t.bases) {
      json sets = json::array();
      for (const auto& s : b.sets) sets.push_back(subset_code(s));
      doc["bases"].push_back(sets);
    }
  }
  if (!t.filters.empty()) {
    doc["filters"] = json::array();
    for (const auto& f : t.filters) {
      json row = json::object();
      for (std::size_t i = 0; i < n; ++i) {
        row[subset_code(subset_from_index(i, t.carrier))] = std::string(to_word(f.at(i)));
      }
      doc["filters"].push_back(row);
    }
  }
  if (!t.subsets.empty()) {
    doc["subsets"] = json::array();
    for (const auto& s : t.subsets) doc["subsets"].push_back(subset_code(s));
  }
  return doc.dump(2);
}

}  // namespace affinekit
