#pragma once

// JSON files for finite algebras:
//   {"size": n, "meet": [[...]], "join": [[...]], "mul": [[...]],
//    "zero": i, "one": j, "names": [...]}
// "names" is optional. Residual tables are always derived, never read.

#include <fstream>
#include <sstream>
#include <string>

#include "kiteforge/error.hpp"
#include "kiteforge/finalg.hpp"
#include "kiteforge/report.hpp"

namespace kiteforge {

inline FlwTables tables_from_json(const Json& j) {
  try {
    FlwTables t;
    t.size = j.at("size").get<int>();
    t.meet = j.at("meet").get<std::vector<std::vector<int>>>();
    t.join = j.at("join").get<std::vector<std::vector<int>>>();
    t.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    t.zero = j.at("zero").get<int>();
    t.one = j.at("one").get<int>();
    if (j.contains("names")) t.names = j.at("names").get<std::vector<std::string>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra file: ") + e.what());
  }
}

inline Json algebra_to_json(const FinFLw& a) {
  const FlwTables t = a.tables();
  Json j;
  j["size"] = t.size;
  j["meet"] = t.meet;
  j["join"] = t.join;
  j["mul"] = t.mul;
  j["zero"] = t.zero;
  j["one"] = t.one;
  j["names"] = t.names;
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline FlwTables read_tables(const std::string& path) { return tables_from_json(read_json_file(path)); }

inline FinFLw read_algebra(const std::string& path) { return FinFLw::validate(read_tables(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace kiteforge
