// Copyright 2026 The cmisolate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmisolate/report.hpp"

#include <cstdio>
#include <sstream>

#include "cmisolate/error.hpp"

namespace cmisolate {

std::vector<Column> report_columns(const std::string& command) {
  if (command == "field validate") {
    return {{"l", "Prime l"}, {"class", "Splitting"}, {"c_l", "c(l)"}, {"c_l_value", "c(l) value", 9}};
  }
  if (command == "field nonnormal") return {{"subfield", "Subfield"}, {"value", "Value"}};
  if (command == "search") {
    return {{"bound", "Bound"}, {"actual", "Actual Number"}, {"predicted", "Predicted Number"},
            {"discrepancy", "Discrepancy", 5}};
  }
  if (command == "frequency") {
    return {{"l", "Prime l"}, {"actual", "Actual Frequency", 6}, {"predicted", "Predicted Frequency", 9}};
  }
  if (command == "constant") {
    return {{"z", "z"}, {"restricted", "C(z)", 14}, {"full", "Full constant", 9}};
  }
  if (command == "predict") {
    return {{"bound", "Bound"}, {"actual", "Actual Number"}, {"predicted", "Predicted Number"},
            {"discrepancy", "Discrepancy", 5}};
  }
  if (command == "find") {
    return {{"C", "C"}, {"D", "D"}, {"A", "A"}, {"B", "B"}, {"p", "p"}, {"I", "I"}, {"class", "Class"},
            {"attempts", "Attempts"}};
  }
  if (command == "elliptic") {
    return {{"B", "B"}, {"A", "A"}, {"p", "p"}, {"n", "n"}, {"attempts", "Attempts"}};
  }
  throw InvalidArgument("unknown report command '" + command + "'");
}

std::string report_title(const std::string& command) {
  if (command == "field validate") return "Field report";
  if (command == "field nonnormal") return "Non-normal field subfields";
  if (command == "search") return "Prime pair counts";
  if (command == "frequency") return "Local frequencies";
  if (command == "constant") return "Correction constant";
  if (command == "predict") return "Predicted counts";
  if (command == "find") return "Isolated candidate";
  if (command == "elliptic") return "Elliptic analogue";
  return command;
}

std::string to_json(const Report& r) {
  ojson j;
  j["field"] = r.field;
  j["command"] = r.command;
  j["params"] = r.params;
  j["rows"] = ojson::array();
  for (const auto& row : r.rows) j["rows"].push_back(row);
  ojson meta;
  meta["version"] = r.meta.version;
  meta["seed"] = r.meta.seed ? ojson(*r.meta.seed) : ojson(nullptr);
  meta["threads"] = r.meta.threads;
  meta["wall_ms"] = r.meta.wall_ms;
  j["meta"] = meta;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InvalidArgument(std::string("report json: ") + e.what());
  }
  for (const char* key : {"field", "command", "params", "rows", "meta"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("report json: missing key '") + key + "'");
  }
  Report r;
  r.field = j["field"];
  r.command = j["command"].get<std::string>();
  r.params = j["params"];
  for (const auto& row : j["rows"]) r.rows.push_back(row);
  const auto& m = j["meta"];
  r.meta.version = m.at("version").get<std::string>();
  if (!m.at("seed").is_null()) r.meta.seed = m.at("seed").get<std::uint64_t>();
  r.meta.threads = m.at("threads").get<unsigned>();
  r.meta.wall_ms = m.at("wall_ms").get<double>();
  return r;
}

std::string format_cell(const ojson& v, int decimals) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float() && decimals >= 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

namespace {

std::vector<Column> present_columns(const Report& r) {
  std::vector<Column> cols;
  for (const auto& c : report_columns(r.command)) {
    for (const auto& row : r.rows) {
      if (row.contains(c.key) && !row[c.key].is_null()) {
        cols.push_back(c);
        break;
      }
    }
  }
  return cols;
}

std::string cell(const ojson& row, const Column& c) {
  return row.contains(c.key) ? format_cell(row[c.key], c.decimals) : "";
}

}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "## " << report_title(r.command) << "\n\n";
  for (const auto& [k, v] : r.field.items()) os << "- " << k << ": " << format_cell(v, -1) << "\n";
  for (const auto& [k, v] : r.params.items()) os << "- " << k << ": " << format_cell(v, -1) << "\n";
  os << "\n";
  const auto cols = present_columns(r);
  if (cols.empty()) return os.str();
  os << "|";
  for (const auto& c : cols) os << " " << c.header << " |";
  os << "\n|";
  for (size_t i = 0; i < cols.size(); ++i) os << "---:|";
  os << "\n";
  for (const auto& row : r.rows) {
    os << "|";
    for (const auto& c : cols) os << " " << cell(row, c) << " |";
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  const auto cols = present_columns(r);
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i].key);
  os << "\r\n";
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cell(row, cols[i]));
    os << "\r\n";
  }
  return os.str();
}

}  // namespace cmisolate
