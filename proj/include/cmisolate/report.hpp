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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cmisolate {

inline constexpr const char* kVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

struct Column {
  std::string key;
  std::string header;
  int decimals = -1;  // fixed decimals for floating values; -1 prints as stored
};

struct ReportMeta {
  std::string version = kVersion;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  double wall_ms = 0;
};

struct Report {
  std::string command;
  ojson field = ojson::object();
  ojson params = ojson::object();
  std::vector<ojson> rows;
  ReportMeta meta;
};

// Display columns per command; markdown and csv render only these.
std::vector<Column> report_columns(const std::string& command);
std::string report_title(const std::string& command);

std::string to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string to_markdown(const Report& r);
std::string to_csv(const Report& r);

// Cell text as markdown and csv print it.
std::string format_cell(const ojson& v, int decimals);
std::string csv_escape(const std::string& s);

}  // namespace cmisolate
