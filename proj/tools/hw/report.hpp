// Copyright 2026 The hw Authors
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

#include <string>
#include <vector>

#include "params.hpp"

namespace hw::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

/// One experiment's outcome. `meta` holds run-dependent fields (timings) that golden
/// comparisons drop.
struct Report {
  std::string experiment;
  Json params = Json::object();
  Json results = Json::object();
  Table table;
  bool pass = true;
  Json meta = Json::object();

  Json to_json() const;
};

Json table_json(const Table& t);
void write_text(const std::string& path, const std::string& content);
std::string to_csv(const Table& t);

}  // namespace hw::cli
