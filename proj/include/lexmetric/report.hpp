// Copyright 2026 The lexmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lexmetric/rational.hpp"

namespace lexmetric {

using Cell = std::variant<std::string, Quantity, double, std::int64_t, bool>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Report {
  std::string command;
  std::vector<Table> tables;
  std::vector<std::string> notes;
};

// Aligned plain-text tables; reals with 6 decimals, exact fractions appended.
std::string render_human(const Report& report);
// {"command", "tables": [{"title", "columns", "rows": [{column: value}]}], "notes"}
std::string render_json(const Report& report);

}  // namespace lexmetric
