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

#include "lexmetric/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace lexmetric {
namespace {

using nlohmann::ordered_json;

std::string real_text(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return format_decimal(v, 6);
}

struct TextVisitor {
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const Quantity& q) const {
    std::string out = real_text(q.value);
    if (q.exact && boost::multiprecision::denominator(*q.exact) != 1) {
      out += " (" + to_string(*q.exact) + ")";
    }
    return out;
  }
  std::string operator()(double v) const { return real_text(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "yes" : "no"; }
};

ordered_json real_json(double v) {
  if (std::isfinite(v)) return v;
  return real_text(v);
}

struct JsonVisitor {
  ordered_json operator()(const std::string& s) const { return s; }
  ordered_json operator()(const Quantity& q) const {
    ordered_json out;
    out["value"] = real_json(q.value);
    out["exact"] = q.exact ? ordered_json(to_string(*q.exact)) : ordered_json(nullptr);
    return out;
  }
  ordered_json operator()(double v) const { return real_json(v); }
  ordered_json operator()(std::int64_t v) const { return v; }
  ordered_json operator()(bool v) const { return v; }
};

}  // namespace

std::string render_human(const Report& report) {
  std::string out;
  for (const auto& table : report.tables) {
    if (!out.empty()) out += "\n";
    if (!table.title.empty()) out += table.title + "\n";
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns);
    for (const auto& row : table.rows) {
      std::vector<std::string> line;
      for (const auto& c : row) line.push_back(std::visit(TextVisitor{}, c));
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(table.columns.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], line[i].size());
      }
    }
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::string line;
      for (std::size_t i = 0; i < cells[r].size(); ++i) {
        if (i > 0) line += "  ";
        line += cells[r][i];
        if (i + 1 < cells[r].size()) line.append(width[i] - cells[r][i].size(), ' ');
      }
      out += "  " + line + "\n";
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : width) total += w;
        total += width.empty() ? 0 : 2 * (width.size() - 1);
        out += "  " + std::string(total, '-') + "\n";
      }
    }
  }
  if (!report.notes.empty()) {
    if (!out.empty()) out += "\n";
    for (const auto& note : report.notes) out += "note: " + note + "\n";
  }
  return out;
}

std::string render_json(const Report& report) {
  ordered_json doc;
  doc["command"] = report.command;
  ordered_json tables = ordered_json::array();
  for (const auto& table : report.tables) {
    ordered_json t;
    t["title"] = table.title;
    t["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r = ordered_json::object();
      for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
        r[table.columns[i]] = std::visit(JsonVisitor{}, row[i]);
      }
      rows.push_back(std::move(r));
    }
    t["rows"] = std::move(rows);
    tables.push_back(std::move(t));
  }
  doc["tables"] = std::move(tables);
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

}  // namespace lexmetric
