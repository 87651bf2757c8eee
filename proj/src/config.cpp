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

#include "lexmetric/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexmetric/error.hpp"

namespace lexmetric {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(Errc::kValidationError, (path.empty() ? "/" : path) + ": " + message);
}

std::string child(const std::string& path, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(child(path, key), "unknown field");
    }
  }
  for (auto key : required) {
    if (!j.contains(std::string(key))) fail(child(path, key), "missing required field");
  }
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Quantity quantity_at(const json& j, const std::string& path) {
  Rational r;
  if (j.is_number_integer()) {
    r = j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  } else if (j.is_number_float()) {
    r = rational_from_double(j.get<double>());
  } else if (j.is_string()) {
    auto parsed = parse_rational(j.get<std::string>());
    if (!parsed) fail(path, "not a number or fraction: '" + j.get<std::string>() + "'");
    r = *parsed;
  } else {
    fail(path, "expected a number or a fraction string");
  }
  Quantity q = Quantity::exactly(r);
  if (!std::isfinite(q.value)) fail(path, "value out of range");
  return q;
}

Quantity nonnegative_at(const json& j, const std::string& path) {
  Quantity q = quantity_at(j, path);
  if (q.value < 0) fail(path, "must be >= 0");
  return q;
}

class Reader {
 public:
  explicit Reader(AnalysisConfig& cfg) : cfg_(cfg) {}

  void law(const json& j, const std::string& path) {
    check_keys(j, path, {"rules", "max_rules"}, {"rules"});
    if (j.contains("max_rules")) {
      const auto& m = j["max_rules"];
      if (!m.is_number_integer() || m.get<std::int64_t>() < 1 ||
          m.get<std::int64_t>() > static_cast<std::int64_t>(kHardRuleCap)) {
        fail(child(path, "max_rules"),
             "must be an integer in [1, " + std::to_string(kHardRuleCap) + "]");
      }
      cfg_.max_rules = m.get<std::size_t>();
    }
    const std::string rules_path = child(path, "rules");
    const auto& rules = array_at(j["rules"], rules_path);
    if (rules.empty()) fail(rules_path, "a law needs at least one rule");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const std::string p = child(rules_path, i);
      check_keys(rules[i], p, {"id", "punishment"}, {"id", "punishment"});
      std::string id = string_at(rules[i]["id"], child(p, "id"));
      if (id.empty()) fail(child(p, "id"), "rule id must be nonempty");
      if (!seen.insert(id).second) fail(child(p, "id"), "duplicate rule id '" + id + "'");
      cfg_.rules.push_back({id, nonnegative_at(rules[i]["punishment"], child(p, "punishment"))});
    }
    if (cfg_.rules.size() > cfg_.max_rules) {
      fail(rules_path, "LawTooLarge: " + std::to_string(cfg_.rules.size()) +
                           " rules exceed the cap of " + std::to_string(cfg_.max_rules));
    }
  }

  RuleMask members(const json& j, const std::string& path) const {
    RuleMask mask = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string id = string_at(j[i], child(path, i));
      RuleMask bit = 0;
      for (std::size_t r = 0; r < cfg_.rules.size(); ++r) {
        if (cfg_.rules[r].id == id) bit = RuleMask{1} << r;
      }
      if (bit == 0) fail(child(path, i), "unknown rule '" + id + "'");
      if (mask & bit) fail(child(path, i), "rule '" + id + "' listed twice");
      mask |= bit;
    }
    return mask;
  }

  RuleMask regulation(const json& j, const std::string& path) const {
    if (j.is_array()) return members(j, path);
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      for (const auto& [label, mask] : cfg_.labels) {
        if (label == name) return mask;
      }
      fail(path, "unknown regulation label '" + name + "'");
    }
    fail(path, "expected a member list or a label");
  }

  MassTable mass(const json& j, const std::string& path, RuleMask reg) const {
    MassTable table;
    const auto& rows = array_at(j, path);
    double total = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string p = child(path, i);
      check_keys(rows[i], p, {"event", "p"}, {"event", "p"});
      const RuleMask event = regulation(rows[i]["event"], child(p, "event"));
      if (!is_subset(event, reg)) {
        fail(child(p, "event"), "event " + format(event) + " is not within regulation " +
                                    format(reg));
      }
      const Quantity q = quantity_at(rows[i]["p"], child(p, "p"));
      if (q.value < 0 || q.value > 1) fail(child(p, "p"), "probability must lie in [0, 1]");
      if (!table.emplace(event, q).second) {
        fail(child(p, "event"), "event " + format(event) + " listed twice");
      }
      total += q.value;
    }
    if (std::abs(total - 1.0) > ProbabilityModel::kSumTolerance) {
      fail(path, "InvalidMass: table for regulation " + name(reg) + " sums to " +
                     format_decimal(total, 9) + ", expected 1");
    }
    return table;
  }

  std::pair<RuleMask, MassTable> table(const json& j, const std::string& path) const {
    check_keys(j, path, {"regulation", "mass"}, {"regulation", "mass"});
    const RuleMask reg = regulation(j["regulation"], child(path, "regulation"));
    return {reg, mass(j["mass"], child(path, "mass"), reg)};
  }

  void tables(const json& j, const std::string& path, std::map<RuleMask, MassTable>& out) const {
    const auto& arr = array_at(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto [reg, t] = table(arr[i], child(path, i));
      if (!out.emplace(reg, std::move(t)).second) {
        fail(child(child(path, i), "regulation"), "regulation " + name(reg) + " listed twice");
      }
    }
  }

  void society(const json& j, const std::string& path) {
    check_keys(j, path, {"name", "players", "aggregate", "independent"});
    if (j.contains("name")) cfg_.society_name = string_at(j["name"], child(path, "name"));
    if (j.contains("players")) {
      const std::string pp = child(path, "players");
      const auto& players = array_at(j["players"], pp);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < players.size(); ++i) {
        const std::string p = child(pp, i);
        check_keys(players[i], p, {"id", "weight", "tables"}, {"id"});
        PlayerSpec spec;
        spec.id = string_at(players[i]["id"], child(p, "id"));
        if (!seen.insert(spec.id).second) fail(child(p, "id"), "duplicate player '" + spec.id + "'");
        if (players[i].contains("weight")) {
          spec.weight = nonnegative_at(players[i]["weight"], child(p, "weight"));
        }
        if (players[i].contains("tables")) tables(players[i]["tables"], child(p, "tables"), spec.tables);
        cfg_.players.push_back(std::move(spec));
      }
      if (!cfg_.players.empty()) {
        double total = 0.0;
        for (const auto& pl : cfg_.players) total += pl.weight.value;
        if (!(total > 0)) fail(pp, "player weights must sum to a positive value");
      }
    }
    if (j.contains("aggregate")) tables(j["aggregate"], child(path, "aggregate"), cfg_.aggregate);
    if (j.contains("independent")) {
      const std::string ip = child(path, "independent");
      const auto& ind = j["independent"];
      if (!ind.is_object()) fail(ip, "expected an object mapping rule ids to probabilities");
      std::vector<Quantity> q(cfg_.rules.size());
      for (const auto& [key, value] : ind.items()) {
        auto it = std::find_if(cfg_.rules.begin(), cfg_.rules.end(),
                               [&](const Rule& r) { return r.id == key; });
        if (it == cfg_.rules.end()) fail(child(ip, key), "unknown rule '" + key + "'");
        Quantity& slot = q[static_cast<std::size_t>(it - cfg_.rules.begin())];
        slot = quantity_at(value, child(ip, key));
        if (slot.value < 0 || slot.value > 1) fail(child(ip, key), "probability must lie in [0, 1]");
      }
      for (const auto& r : cfg_.rules) {
        if (!ind.contains(r.id)) fail(child(ip, r.id), "missing breach probability");
      }
      cfg_.independent = std::move(q);
    }
  }

  void punishment(const json& j, const std::string& path) {
    check_keys(j, path, {"mode", "extension", "overrides"});
    if (j.contains("mode")) {
      const std::string m = string_at(j["mode"], child(path, "mode"));
      if (m == "additive") {
        cfg_.mode = PunishmentMode::kAdditive;
      } else if (m == "entropy") {
        cfg_.mode = PunishmentMode::kEntropy;
      } else {
        fail(child(path, "mode"), "expected 'additive' or 'entropy'");
      }
    }
    if (j.contains("extension")) {
      const std::string e = string_at(j["extension"], child(path, "extension"));
      if (e == "zero") {
        cfg_.extension = Extension::kZero;
      } else if (e == "restrict") {
        cfg_.extension = Extension::kRestrict;
      } else {
        fail(child(path, "extension"), "expected 'zero' or 'restrict'");
      }
    }
    if (j.contains("overrides")) {
      const std::string op = child(path, "overrides");
      const auto& arr = array_at(j["overrides"], op);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = child(op, i);
        check_keys(arr[i], p, {"event", "value"}, {"event", "value"});
        const RuleMask event = regulation(arr[i]["event"], child(p, "event"));
        const Quantity v = nonnegative_at(arr[i]["value"], child(p, "value"));
        if (event == 0 && v.value != 0) fail(child(p, "value"), "the empty event carries no punishment");
        if (!cfg_.overrides.emplace(event, v).second) fail(child(p, "event"), "event listed twice");
      }
    }
  }

  std::vector<Preorder::Pair> pairs(const json& j, const std::string& path) const {
    std::vector<Preorder::Pair> out;
    const auto& arr = array_at(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = child(path, i);
      if (!arr[i].is_array() || arr[i].size() != 2) fail(p, "expected a pair [worse, better]");
      out.emplace_back(regulation(arr[i][0], child(p, 0)), regulation(arr[i][1], child(p, 1)));
    }
    return out;
  }

  void preferences(const json& j, const std::string& path) {
    const auto& arr = array_at(j, path);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = child(path, i);
      check_keys(arr[i], p, {"player", "strict", "indifferent", "top", "threshold"}, {"player"});
      PreferenceSpec spec;
      spec.player = string_at(arr[i]["player"], child(p, "player"));
      if (!seen.insert(spec.player).second) fail(child(p, "player"), "duplicate player '" + spec.player + "'");
      if (arr[i].contains("strict")) spec.strict = pairs(arr[i]["strict"], child(p, "strict"));
      if (arr[i].contains("indifferent")) {
        spec.indifferent = pairs(arr[i]["indifferent"], child(p, "indifferent"));
      }
      if (arr[i].contains("top")) {
        const std::string tp = child(p, "top");
        const auto& top = array_at(arr[i]["top"], tp);
        for (std::size_t k = 0; k < top.size(); ++k) {
          spec.top.push_back(regulation(top[k], child(tp, k)));
        }
      }
      if (arr[i].contains("threshold")) {
        spec.threshold = nonnegative_at(arr[i]["threshold"], child(p, "threshold"));
      }
      cfg_.preferences.push_back(std::move(spec));
    }
  }

  void labels(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object mapping labels to member lists");
    for (const auto& [key, value] : j.items()) {
      if (key.empty()) fail(path, "labels must be nonempty");
      for (const auto& r : cfg_.rules) {
        if (r.id == key) fail(child(path, key), "label clashes with rule id '" + key + "'");
      }
      if (!value.is_array()) fail(child(path, key), "expected a member list");
      cfg_.labels.emplace_back(key, members(value, child(path, key)));
    }
  }

  void options(const json& j, const std::string& path) {
    check_keys(j, path,
               {"variant", "log_base", "deal_distance", "labels", "allowlist", "edge_overrides"});
    if (j.contains("labels")) labels(j["labels"], child(path, "labels"));
    if (j.contains("variant")) {
      const std::string v = string_at(j["variant"], child(path, "variant"));
      if (v == "directed") {
        cfg_.variant = Variant::kDirected;
      } else if (v == "plus") {
        cfg_.variant = Variant::kPlus;
      } else if (v == "max") {
        cfg_.variant = Variant::kMax;
      } else {
        fail(child(path, "variant"), "expected 'directed', 'plus' or 'max'");
      }
    }
    if (j.contains("log_base")) {
      const auto& b = j["log_base"];
      const std::string text = b.is_number_integer() ? std::to_string(b.get<std::int64_t>())
                                                     : string_at(b, child(path, "log_base"));
      if (text == "e") {
        cfg_.log_base = LogBase::kE;
      } else if (text == "2") {
        cfg_.log_base = LogBase::k2;
      } else {
        fail(child(path, "log_base"), "expected 'e' or '2'");
      }
    }
    if (j.contains("deal_distance")) {
      const std::string d = string_at(j["deal_distance"], child(path, "deal_distance"));
      if (d == "toward_maximal") {
        cfg_.deal_distance = DealDistance::kTowardMaximal;
      } else if (d == "from_maximal") {
        cfg_.deal_distance = DealDistance::kFromMaximal;
      } else {
        fail(child(path, "deal_distance"), "expected 'toward_maximal' or 'from_maximal'");
      }
    }
    if (j.contains("allowlist")) {
      const std::string ap = child(path, "allowlist");
      const auto& arr = array_at(j["allowlist"], ap);
      std::vector<RuleMask> masks;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const RuleMask m = regulation(arr[i], child(ap, i));
        if (std::find(masks.begin(), masks.end(), m) != masks.end()) {
          fail(child(ap, i), "regulation " + name(m) + " listed twice");
        }
        masks.push_back(m);
      }
      if (masks.empty()) fail(ap, "allowlist must not be empty");
      std::sort(masks.begin(), masks.end());
      cfg_.allowlist = std::move(masks);
    }
    if (j.contains("edge_overrides")) {
      const std::string ep = child(path, "edge_overrides");
      const auto& arr = array_at(j["edge_overrides"], ep);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = child(ep, i);
        check_keys(arr[i], p, {"from", "to", "weight", "symmetric"}, {"from", "to", "weight"});
        EdgeOverride e;
        e.from = regulation(arr[i]["from"], child(p, "from"));
        e.to = regulation(arr[i]["to"], child(p, "to"));
        if (e.from == e.to) fail(p, "an edge needs two distinct regulations");
        e.weight = nonnegative_at(arr[i]["weight"], child(p, "weight"));
        if (arr[i].contains("symmetric")) {
          if (!arr[i]["symmetric"].is_boolean()) fail(child(p, "symmetric"), "expected a boolean");
          e.symmetric = arr[i]["symmetric"].get<bool>();
        }
        cfg_.edge_overrides.push_back(e);
      }
    }
  }

 private:
  std::string format(RuleMask mask) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t r = 0; r < cfg_.rules.size(); ++r) {
      if (!((mask >> r) & 1u)) continue;
      if (!first) out += ",";
      out += cfg_.rules[r].id;
      first = false;
    }
    return out + "}";
  }

  std::string name(RuleMask mask) const { return regulation_name(cfg_, mask); }

  AnalysisConfig& cfg_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Preorder preference_order(const PreferenceSpec& spec, const std::vector<RuleMask>& domain);

// Checks that module constructors accept what the reader produced.
void cross_validate(const AnalysisConfig& cfg) {
  try {
    LawPtr law = build_law(cfg);
    build_society(cfg, law);
    build_punishment(cfg, law);
    std::vector<RuleMask> domain;
    if (cfg.allowlist) {
      domain = *cfg.allowlist;
    } else {
      for (RuleMask m = 0; m < law->regulation_count(); ++m) domain.push_back(m);
    }
    const auto in_domain = [&](RuleMask m) {
      return std::binary_search(domain.begin(), domain.end(), m);
    };
    for (const auto& e : cfg.edge_overrides) {
      if (!in_domain(e.from) || !in_domain(e.to)) {
        fail("/options/edge_overrides", "edge " + regulation_name(cfg, e.from) + " -> " +
                                            regulation_name(cfg, e.to) +
                                            " leaves the allowlist");
      }
    }
    for (std::size_t i = 0; i < cfg.preferences.size(); ++i) {
      const std::string p = child("/preferences", i);
      const auto& spec = cfg.preferences[i];
      for (const auto& pairs : {spec.strict, spec.indifferent}) {
        for (const auto& [a, b] : pairs) {
          if (!in_domain(a) || !in_domain(b)) fail(p, "preference mentions a regulation outside the graph");
        }
      }
      for (RuleMask t : spec.top) {
        if (!in_domain(t)) fail(child(p, "top"), "regulation " + regulation_name(cfg, t) + " is outside the graph");
      }
      try {
        preference_order(spec, domain);
      } catch (const Error& e) {
        fail(p, std::string(errc_name(e.code())) + ": " + e.what());
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::kValidationError) throw;
    throw Error(Errc::kValidationError,
                std::string(errc_name(e.code())) + ": " + e.what());
  }
}

Preorder preference_order(const PreferenceSpec& spec, const std::vector<RuleMask>& domain) {
  std::vector<Preorder::Pair> strict = spec.strict;
  std::vector<Preorder::Pair> indifferent = spec.indifferent;
  for (RuleMask t : spec.top) {
    for (RuleMask x : domain) {
      if (std::find(spec.top.begin(), spec.top.end(), x) == spec.top.end()) {
        strict.emplace_back(x, t);
      }
    }
    if (t != spec.top.front()) indifferent.emplace_back(spec.top.front(), t);
  }
  return Preorder::from_pairs(domain, strict, indifferent);
}

ordered_json quantity_json(const Quantity& q) {
  if (!q.exact) return q.value;
  const auto num = boost::multiprecision::numerator(*q.exact);
  const auto den = boost::multiprecision::denominator(*q.exact);
  if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max()) {
    return num.convert_to<std::int64_t>();
  }
  return to_string(*q.exact);
}

ordered_json members_json(const AnalysisConfig& cfg, RuleMask mask) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < cfg.rules.size(); ++r) {
    if ((mask >> r) & 1u) out.push_back(cfg.rules[r].id);
  }
  return out;
}

ordered_json tables_json(const AnalysisConfig& cfg, const std::map<RuleMask, MassTable>& tables) {
  ordered_json out = ordered_json::array();
  for (const auto& [reg, table] : tables) {
    ordered_json mass = ordered_json::array();
    for (const auto& [event, q] : table) {
      mass.push_back({{"event", members_json(cfg, event)}, {"p", quantity_json(q)}});
    }
    out.push_back({{"regulation", members_json(cfg, reg)}, {"mass", mass}});
  }
  return out;
}

}  // namespace

std::string_view log_base_name(LogBase b) { return b == LogBase::kE ? "e" : "2"; }

AnalysisConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string message = e.what();
    if (auto colon = message.rfind(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw Error(Errc::kParseError, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + message);
  }
  check_keys(doc, "", {"law", "society", "punishment", "preferences", "options"},
             {"law", "society"});
  AnalysisConfig cfg;
  Reader reader(cfg);
  reader.law(doc["law"], "/law");
  if (doc.contains("options")) reader.options(doc["options"], "/options");
  reader.society(doc["society"], "/society");
  if (doc.contains("punishment")) reader.punishment(doc["punishment"], "/punishment");
  if (doc.contains("preferences")) reader.preferences(doc["preferences"], "/preferences");
  cross_validate(cfg);
  return cfg;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParseError, "cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const AnalysisConfig& cfg) {
  ordered_json doc;
  ordered_json rules = ordered_json::array();
  for (const auto& r : cfg.rules) {
    rules.push_back({{"id", r.id}, {"punishment", quantity_json(r.punishment)}});
  }
  doc["law"] = {{"rules", rules}, {"max_rules", cfg.max_rules}};

  ordered_json society;
  society["name"] = cfg.society_name;
  ordered_json players = ordered_json::array();
  for (const auto& p : cfg.players) {
    players.push_back({{"id", p.id},
                       {"weight", quantity_json(p.weight)},
                       {"tables", tables_json(cfg, p.tables)}});
  }
  society["players"] = players;
  society["aggregate"] = tables_json(cfg, cfg.aggregate);
  if (cfg.independent) {
    ordered_json ind = ordered_json::object();
    for (std::size_t r = 0; r < cfg.rules.size(); ++r) {
      ind[cfg.rules[r].id] = quantity_json((*cfg.independent)[r]);
    }
    society["independent"] = ind;
  }
  doc["society"] = society;

  ordered_json overrides = ordered_json::array();
  for (const auto& [event, v] : cfg.overrides) {
    overrides.push_back({{"event", members_json(cfg, event)}, {"value", quantity_json(v)}});
  }
  doc["punishment"] = {
      {"mode", cfg.mode == PunishmentMode::kAdditive ? "additive" : "entropy"},
      {"extension", std::string(extension_name(cfg.extension))},
      {"overrides", overrides}};

  ordered_json prefs = ordered_json::array();
  for (const auto& spec : cfg.preferences) {
    ordered_json entry;
    entry["player"] = spec.player;
    for (const auto& [key, pairs] : {std::pair{"strict", &spec.strict},
                                     std::pair{"indifferent", &spec.indifferent}}) {
      ordered_json arr = ordered_json::array();
      for (const auto& [a, b] : *pairs) {
        arr.push_back(ordered_json::array({members_json(cfg, a), members_json(cfg, b)}));
      }
      entry[key] = arr;
    }
    ordered_json top = ordered_json::array();
    for (RuleMask t : spec.top) top.push_back(members_json(cfg, t));
    entry["top"] = top;
    if (spec.threshold) entry["threshold"] = quantity_json(*spec.threshold);
    prefs.push_back(entry);
  }
  doc["preferences"] = prefs;

  ordered_json options;
  options["variant"] = std::string(variant_name(cfg.variant));
  options["log_base"] = std::string(log_base_name(cfg.log_base));
  options["deal_distance"] = std::string(deal_distance_name(cfg.deal_distance));
  ordered_json labels = ordered_json::object();
  for (const auto& [label, mask] : cfg.labels) labels[label] = members_json(cfg, mask);
  options["labels"] = labels;
  if (cfg.allowlist) {
    ordered_json allow = ordered_json::array();
    for (RuleMask m : *cfg.allowlist) allow.push_back(members_json(cfg, m));
    options["allowlist"] = allow;
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : cfg.edge_overrides) {
    edges.push_back({{"from", members_json(cfg, e.from)},
                     {"to", members_json(cfg, e.to)},
                     {"weight", quantity_json(e.weight)},
                     {"symmetric", e.symmetric}});
  }
  options["edge_overrides"] = edges;
  doc["options"] = options;
  return doc.dump(2) + "\n";
}

LawPtr build_law(const AnalysisConfig& cfg) {
  return std::make_shared<const Law>(cfg.rules, cfg.max_rules);
}

std::shared_ptr<const Society> build_society(const AnalysisConfig& cfg, LawPtr law) {
  const auto models = [&](const std::map<RuleMask, MassTable>& tables) {
    std::map<RuleMask, ProbabilityModel> out;
    for (const auto& [reg, table] : tables) {
      out.emplace(reg, ProbabilityModel(Regulation(law, reg), table));
    }
    return out;
  };
  SocietyData data;
  data.name = cfg.society_name;
  for (const auto& p : cfg.players) data.players.push_back({p.id, p.weight, models(p.tables)});
  data.aggregate = models(cfg.aggregate);
  data.independent = cfg.independent;
  return std::make_shared<const Society>(std::move(law), std::move(data));
}

PunishmentModel build_punishment(const AnalysisConfig& cfg, LawPtr law) {
  return PunishmentModel(std::move(law), cfg.mode, cfg.overrides);
}

GraphOptions graph_options(const AnalysisConfig& cfg) {
  GraphOptions opts;
  opts.variant = cfg.variant;
  opts.extension = cfg.extension;
  opts.allowlist = cfg.allowlist;
  for (const auto& e : cfg.edge_overrides) {
    opts.weight_overrides[{e.from, e.to}] = e.weight;
    if (e.symmetric) opts.weight_overrides[{e.to, e.from}] = e.weight;
  }
  return opts;
}

GameOfGames build_graph(const AnalysisConfig& cfg) {
  LawPtr law = build_law(cfg);
  auto society = build_society(cfg, law);
  return build_graph(std::move(society), build_punishment(cfg, law), graph_options(cfg));
}

ConsensusOptions consensus_options(const AnalysisConfig& cfg) {
  ConsensusOptions opts;
  opts.direction = cfg.deal_distance;
  return opts;
}

PreferenceProfile build_profile(const AnalysisConfig& cfg, const GameOfGames& g) {
  PreferenceProfile profile;
  for (const auto& spec : cfg.preferences) {
    std::optional<double> threshold;
    if (spec.threshold) threshold = spec.threshold->value;
    profile.players.push_back({spec.player, preference_order(spec, g.nodes()), threshold});
  }
  return profile;
}

std::string regulation_name(const AnalysisConfig& cfg, RuleMask mask) {
  for (const auto& [label, m] : cfg.labels) {
    if (m == mask) return label;
  }
  std::string out = "{";
  bool first = true;
  for (std::size_t r = 0; r < cfg.rules.size(); ++r) {
    if (!((mask >> r) & 1u)) continue;
    if (!first) out += ",";
    out += cfg.rules[r].id;
    first = false;
  }
  return out + "}";
}

RuleMask resolve_set(const AnalysisConfig& cfg, std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  for (const auto& [label, mask] : cfg.labels) {
    if (label == text) return mask;
  }
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    text = trim(text.substr(1, text.size() - 2));
  }
  RuleMask mask = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view id = trim(text.substr(0, comma));
    auto it = std::find_if(cfg.rules.begin(), cfg.rules.end(),
                           [&](const Rule& r) { return r.id == id; });
    if (it == cfg.rules.end()) {
      throw Error(Errc::kInvalidArgument, "unknown regulation or rule '" + std::string(id) + "'");
    }
    mask |= RuleMask{1} << (it - cfg.rules.begin());
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return mask;
}

}  // namespace lexmetric
