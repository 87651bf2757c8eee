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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexmetric/consensus.hpp"
#include "lexmetric/divergence.hpp"
#include "lexmetric/gamegraph.hpp"
#include "lexmetric/law.hpp"
#include "lexmetric/punishment.hpp"
#include "lexmetric/society.hpp"

namespace lexmetric {

enum class LogBase { kE, k2 };

std::string_view log_base_name(LogBase b);

using MassTable = std::map<RuleMask, Quantity>;

struct PlayerSpec {
  std::string id;
  Quantity weight = Quantity::exactly(Rational(1));
  std::map<RuleMask, MassTable> tables;

  friend bool operator==(const PlayerSpec&, const PlayerSpec&) = default;
};

struct PreferenceSpec {
  std::string player;
  std::vector<Preorder::Pair> strict;       // (worse, better)
  std::vector<Preorder::Pair> indifferent;
  std::vector<RuleMask> top;                // strictly above everything else
  std::optional<Quantity> threshold;

  friend bool operator==(const PreferenceSpec&, const PreferenceSpec&) = default;
};

struct EdgeOverride {
  RuleMask from = 0;
  RuleMask to = 0;
  Quantity weight;
  bool symmetric = false;

  friend bool operator==(const EdgeOverride&, const EdgeOverride&) = default;
};

// Plain data mirror of a config document. Every field has been validated
// by parse_config; the build_* helpers cannot fail on a parsed config
// except through lazily surfaced MissingTable errors.
struct AnalysisConfig {
  std::vector<Rule> rules;
  std::size_t max_rules = kDefaultRuleCap;

  std::string society_name;
  std::vector<PlayerSpec> players;
  std::map<RuleMask, MassTable> aggregate;
  std::optional<std::vector<Quantity>> independent;  // indexed by rule

  PunishmentMode mode = PunishmentMode::kAdditive;
  Extension extension = Extension::kZero;
  std::map<RuleMask, Quantity> overrides;

  std::vector<PreferenceSpec> preferences;

  Variant variant = Variant::kDirected;
  LogBase log_base = LogBase::kE;
  DealDistance deal_distance = DealDistance::kTowardMaximal;
  std::vector<std::pair<std::string, RuleMask>> labels;
  std::optional<std::vector<RuleMask>> allowlist;
  std::vector<EdgeOverride> edge_overrides;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

// Throws kParseError (with line and column) or kValidationError (with a
// JSON pointer to the offending field).
AnalysisConfig parse_config(std::string_view text);
AnalysisConfig load_config(const std::string& path);
std::string emit_config(const AnalysisConfig& config);

LawPtr build_law(const AnalysisConfig& config);
std::shared_ptr<const Society> build_society(const AnalysisConfig& config, LawPtr law);
PunishmentModel build_punishment(const AnalysisConfig& config, LawPtr law);
GraphOptions graph_options(const AnalysisConfig& config);
GameOfGames build_graph(const AnalysisConfig& config);
ConsensusOptions consensus_options(const AnalysisConfig& config);
// Preferences over g.nodes(); throws kNotAPreorder, kInvalidArgument.
PreferenceProfile build_profile(const AnalysisConfig& config, const GameOfGames& g);

// Label when one is defined, else "{a,b}".
std::string regulation_name(const AnalysisConfig& config, RuleMask mask);

// Accepts a label ("D"), a braced or bare comma-separated member list
// ("{raffle,comp}", "raffle,comp") or "{}". Throws kInvalidArgument.
RuleMask resolve_set(const AnalysisConfig& config, std::string_view text);

}  // namespace lexmetric
