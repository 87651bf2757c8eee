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

#include "lexmetric/society.hpp"

#include "lexmetric/error.hpp"

namespace lexmetric {

Society::Society(LawPtr law, SocietyData data)
    : law_(std::move(law)), data_(std::move(data)) {
  Quantity total = Quantity::zero();
  for (const auto& player : data_.players) {
    if (!(player.weight.value >= 0.0)) {
      throw Error(Errc::kValidationError,
                  "player '" + player.id + "' has a negative weight");
    }
    total = total + player.weight;
    for (const auto& [mask, table] : player.tables) {
      if (!(table.regulation().law() == *law_) ||
          table.regulation().mask() != mask) {
        throw Error(Errc::kValidationError,
                    "table of player '" + player.id + "' is keyed to the wrong regulation");
      }
    }
  }
  if (!data_.players.empty() && !(total.value > 0.0)) {
    throw Error(Errc::kValidationError, "player weights must sum to a positive value");
  }
  for (const auto& player : data_.players) {
    weights_.push_back(player.weight / total);
  }
  for (const auto& [mask, table] : data_.aggregate) {
    if (!(table.regulation().law() == *law_) || table.regulation().mask() != mask) {
      throw Error(Errc::kValidationError, "aggregate table keyed to the wrong regulation");
    }
  }
  if (data_.independent) {
    if (data_.independent->size() != law_->size()) {
      throw Error(Errc::kValidationError,
                  "independence generator needs one probability per rule");
    }
    for (const auto& q : *data_.independent) {
      if (!(q.value >= 0.0 && q.value <= 1.0)) {
        throw Error(Errc::kValidationError,
                    "independent breach probabilities must lie in [0,1]");
      }
    }
  }
}

bool Society::covers(RuleMask regulation) const {
  if (data_.aggregate.contains(regulation)) return true;
  bool any = false;
  bool all = !data_.players.empty();
  for (const auto& player : data_.players) {
    bool has = player.tables.contains(regulation);
    any = any || has;
    all = all && has;
  }
  if (all) return true;
  return !any && data_.independent.has_value();
}

ProbabilityModel mean_probability(const Society& society,
                                  const Regulation& regulation) {
  if (!(regulation.law() == society.law())) {
    throw Error(Errc::kLawMismatch, "regulation is not drawn from the society's law");
  }
  const RuleMask mask = regulation.mask();
  if (auto it = society.aggregate().find(mask); it != society.aggregate().end()) {
    return it->second;
  }
  const auto& players = society.players();
  std::vector<const ProbabilityModel*> tables;
  const Player* missing = nullptr;
  for (const auto& player : players) {
    auto it = player.tables.find(mask);
    if (it == player.tables.end()) {
      if (!missing) missing = &player;
    } else {
      tables.push_back(&it->second);
    }
  }
  if (!players.empty() && !missing) {
    std::map<RuleMask, Quantity> mass;
    const auto& weights = society.normalized_weights();
    for (std::size_t n = 0; n < tables.size(); ++n) {
      for (const auto& [event, q] : tables[n]->entries()) {
        auto [it, inserted] = mass.try_emplace(event, Quantity::zero());
        it->second = it->second + weights[n] * q;
      }
    }
    return ProbabilityModel(regulation, std::move(mass));
  }
  if (tables.empty() && society.independent()) {
    return ProbabilityModel::independent(regulation, *society.independent());
  }
  std::string why = missing ? " (player '" + missing->id + "' has no table)" : "";
  throw Error(Errc::kMissingTable,
              "no probability data for regulation " + regulation.format() + why);
}

}  // namespace lexmetric
