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

#include "lexmetric/lgame.hpp"

#include <cmath>

#include "lexmetric/error.hpp"

namespace lexmetric {

LGame::LGame(ProbabilityModel probability,
             std::optional<PunishmentModel> punishment)
    : probability_(std::move(probability)), punishment_(std::move(punishment)) {
  if (punishment_ && !(punishment_->law() == regulation().law())) {
    throw Error(Errc::kLawMismatch, "punishment model belongs to another law");
  }
}

Quantity LGame::punishment_at(RuleMask event) const {
  if (!punishment_) {
    throw Error(Errc::kUnpunished, "l-game on " + regulation().format() + " has no punishment model");
  }
  return punishment_->at(event, probability_);
}

LGame realize(const Society& society, const Regulation& regulation,
              std::optional<PunishmentModel> punishment) {
  return LGame(mean_probability(society, regulation), std::move(punishment));
}

Quantity expected_severity(const LGame& game) {
  if (!game.punished()) {
    throw Error(Errc::kUnpunished, "expected severity needs a punished l-game");
  }
  Quantity total = Quantity::zero();
  for (const auto& [event, p] : game.probability().entries()) {
    total = total + p * game.punishment_at(event);
  }
  return total;
}

double entropy(const LGame& game) {
  double h = 0.0;
  for (const auto& [event, q] : game.probability().entries()) {
    if (q.value > 0.0) h += q.value * -std::log(q.value);
  }
  return h;
}

bool is_titere(const LGame& game, std::size_t rule) {
  const Regulation& reg = game.regulation();
  if (rule >= reg.law().size() || !reg.contains_rule(rule)) {
    throw Error(Errc::kRuleNotInRegulation, "rule is not a member of " + reg.format());
  }
  for (const auto& [event, q] : game.probability().entries()) {
    if (((event >> rule) & 1u) && q.value > 0.0) return false;
  }
  return true;
}

bool is_titere(const Society& society, const Regulation& regulation,
               std::string_view rule) {
  auto index = regulation.law().index_of(rule);
  if (!index) {
    throw Error(Errc::kRuleNotInRegulation, "unknown rule '" + std::string(rule) + "'");
  }
  return is_titere(LGame(mean_probability(society, regulation)), *index);
}

RuleMask titere_rules(const LGame& game) {
  RuleMask out = 0;
  const Regulation& reg = game.regulation();
  for (std::size_t i = 0; i < reg.law().size(); ++i) {
    if (reg.contains_rule(i) && is_titere(game, i)) out |= RuleMask{1} << i;
  }
  return out;
}

}  // namespace lexmetric
