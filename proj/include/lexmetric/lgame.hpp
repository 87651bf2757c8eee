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

#include <optional>
#include <string_view>

#include "lexmetric/probability.hpp"
#include "lexmetric/punishment.hpp"
#include "lexmetric/society.hpp"

namespace lexmetric {

// A regulation together with the breach distribution a society induces on
// it and, for a punished l-game, a punishment model.
class LGame {
 public:
  explicit LGame(ProbabilityModel probability,
                 std::optional<PunishmentModel> punishment = std::nullopt);

  const Regulation& regulation() const { return probability_.regulation(); }
  const ProbabilityModel& probability() const { return probability_; }
  const std::optional<PunishmentModel>& punishment() const {
    return punishment_;
  }
  bool punished() const { return punishment_.has_value(); }

  // g(event); throws kUnpunished.
  Quantity punishment_at(RuleMask event) const;

 private:
  ProbabilityModel probability_;
  std::optional<PunishmentModel> punishment_;
};

LGame realize(const Society& society, const Regulation& regulation,
              std::optional<PunishmentModel> punishment = std::nullopt);

// sum_x P(x) g(x). Throws kUnpunished.
Quantity expected_severity(const LGame& game);

// Shannon entropy of the breach distribution, natural log.
double entropy(const LGame& game);

// True when every event containing `rule` has probability 0. Throws
// kRuleNotInRegulation.
bool is_titere(const LGame& game, std::size_t rule);
bool is_titere(const Society& society, const Regulation& regulation,
               std::string_view rule);

// Mask of the titere rules of the game's regulation.
RuleMask titere_rules(const LGame& game);

}  // namespace lexmetric
