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
#include <vector>

#include "lexmetric/law.hpp"
#include "lexmetric/probability.hpp"

namespace lexmetric {

enum class PunishmentMode {
  kAdditive,  // sum of per-rule punishments unless overridden
  kEntropy,   // log(1/P(x)), 0 where P(x) = 0
};

// Punishment g on breach events. In additive mode g(empty) is 0; entropy
// mode applies log(1/P(x)) to every event, the empty one included, so that
// expected severity equals the entropy.
class PunishmentModel {
 public:
  // Throws kValidationError for negative overrides, a non-zero override on
  // the empty event, or override events outside the law.
  explicit PunishmentModel(LawPtr law,
                           PunishmentMode mode = PunishmentMode::kAdditive,
                           std::map<RuleMask, Quantity> overrides = {});

  PunishmentMode mode() const { return mode_; }
  const Law& law() const { return *law_; }
  const std::map<RuleMask, Quantity>& overrides() const { return overrides_; }
  const std::vector<Quantity>& base() const { return base_; }

  // `probability` is only consulted in entropy mode.
  Quantity at(RuleMask event, const ProbabilityModel& probability) const;

  // Copy with one rule's base punishment replaced.
  PunishmentModel with_rule_punishment(std::size_t rule, Quantity value) const;

 private:
  LawPtr law_;
  PunishmentMode mode_;
  std::vector<Quantity> base_;
  std::map<RuleMask, Quantity> overrides_;
};

}  // namespace lexmetric
