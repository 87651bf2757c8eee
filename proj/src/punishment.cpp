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

#include "lexmetric/punishment.hpp"

#include <cmath>

#include "lexmetric/error.hpp"

namespace lexmetric {

PunishmentModel::PunishmentModel(LawPtr law, PunishmentMode mode,
                                 std::map<RuleMask, Quantity> overrides)
    : law_(std::move(law)), mode_(mode), overrides_(std::move(overrides)) {
  for (const auto& rule : law_->rules()) base_.push_back(rule.punishment);
  for (const auto& [event, value] : overrides_) {
    if (!is_subset(event, law_->full_mask())) {
      throw Error(Errc::kValidationError, "punishment override on an event outside the law");
    }
    if (!(value.value >= 0.0)) {
      throw Error(Errc::kValidationError,
                  "punishment override for " + law_->format(event) + " is negative");
    }
    if (event == 0 && value.value != 0.0) {
      throw Error(Errc::kValidationError, "the empty event always has punishment 0");
    }
  }
}

Quantity PunishmentModel::at(RuleMask event,
                             const ProbabilityModel& probability) const {
  if (mode_ == PunishmentMode::kEntropy) {
    const double p = probability.p(event);
    return Quantity::approx(p > 0.0 ? -std::log(p) : 0.0);
  }
  if (event == 0) return Quantity::zero();
  if (auto it = overrides_.find(event); it != overrides_.end()) return it->second;
  Quantity total = Quantity::zero();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if ((event >> i) & 1u) total = total + base_[i];
  }
  return total;
}

PunishmentModel PunishmentModel::with_rule_punishment(std::size_t rule,
                                                      Quantity value) const {
  if (rule >= base_.size()) throw Error(Errc::kInvalidArgument, "rule index out of range");
  if (!(value.value >= 0.0)) throw Error(Errc::kInvalidArgument, "negative punishment");
  PunishmentModel copy = *this;
  copy.base_[rule] = std::move(value);
  return copy;
}

}  // namespace lexmetric
