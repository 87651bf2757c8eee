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

#include "lexmetric/probability.hpp"

#include <cmath>

#include "lexmetric/error.hpp"

namespace lexmetric {

ProbabilityModel::ProbabilityModel(Regulation regulation,
                                   std::map<RuleMask, Quantity> mass)
    : regulation_(std::move(regulation)), mass_(std::move(mass)) {
  const Law& law = regulation_.law();
  double total = 0.0;
  for (const auto& [event, q] : mass_) {
    if (!is_subset(event, regulation_.mask())) {
      throw Error(Errc::kInvalidMass,
                  "event " + law.format(event) + " is not a subset of " +
                      regulation_.format());
    }
    if (!(q.value >= 0.0) || q.value > 1.0 + kSumTolerance) {
      throw Error(Errc::kInvalidMass, "mass of event " + law.format(event) +
                                          " in " + regulation_.format() +
                                          " is outside [0,1]");
    }
    total += q.value;
  }
  if (std::fabs(total - 1.0) > kSumTolerance) {
    throw Error(Errc::kInvalidMass, "masses for " + regulation_.format() +
                                        " sum to " + format_decimal(total, 9) +
                                        ", expected 1");
  }
}

ProbabilityModel ProbabilityModel::independent(
    const Regulation& regulation, std::span<const Quantity> breach) {
  const std::size_t n = regulation.law().size();
  if (breach.size() != n) {
    throw Error(Errc::kInvalidArgument,
                "independence generator needs one probability per rule");
  }
  const Quantity one = Quantity::exactly(Rational(1));
  std::map<RuleMask, Quantity> mass;
  for (RuleMask event : submasks(regulation.mask())) {
    Quantity p = one;
    for (std::size_t i = 0; i < n; ++i) {
      if (!regulation.contains_rule(i)) continue;
      p = p * (((event >> i) & 1u) ? breach[i] : one - breach[i]);
    }
    mass.emplace(event, p);
  }
  return ProbabilityModel(regulation, std::move(mass));
}

Quantity ProbabilityModel::at(RuleMask event) const {
  auto it = mass_.find(event);
  return it == mass_.end() ? Quantity::zero() : it->second;
}

double ProbabilityModel::p(RuleMask event) const {
  auto it = mass_.find(event);
  return it == mass_.end() ? 0.0 : it->second.value;
}

bool ProbabilityModel::is_exact() const {
  for (const auto& [event, q] : mass_) {
    if (!q.is_exact()) return false;
  }
  return true;
}

}  // namespace lexmetric
