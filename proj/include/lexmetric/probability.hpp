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
#include <span>

#include "lexmetric/law.hpp"
#include "lexmetric/rational.hpp"

namespace lexmetric {

// Breach distribution over the event space of one regulation. Events absent
// from the table have mass 0.
class ProbabilityModel {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // Throws kInvalidMass when an event is not a subset of the regulation, a
  // mass lies outside [0,1], or the total differs from 1 by more than
  // kSumTolerance.
  ProbabilityModel(Regulation regulation, std::map<RuleMask, Quantity> mass);

  // Independent-compliance generator: event x gets
  // prod_{r in x} q_r * prod_{r in G \ x} (1 - q_r), with q indexed by law
  // rule position. Only regulation members are read from `breach`.
  static ProbabilityModel independent(const Regulation& regulation,
                                      std::span<const Quantity> breach);

  const Regulation& regulation() const { return regulation_; }
  const std::map<RuleMask, Quantity>& entries() const { return mass_; }

  Quantity at(RuleMask event) const;
  double p(RuleMask event) const;
  // True when every entry carries an exact rational.
  bool is_exact() const;

 private:
  Regulation regulation_;
  std::map<RuleMask, Quantity> mass_;
};

}  // namespace lexmetric
