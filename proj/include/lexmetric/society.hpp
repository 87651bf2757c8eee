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
#include <optional>
#include <string>
#include <vector>

#include "lexmetric/law.hpp"
#include "lexmetric/probability.hpp"

namespace lexmetric {

struct Player {
  std::string id;
  Quantity weight = Quantity::exactly(Rational(1));
  // Keyed by regulation mask.
  std::map<RuleMask, ProbabilityModel> tables;
};

struct SocietyData {
  std::string name;
  std::vector<Player> players;
  // Directly estimated distributions; take precedence over player tables.
  std::map<RuleMask, ProbabilityModel> aggregate;
  // Per-rule breach probabilities for the independence generator, indexed
  // by law rule position. Used only for regulations nobody covers.
  std::optional<std::vector<Quantity>> independent;
};

class Society {
 public:
  // Throws kValidationError on negative weights, non-positive weight sum,
  // tables from another law, or generator probabilities outside [0,1].
  Society(LawPtr law, SocietyData data);

  const std::string& name() const { return data_.name; }
  const Law& law() const { return *law_; }
  const LawPtr& law_ptr() const { return law_; }
  const std::vector<Player>& players() const { return data_.players; }
  const std::map<RuleMask, ProbabilityModel>& aggregate() const {
    return data_.aggregate;
  }
  const std::optional<std::vector<Quantity>>& independent() const {
    return data_.independent;
  }
  // Weights divided by their global sum.
  const std::vector<Quantity>& normalized_weights() const { return weights_; }

  // Whether mean_probability can produce a model for `regulation`.
  bool covers(RuleMask regulation) const;

 private:
  LawPtr law_;
  SocietyData data_;
  std::vector<Quantity> weights_;
};

// The society's breach distribution for a regulation: the supplied
// aggregate if any, else the weighted mean of the players' tables, else the
// independence generator. Throws kMissingTable when none apply or when only
// some players supply a table.
ProbabilityModel mean_probability(const Society& society,
                                  const Regulation& regulation);

}  // namespace lexmetric
