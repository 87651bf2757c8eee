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

#include <cstddef>
#include <utility>
#include <vector>

#include "lexmetric/law.hpp"

namespace lexmetric {

// A reflexive, transitive relation over a fixed list of regulations.
// leq(i, j) reads "the i-th regulation is at most as preferred as the j-th".
class Preorder {
 public:
  using Pair = std::pair<RuleMask, RuleMask>;  // (worse, better)

  // Only the reflexive pairs.
  static Preorder empty(std::vector<RuleMask> domain);

  // Reflexive-transitive closure of the declared pairs. Throws kNotAPreorder
  // when the closure makes a declared strict pair indifferent, and
  // kInvalidArgument for regulations outside the domain.
  static Preorder from_pairs(std::vector<RuleMask> domain,
                             const std::vector<Pair>& strict,
                             const std::vector<Pair>& indifferent = {});

  // Row-major |domain|^2 matrix. Throws kNotAPreorder unless reflexive and
  // transitive.
  static Preorder from_matrix(std::vector<RuleMask> domain,
                              std::vector<char> leq);

  // x <= y iff score(y) <= score(x): lower scores are preferred.
  static Preorder from_scores(std::vector<RuleMask> domain,
                              const std::vector<double>& scores);

  std::size_t size() const { return domain_.size(); }
  const std::vector<RuleMask>& domain() const { return domain_; }
  std::size_t index_of(RuleMask mask) const;

  bool leq(std::size_t i, std::size_t j) const { return rel_[i * size() + j]; }
  bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  bool is_total() const;

  // Pairs that regenerate this relation through from_pairs.
  std::vector<Pair> strict_pairs() const;
  std::vector<Pair> indifferent_pairs() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  Preorder(std::vector<RuleMask> domain, std::vector<char> rel)
      : domain_(std::move(domain)), rel_(std::move(rel)) {}

  std::vector<RuleMask> domain_;
  std::vector<char> rel_;
};

}  // namespace lexmetric
