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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmetric/rational.hpp"

namespace lexmetric {

// Bit i is set when the i-th rule of the law (in declaration order) is a
// member. Used both for regulations and for breach events.
using RuleMask = std::uint32_t;

inline constexpr std::size_t kDefaultRuleCap = 16;
inline constexpr std::size_t kHardRuleCap = 24;

inline bool is_subset(RuleMask sub, RuleMask super) {
  return (sub & ~super) == 0;
}

// All subsets of `mask`, in ascending numeric order. Always starts with 0.
std::vector<RuleMask> submasks(RuleMask mask);

struct Rule {
  std::string id;
  Quantity punishment;  // cost of breaching this rule alone, >= 0

  friend bool operator==(const Rule&, const Rule&) = default;
};

// The finite universe of rules regulations are drawn from.
class Law {
 public:
  // Throws kInvalidLaw on empty/duplicate ids or negative punishments and
  // kLawTooLarge when the rule count exceeds `cap`.
  explicit Law(std::vector<Rule> rules, std::size_t cap = kDefaultRuleCap);

  std::size_t size() const { return rules_.size(); }
  std::size_t cap() const { return cap_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t i) const { return rules_.at(i); }
  RuleMask full_mask() const;
  std::size_t regulation_count() const { return std::size_t{1} << size(); }

  std::optional<std::size_t> index_of(std::string_view id) const;

  // Throws kInvalidRegulation naming the unknown id.
  RuleMask mask_of(std::span<const std::string> ids) const;
  std::vector<std::string> members(RuleMask mask) const;
  // "{tax,comp}" in law order; "{}" for the empty set.
  std::string format(RuleMask mask) const;

  friend bool operator==(const Law& a, const Law& b);

 private:
  std::vector<Rule> rules_;
  std::size_t cap_;
};

using LawPtr = std::shared_ptr<const Law>;

// A subset of a law. The empty regulation is valid.
class Regulation {
 public:
  // Throws kInvalidRegulation when `members` has bits outside the law.
  Regulation(LawPtr law, RuleMask members);

  static Regulation from_ids(LawPtr law, std::span<const std::string> ids);

  const Law& law() const { return *law_; }
  const LawPtr& law_ptr() const { return law_; }
  RuleMask mask() const { return mask_; }
  std::size_t size() const;
  bool contains_rule(std::size_t rule) const {
    return (mask_ >> rule) & 1u;
  }
  bool same_law(const Regulation& other) const;
  std::string format() const { return law_->format(mask_); }

  friend bool operator==(const Regulation& a, const Regulation& b) {
    return a.mask_ == b.mask_ && a.same_law(b);
  }

 private:
  LawPtr law_;
  RuleMask mask_;
};

// The breach events of a regulation: every subset of its members.
struct EventSpace {
  Regulation regulation;
  std::vector<RuleMask> events;
};

EventSpace event_space(const Regulation& regulation);

}  // namespace lexmetric
