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

#include "lexmetric/law.hpp"

#include <bit>
#include <set>

#include "lexmetric/error.hpp"

namespace lexmetric {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidLaw: return "InvalidLaw";
    case Errc::kInvalidRegulation: return "InvalidRegulation";
    case Errc::kMissingTable: return "MissingTable";
    case Errc::kInvalidMass: return "InvalidMass";
    case Errc::kUnpunished: return "Unpunished";
    case Errc::kRuleNotInRegulation: return "RuleNotInRegulation";
    case Errc::kRegulationMismatch: return "RegulationMismatch";
    case Errc::kAbsoluteContinuityViolated: return "AbsoluteContinuityViolated";
    case Errc::kLawMismatch: return "LawMismatch";
    case Errc::kNotAnExtension: return "NotAnExtension";
    case Errc::kLawTooLarge: return "LawTooLarge";
    case Errc::kNotMonotone: return "NotMonotone";
    case Errc::kNotAPreorder: return "NotAPreorder";
    case Errc::kEmptyMaximalSet: return "EmptyMaximalSet";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
    case Errc::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

std::vector<RuleMask> submasks(RuleMask mask) {
  std::vector<RuleMask> out;
  out.reserve(std::size_t{1} << std::popcount(mask));
  // Walk submasks downwards from `mask`, then reverse.
  RuleMask s = mask;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
  return {out.rbegin(), out.rend()};
}

Law::Law(std::vector<Rule> rules, std::size_t cap)
    : rules_(std::move(rules)), cap_(cap) {
  if (cap_ == 0 || cap_ > kHardRuleCap) {
    throw Error(Errc::kInvalidLaw, "rule cap must be in [1, " +
                                       std::to_string(kHardRuleCap) + "]");
  }
  if (rules_.empty()) throw Error(Errc::kInvalidLaw, "a law needs at least one rule");
  if (rules_.size() > cap_) {
    throw Error(Errc::kLawTooLarge,
                "law has " + std::to_string(rules_.size()) +
                    " rules, cap is " + std::to_string(cap_));
  }
  std::set<std::string_view> seen;
  for (const auto& rule : rules_) {
    if (rule.id.empty()) throw Error(Errc::kInvalidLaw, "empty rule id");
    if (!seen.insert(rule.id).second) {
      throw Error(Errc::kInvalidLaw, "duplicate rule id '" + rule.id + "'");
    }
    if (!(rule.punishment.value >= 0.0)) {
      throw Error(Errc::kInvalidLaw,
                  "punishment of rule '" + rule.id + "' must be >= 0");
    }
  }
}

RuleMask Law::full_mask() const {
  return static_cast<RuleMask>((std::uint64_t{1} << size()) - 1);
}

std::optional<std::size_t> Law::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].id == id) return i;
  }
  return std::nullopt;
}

RuleMask Law::mask_of(std::span<const std::string> ids) const {
  RuleMask mask = 0;
  for (const auto& id : ids) {
    auto i = index_of(id);
    if (!i) throw Error(Errc::kInvalidRegulation, "unknown rule '" + id + "'");
    mask |= RuleMask{1} << *i;
  }
  return mask;
}

std::vector<std::string> Law::members(RuleMask mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if ((mask >> i) & 1u) out.push_back(rules_[i].id);
  }
  return out;
}

std::string Law::format(RuleMask mask) const {
  std::string out = "{";
  bool first = true;
  for (const auto& id : members(mask)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

bool operator==(const Law& a, const Law& b) {
  if (&a == &b) return true;
  if (a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].id != b.rules_[i].id ||
        a.rules_[i].punishment.value != b.rules_[i].punishment.value) {
      return false;
    }
  }
  return true;
}

Regulation::Regulation(LawPtr law, RuleMask members)
    : law_(std::move(law)), mask_(members) {
  if (!law_) throw Error(Errc::kInvalidRegulation, "regulation without a law");
  if (!is_subset(mask_, law_->full_mask())) {
    throw Error(Errc::kInvalidRegulation,
                "regulation references rules outside the law");
  }
}

Regulation Regulation::from_ids(LawPtr law, std::span<const std::string> ids) {
  RuleMask mask = law->mask_of(ids);
  return Regulation(std::move(law), mask);
}

std::size_t Regulation::size() const { return std::popcount(mask_); }

bool Regulation::same_law(const Regulation& other) const {
  return law_ == other.law_ || *law_ == *other.law_;
}

EventSpace event_space(const Regulation& regulation) {
  return EventSpace{regulation, submasks(regulation.mask())};
}

}  // namespace lexmetric
