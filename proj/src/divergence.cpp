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

#include "lexmetric/divergence.hpp"

#include <cmath>

#include "lexmetric/error.hpp"

namespace lexmetric {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kDirected: return "directed";
    case Variant::kPlus: return "plus";
    case Variant::kMax: return "max";
  }
  return "directed";
}

std::string_view extension_name(Extension e) {
  return e == Extension::kZero ? "zero" : "restrict";
}

double kl_social_divergence(const ProbabilityModel& p, const ProbabilityModel& q) {
  if (!(p.regulation() == q.regulation())) {
    throw Error(Errc::kRegulationMismatch,
                "KL divergence needs both models on the same regulation");
  }
  double total = 0.0;
  for (const auto& [event, mass] : p.entries()) {
    if (mass.value <= 0.0) continue;
    const double qx = q.p(event);
    if (qx <= 0.0) {
      throw Error(Errc::kAbsoluteContinuityViolated,
                  "q vanishes on event " + p.regulation().law().format(event) +
                      " where p is positive");
    }
    total += mass.value * std::log(mass.value / qx);
  }
  // Rounding can leave a tiny negative total for p ≈ q.
  return total < 0.0 ? 0.0 : total;
}

Quantity lgame_premetric(const LGame& target, const LGame& source,
                         Extension extension) {
  if (!target.punished() || !source.punished()) {
    throw Error(Errc::kUnpunished, "the premetric needs two punished l-games");
  }
  if (!target.regulation().same_law(source.regulation())) {
    throw Error(Errc::kLawMismatch, "l-games are defined under different laws");
  }
  const RuleMask source_mask = source.regulation().mask();
  Quantity total = Quantity::zero();
  for (const auto& [event, p] : target.probability().entries()) {
    Quantity g_source = Quantity::zero();
    if (extension == Extension::kRestrict) {
      g_source = source.punishment_at(event & source_mask);
    } else if (is_subset(event, source_mask)) {
      g_source = source.punishment_at(event);
    }
    total = total + p * abs(target.punishment_at(event) - g_source);
  }
  return total;
}

Quantity symmetrize_plus(const LGame& a, const LGame& b, Extension extension) {
  return lgame_premetric(a, b, extension) + lgame_premetric(b, a, extension);
}

Quantity symmetrize_max(const LGame& a, const LGame& b, Extension extension) {
  return max(lgame_premetric(a, b, extension), lgame_premetric(b, a, extension));
}

Quantity premetric(Variant variant, const LGame& target, const LGame& source,
                   Extension extension) {
  switch (variant) {
    case Variant::kDirected: return lgame_premetric(target, source, extension);
    case Variant::kPlus: return symmetrize_plus(target, source, extension);
    case Variant::kMax: return symmetrize_max(target, source, extension);
  }
  return lgame_premetric(target, source, extension);
}

DivergenceReport divergence_report(Variant variant, const LGame& target,
                                   const LGame& source, Extension extension) {
  return DivergenceReport{premetric(variant, target, source, extension),
                          target.regulation().format(),
                          source.regulation().format(), variant};
}

namespace {

// Steps below -1e-12 (relative) count as decreases; smaller dips are
// rounding in series that are flat in exact arithmetic.
bool non_decreasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double slack = 1e-12 * (1.0 + std::fabs(xs[i - 1]));
    if (xs[i] < xs[i - 1] - slack) return false;
  }
  return true;
}

// Moves `fraction` of the mass of every event without `rule` onto the event
// with `rule` added.
ProbabilityModel shift_mass(const ProbabilityModel& model, std::size_t rule,
                            const Quantity& fraction) {
  const RuleMask bit = RuleMask{1} << rule;
  std::map<RuleMask, Quantity> mass;
  for (const auto& [event, q] : model.entries()) {
    mass.try_emplace(event, Quantity::zero());
  }
  for (const auto& [event, q] : model.entries()) {
    if (event & bit) {
      mass[event] = mass[event] + q;
      continue;
    }
    const Quantity moved = q * fraction;
    mass[event] = mass[event] + (q - moved);
    auto [it, inserted] = mass.try_emplace(event | bit, Quantity::zero());
    it->second = it->second + moved;
  }
  return ProbabilityModel(model.regulation(), std::move(mass));
}

}  // namespace

CoherenceVerdict check_coherence(const LGame& base, const LGame& extended,
                                 std::size_t added_rule,
                                 const CoherenceOptions& options) {
  const Regulation& reg = base.regulation();
  if (!reg.same_law(extended.regulation()) || added_rule >= reg.law().size() ||
      reg.contains_rule(added_rule) ||
      extended.regulation().mask() != (reg.mask() | (RuleMask{1} << added_rule))) {
    throw Error(Errc::kNotAnExtension,
                extended.regulation().format() + " is not " + reg.format() +
                    " plus the added rule");
  }
  if (!base.punished() || !extended.punished()) {
    throw Error(Errc::kUnpunished, "coherence checks need punished l-games");
  }

  CoherenceVerdict verdict;
  const Quantity original = extended.punishment()->base()[added_rule];
  for (double scale : options.punishment_scales) {
    const Quantity scaled = original * Quantity::exactly(rational_from_double(scale));
    LGame base_scaled(base.probability(),
                      base.punishment()->with_rule_punishment(added_rule, scaled));
    LGame ext_scaled(extended.probability(),
                     extended.punishment()->with_rule_punishment(added_rule, scaled));
    verdict.severity_series.push_back(
        lgame_premetric(ext_scaled, base_scaled, options.extension).value);
  }
  for (double shift : options.mass_shifts) {
    LGame shifted(shift_mass(extended.probability(), added_rule,
                             Quantity::exactly(rational_from_double(shift))),
                  extended.punishment());
    verdict.probability_series.push_back(
        lgame_premetric(shifted, base, options.extension).value);
  }
  verdict.severity_monotone = non_decreasing(verdict.severity_series);
  verdict.probability_monotone = non_decreasing(verdict.probability_series);
  return verdict;
}

}  // namespace lexmetric
