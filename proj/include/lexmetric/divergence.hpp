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

#include <string>
#include <string_view>
#include <vector>

#include "lexmetric/lgame.hpp"
#include "lexmetric/probability.hpp"

namespace lexmetric {

enum class Variant {
  kDirected,  // D(target || source)
  kPlus,      // D(a||b) + D(b||a)
  kMax,       // max(D(a||b), D(b||a))
};

// How the source game's punishment is read on target events it does not
// contain.
enum class Extension {
  kZero,      // g_source(x) = 0 whenever x is not an event of the source
  kRestrict,  // g_source(x) = g_source(x ∩ G_source)
};

std::string_view variant_name(Variant v);
std::string_view extension_name(Extension e);

struct DivergenceReport {
  Quantity value;
  std::string target;
  std::string source;
  Variant variant = Variant::kDirected;
};

// Relative entropy sum_x p(x) log(p(x)/q(x)), natural log. Terms with
// p(x) = 0 contribute 0. Throws kRegulationMismatch when the models live on
// different regulations and kAbsoluteContinuityViolated when q(x) = 0 < p(x).
double kl_social_divergence(const ProbabilityModel& p, const ProbabilityModel& q);

// Social resistance of moving from `source` to `target`:
//   sum over events x of the target of p_target(x) |g_target(x) - g_source(x)|.
// Throws kUnpunished and kLawMismatch.
Quantity lgame_premetric(const LGame& target, const LGame& source,
                         Extension extension = Extension::kZero);

Quantity symmetrize_plus(const LGame& a, const LGame& b,
                         Extension extension = Extension::kZero);
Quantity symmetrize_max(const LGame& a, const LGame& b,
                        Extension extension = Extension::kZero);

// Dispatches on `variant`; for kDirected this is lgame_premetric.
Quantity premetric(Variant variant, const LGame& target, const LGame& source,
                   Extension extension = Extension::kZero);

DivergenceReport divergence_report(Variant variant, const LGame& target,
                                   const LGame& source,
                                   Extension extension = Extension::kZero);

struct CoherenceOptions {
  // C1: factors applied to the added rule's base punishment, ascending.
  std::vector<double> punishment_scales{1.0, 2.0, 5.0};
  // C2: fraction of every event's mass moved to the same event with the
  // added rule breached as well, ascending.
  std::vector<double> mass_shifts{0.0, 0.25, 0.5, 0.75, 1.0};
  Extension extension = Extension::kZero;
};

struct CoherenceVerdict {
  bool severity_monotone = false;     // C1
  bool probability_monotone = false;  // C2
  std::vector<double> severity_series;
  std::vector<double> probability_series;

  bool holds() const { return severity_monotone && probability_monotone; }
};

// Samples D(extended || base) while raising the added rule's punishment and
// while shifting breach mass onto it, and reports whether both series are
// non-decreasing. Throws kNotAnExtension unless extended = base ∪ {rule}.
CoherenceVerdict check_coherence(const LGame& base, const LGame& extended,
                                 std::size_t added_rule,
                                 const CoherenceOptions& options = {});

}  // namespace lexmetric
