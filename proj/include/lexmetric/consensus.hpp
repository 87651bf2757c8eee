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
#include <string_view>
#include <vector>

#include "lexmetric/gamegraph.hpp"
#include "lexmetric/preorder.hpp"

namespace lexmetric {

// Which edge measures how far a deal y is from a most-preferred deal G*.
enum class DealDistance {
  kTowardMaximal,  // D(G* || y): resistance of moving from y to G*
  kFromMaximal,    // D(y || G*): resistance of moving from G* to y
};

// Which weak lower contours must have open complements in the
// lower-semicontinuity check.
enum class LscScope {
  kDominated,    // contours of elements some other element strictly beats
  kAllContours,  // every contour
};

struct ConsensusOptions {
  DealDistance direction = DealDistance::kTowardMaximal;
  LscScope lsc_scope = LscScope::kDominated;
};

std::string_view deal_distance_name(DealDistance d);

struct PlayerPreference {
  std::string id;
  Preorder order;
  std::optional<double> threshold;  // signer threshold r
};

struct PreferenceProfile {
  std::vector<PlayerPreference> players;
};

// Total preorder ranking regulations by their minimum distance from a set of
// most-preferred deals. Classes are listed best (closest) first.
struct TotalPreorderRanking {
  std::string player;
  std::vector<RuleMask> maximal;
  std::vector<std::vector<RuleMask>> classes;
  std::vector<double> class_scores;
  std::map<RuleMask, std::size_t> class_index;

  std::size_t class_of(RuleMask deal) const;
  double score(RuleMask deal) const { return class_scores[class_of(deal)]; }
  // x <^D y: y is strictly closer to the maximal set than x.
  bool strictly_below(RuleMask x, RuleMask y) const {
    return class_of(x) > class_of(y);
  }
  Preorder as_preorder() const;
};

std::vector<RuleMask> maximal_elements(const Preorder& preference);

double deal_distance(const GameOfGames& g, RuleMask maximal, RuleMask deal,
                     DealDistance direction);

// min over `maximal` of deal_distance(m, deal).
double distance_to_set(const GameOfGames& g, const std::vector<RuleMask>& maximal,
                       RuleMask deal, DealDistance direction);

// Throws kEmptyMaximalSet.
TotalPreorderRanking distance_linear_order(const GameOfGames& g,
                                           const std::vector<RuleMask>& maximal,
                                           const ConsensusOptions& options = {},
                                           std::string player = {});

// Every strict preference x < y is strict in the ranking as well.
bool check_linear_extension(const Preorder& preference,
                            const TotalPreorderRanking& ranking);

// Lower semicontinuity with respect to the topology of unions of open balls
// around `maximal`: the complement of each weak lower contour in scope must be
// a strict sublevel set of the distance to `maximal` (the empty set and the
// whole space included).
bool is_tau_lsc(const Preorder& preference, const GameOfGames& g,
                const std::vector<RuleMask>& maximal,
                const ConsensusOptions& options = {});

// Maximal totally-comparable subsets, each sorted by mask; the list is
// sorted too.
std::vector<std::vector<RuleMask>> maximal_chains(const Preorder& preference);

// For every maximal chain C with top class T, and x <= y in C, checks
// d_C(y) <= d_C(x) where d_C is the distance to T ∩ maximal (to T when that
// intersection is empty).
bool is_compatible(const Preorder& preference, const GameOfGames& g,
                   const std::vector<RuleMask>& maximal,
                   const ConsensusOptions& options = {});

struct ParetoResult {
  std::vector<RuleMask> deals;  // ascending by mask
  std::vector<TotalPreorderRanking> rankings;
  std::vector<bool> lsc;  // per player
  std::vector<std::string> warnings;
};

// Maximal elements of the intersection of the players' distance linear
// orders. Players failing is_tau_lsc produce a warning, not an error.
ParetoResult pareto_analysis(const GameOfGames& g, const PreferenceProfile& profile,
                             const ConsensusOptions& options = {});

std::vector<RuleMask> pareto_deals(const GameOfGames& g,
                                   const PreferenceProfile& profile,
                                   const ConsensusOptions& options = {});

// max over players n and their maximal deals k of deal_distance(G*_nk, deal).
double worst_case_distance(const GameOfGames& g, const PreferenceProfile& profile,
                           RuleMask deal, const ConsensusOptions& options = {});

// Pareto deal minimizing worst_case_distance, lowest mask on ties.
RuleMask closest_pareto_deal(const GameOfGames& g, const PreferenceProfile& profile,
                             const ConsensusOptions& options = {});

struct ConsensusRadius {
  // Balls are open, so the intersection is non-empty exactly for r > infimum.
  double infimum = 0.0;
  // Smallest double above the infimum.
  double radius = 0.0;
  std::vector<RuleMask> witnesses;
  // Every realized distance from a maximal deal to a node, ascending.
  std::vector<double> candidates;
};

// Smallest radius at which every player's union of balls around its
// maximal deals shares a regulation.
ConsensusRadius min_consensus_radius(const GameOfGames& g,
                                     const PreferenceProfile& profile,
                                     const ConsensusOptions& options = {});

// Regulations inside every player's union of balls of radius r.
std::vector<RuleMask> consensus_at(const GameOfGames& g, const PreferenceProfile& profile,
                                   double r, const ConsensusOptions& options = {});

enum class SignerClass { kBoycotter, kStubborn, kOrdinary };

std::string_view signer_class_name(SignerClass c);

// boycotter iff r = 0, stubborn iff 0 < r < graph_step(g), ordinary otherwise.
SignerClass classify_signer(const GameOfGames& g, double r);

}  // namespace lexmetric
