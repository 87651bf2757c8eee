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

#include "lexmetric/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lexmetric/error.hpp"

namespace lexmetric {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_graph_domain(const Preorder& preference, const GameOfGames& g) {
  if (preference.domain() != g.nodes()) {
    throw Error(Errc::kInvalidArgument,
                "preference domain differs from the graph's regulations");
  }
}

std::vector<double> set_distances(const GameOfGames& g,
                                  const std::vector<RuleMask>& maximal,
                                  DealDistance direction) {
  std::vector<double> out;
  out.reserve(g.node_count());
  for (RuleMask y : g.nodes()) out.push_back(distance_to_set(g, maximal, y, direction));
  return out;
}

// Bron-Kerbosch with pivoting over the comparability graph.
void extend_chains(const Preorder& p, std::vector<std::size_t>& current,
                   std::vector<std::size_t> candidates, std::vector<std::size_t> excluded,
                   std::vector<std::vector<std::size_t>>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(current);
    return;
  }
  std::size_t pivot = candidates.empty() ? excluded.front() : candidates.front();
  std::size_t best = 0;
  for (const auto* pool : {&candidates, &excluded}) {
    for (std::size_t u : *pool) {
      std::size_t links = 0;
      for (std::size_t v : candidates) links += (u != v && p.comparable(u, v));
      if (links > best) {
        best = links;
        pivot = u;
      }
    }
  }
  const std::vector<std::size_t> snapshot = candidates;
  for (std::size_t v : snapshot) {
    if (v != pivot && p.comparable(pivot, v)) continue;
    std::vector<std::size_t> next_candidates, next_excluded;
    for (std::size_t u : candidates) {
      if (u != v && p.comparable(u, v)) next_candidates.push_back(u);
    }
    for (std::size_t u : excluded) {
      if (u != v && p.comparable(u, v)) next_excluded.push_back(u);
    }
    current.push_back(v);
    extend_chains(p, current, std::move(next_candidates), std::move(next_excluded), out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

std::vector<std::vector<RuleMask>> player_maximal_sets(const GameOfGames& g,
                                                       const PreferenceProfile& profile) {
  std::vector<std::vector<RuleMask>> out;
  for (const auto& player : profile.players) {
    require_graph_domain(player.order, g);
    auto m = maximal_elements(player.order);
    if (m.empty()) {
      throw Error(Errc::kEmptyMaximalSet, "player '" + player.id + "' has no maximal deal");
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::string_view deal_distance_name(DealDistance d) {
  return d == DealDistance::kTowardMaximal ? "toward_maximal" : "from_maximal";
}

std::size_t TotalPreorderRanking::class_of(RuleMask deal) const {
  auto it = class_index.find(deal);
  if (it == class_index.end()) {
    throw Error(Errc::kInvalidArgument, "regulation is not ranked");
  }
  return it->second;
}

Preorder TotalPreorderRanking::as_preorder() const {
  std::vector<RuleMask> domain;
  std::vector<double> scores;
  for (const auto& [mask, cls] : class_index) {
    domain.push_back(mask);
    scores.push_back(static_cast<double>(cls));
  }
  return Preorder::from_scores(std::move(domain), scores);
}

std::vector<RuleMask> maximal_elements(const Preorder& preference) {
  std::vector<RuleMask> out;
  for (std::size_t i = 0; i < preference.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < preference.size() && !dominated; ++j) {
      dominated = preference.less(i, j);
    }
    if (!dominated) out.push_back(preference.domain()[i]);
  }
  return out;
}

double deal_distance(const GameOfGames& g, RuleMask maximal, RuleMask deal,
                     DealDistance direction) {
  return direction == DealDistance::kTowardMaximal ? g.weight(deal, maximal)
                                                   : g.weight(maximal, deal);
}

double distance_to_set(const GameOfGames& g, const std::vector<RuleMask>& maximal,
                       RuleMask deal, DealDistance direction) {
  double best = kInf;
  for (RuleMask m : maximal) best = std::min(best, deal_distance(g, m, deal, direction));
  return best;
}

TotalPreorderRanking distance_linear_order(const GameOfGames& g,
                                           const std::vector<RuleMask>& maximal,
                                           const ConsensusOptions& options,
                                           std::string player) {
  if (maximal.empty()) throw Error(Errc::kEmptyMaximalSet, "maximal set is empty");
  TotalPreorderRanking ranking;
  ranking.player = std::move(player);
  ranking.maximal = maximal;
  std::sort(ranking.maximal.begin(), ranking.maximal.end());

  std::vector<std::pair<double, RuleMask>> scored;
  for (RuleMask y : g.nodes()) {
    scored.emplace_back(distance_to_set(g, maximal, y, options.direction), y);
  }
  std::sort(scored.begin(), scored.end());
  for (const auto& [score, y] : scored) {
    if (ranking.class_scores.empty() || ranking.class_scores.back() != score) {
      ranking.class_scores.push_back(score);
      ranking.classes.emplace_back();
    }
    ranking.classes.back().push_back(y);
    ranking.class_index[y] = ranking.classes.size() - 1;
  }
  return ranking;
}

bool check_linear_extension(const Preorder& preference,
                            const TotalPreorderRanking& ranking) {
  const auto& dom = preference.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (preference.less(i, j) && !ranking.strictly_below(dom[i], dom[j])) return false;
    }
  }
  return true;
}

bool is_tau_lsc(const Preorder& preference, const GameOfGames& g,
                const std::vector<RuleMask>& maximal, const ConsensusOptions& options) {
  require_graph_domain(preference, g);
  if (maximal.empty()) throw Error(Errc::kEmptyMaximalSet, "maximal set is empty");
  const std::vector<double> s = set_distances(g, maximal, options.direction);
  const std::size_t n = preference.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (options.lsc_scope == LscScope::kDominated) {
      bool dominated = false;
      for (std::size_t b = 0; b < n && !dominated; ++b) dominated = preference.less(a, b);
      if (!dominated) continue;
    }
    // Complement of L(a) = {t : not t <= a} must equal {y : s(y) < r}.
    double inside_max = -kInf, outside_min = kInf;
    for (std::size_t t = 0; t < n; ++t) {
      if (preference.leq(t, a)) {
        outside_min = std::min(outside_min, s[t]);
      } else {
        inside_max = std::max(inside_max, s[t]);
      }
    }
    if (!(inside_max < outside_min)) return false;
  }
  return true;
}

std::vector<std::vector<RuleMask>> maximal_chains(const Preorder& preference) {
  std::vector<std::size_t> all(preference.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  extend_chains(preference, current, all, {}, found);
  std::vector<std::vector<RuleMask>> out;
  for (const auto& chain : found) {
    std::vector<RuleMask> masks;
    for (std::size_t i : chain) masks.push_back(preference.domain()[i]);
    std::sort(masks.begin(), masks.end());
    out.push_back(std::move(masks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_compatible(const Preorder& preference, const GameOfGames& g,
                   const std::vector<RuleMask>& maximal, const ConsensusOptions& options) {
  require_graph_domain(preference, g);
  for (const auto& chain : maximal_chains(preference)) {
    std::vector<std::size_t> idx;
    for (RuleMask m : chain) idx.push_back(preference.index_of(m));
    std::vector<RuleMask> top, anchors;
    for (std::size_t t : idx) {
      bool is_top = std::all_of(idx.begin(), idx.end(),
                                [&](std::size_t c) { return preference.leq(c, t); });
      if (!is_top) continue;
      const RuleMask mask = preference.domain()[t];
      top.push_back(mask);
      if (std::find(maximal.begin(), maximal.end(), mask) != maximal.end()) {
        anchors.push_back(mask);
      }
    }
    if (anchors.empty()) anchors = top;
    for (std::size_t x : idx) {
      for (std::size_t y : idx) {
        if (!preference.leq(x, y)) continue;
        const double dx = distance_to_set(g, anchors, preference.domain()[x], options.direction);
        const double dy = distance_to_set(g, anchors, preference.domain()[y], options.direction);
        if (dy > dx) return false;
      }
    }
  }
  return true;
}

ParetoResult pareto_analysis(const GameOfGames& g, const PreferenceProfile& profile,
                             const ConsensusOptions& options) {
  ParetoResult result;
  const auto maximal = player_maximal_sets(g, profile);
  for (std::size_t n = 0; n < profile.players.size(); ++n) {
    const auto& player = profile.players[n];
    const bool lsc = is_tau_lsc(player.order, g, maximal[n], options);
    result.lsc.push_back(lsc);
    if (!lsc) {
      result.warnings.push_back("preference of player '" + player.id +
                                "' is not lower semicontinuous; Pareto guarantees do not apply");
    }
    result.rankings.push_back(distance_linear_order(g, maximal[n], options, player.id));
  }
  const auto& nodes = g.nodes();
  for (RuleMask x : nodes) {
    bool dominated = false;
    for (RuleMask y : nodes) {
      if (x == y) continue;
      bool weakly_better = true, strictly_better = false;
      for (const auto& r : result.rankings) {
        const double sx = r.score(x), sy = r.score(y);
        if (sy > sx) weakly_better = false;
        if (sy < sx) strictly_better = true;
      }
      if (weakly_better && strictly_better) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.deals.push_back(x);
  }
  return result;
}

std::vector<RuleMask> pareto_deals(const GameOfGames& g, const PreferenceProfile& profile,
                                   const ConsensusOptions& options) {
  return pareto_analysis(g, profile, options).deals;
}

double worst_case_distance(const GameOfGames& g, const PreferenceProfile& profile,
                           RuleMask deal, const ConsensusOptions& options) {
  double worst = 0.0;
  for (const auto& maximal : player_maximal_sets(g, profile)) {
    for (RuleMask m : maximal) {
      worst = std::max(worst, deal_distance(g, m, deal, options.direction));
    }
  }
  return worst;
}

RuleMask closest_pareto_deal(const GameOfGames& g, const PreferenceProfile& profile,
                             const ConsensusOptions& options) {
  const auto deals = pareto_deals(g, profile, options);
  if (deals.empty()) throw Error(Errc::kEmptyMaximalSet, "no Pareto optimal deal");
  RuleMask best = deals.front();
  double best_value = worst_case_distance(g, profile, best, options);
  for (RuleMask d : deals) {
    const double v = worst_case_distance(g, profile, d, options);
    if (v < best_value) {
      best = d;
      best_value = v;
    }
  }
  return best;
}

std::vector<RuleMask> consensus_at(const GameOfGames& g, const PreferenceProfile& profile,
                                   double r, const ConsensusOptions& options) {
  const auto maximal = player_maximal_sets(g, profile);
  std::vector<RuleMask> out;
  for (RuleMask y : g.nodes()) {
    bool everywhere = true;
    for (const auto& m : maximal) {
      if (!(distance_to_set(g, m, y, options.direction) < r)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) out.push_back(y);
  }
  return out;
}

ConsensusRadius min_consensus_radius(const GameOfGames& g, const PreferenceProfile& profile,
                                     const ConsensusOptions& options) {
  const auto maximal = player_maximal_sets(g, profile);
  ConsensusRadius out;
  out.infimum = kInf;
  for (RuleMask y : g.nodes()) {
    double worst = 0.0;
    for (const auto& m : maximal) {
      worst = std::max(worst, distance_to_set(g, m, y, options.direction));
      for (RuleMask k : m) out.candidates.push_back(deal_distance(g, k, y, options.direction));
    }
    if (worst < out.infimum) {
      out.infimum = worst;
      out.witnesses.clear();
    }
    if (worst == out.infimum) out.witnesses.push_back(y);
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()),
                       out.candidates.end());
  out.radius = std::nextafter(out.infimum, kInf);
  return out;
}

std::string_view signer_class_name(SignerClass c) {
  switch (c) {
    case SignerClass::kBoycotter: return "boycotter";
    case SignerClass::kStubborn: return "stubborn";
    case SignerClass::kOrdinary: return "ordinary";
  }
  return "ordinary";
}

SignerClass classify_signer(const GameOfGames& g, double r) {
  if (!(r >= 0.0)) throw Error(Errc::kInvalidArgument, "signer threshold must be >= 0");
  if (r == 0.0) return SignerClass::kBoycotter;
  return r < graph_step(g) ? SignerClass::kStubborn : SignerClass::kOrdinary;
}

}  // namespace lexmetric
