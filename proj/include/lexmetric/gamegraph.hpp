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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexmetric/divergence.hpp"
#include "lexmetric/lgame.hpp"
#include "lexmetric/society.hpp"

namespace lexmetric {

struct GraphOptions {
  Variant variant = Variant::kDirected;
  Extension extension = Extension::kZero;
  // Restricts the node set; every regulation of the law when unset.
  std::optional<std::vector<RuleMask>> allowlist;
  // Fixed weights for (from, to) edges, bypassing the premetric.
  std::map<std::pair<RuleMask, RuleMask>, Quantity> weight_overrides;
};

// The complete weighted digraph over the regulations of one law under one
// society. The edge u -> v weighs the resistance of moving from u to v,
// i.e. D(v || u) under the chosen variant. Node games and edge weights are
// computed on first use and memoized; concurrent readers are safe.
class GameOfGames {
 public:
  // Throws kInvalidArgument for allowlist entries outside the law.
  GameOfGames(std::shared_ptr<const Society> society, PunishmentModel punishment,
              GraphOptions options = {});
  ~GameOfGames();
  GameOfGames(GameOfGames&&) noexcept;
  GameOfGames& operator=(GameOfGames&&) noexcept;

  const Law& law() const { return society_->law(); }
  const LawPtr& law_ptr() const { return society_->law_ptr(); }
  const Society& society() const { return *society_; }
  const PunishmentModel& punishment() const { return punishment_; }
  const GraphOptions& options() const { return options_; }
  Variant variant() const { return options_.variant; }

  // Ascending by mask.
  const std::vector<RuleMask>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool has_node(RuleMask mask) const;
  // Position of `mask` in nodes(); throws kInvalidArgument if absent.
  std::size_t index_of(RuleMask mask) const;

  // Throws kMissingTable the first time an uncovered node is touched.
  const LGame& game(RuleMask node) const;

  Quantity edge(RuleMask from, RuleMask to) const;
  double weight(RuleMask from, RuleMask to) const { return edge(from, to).value; }
  bool is_overridden(RuleMask from, RuleMask to) const;

  std::string label(RuleMask node) const { return law().format(node); }

 private:
  struct Memo;

  std::shared_ptr<const Society> society_;
  PunishmentModel punishment_;
  GraphOptions options_;
  std::vector<RuleMask> nodes_;
  std::vector<std::int32_t> position_;  // mask -> index in nodes_, -1 if absent
  std::unique_ptr<Memo> memo_;
};

// Throws kLawTooLarge when the law exceeds its rule cap.
GameOfGames build_graph(std::shared_ptr<const Society> society,
                        PunishmentModel punishment, GraphOptions options = {});

struct LegalPath {
  std::vector<RuleMask> nodes;
  Quantity length;
  bool incremental = false;  // every step adds exactly one rule
};

// Sums edge weights left to right; sets `incremental`.
LegalPath make_path(const GameOfGames& g, std::vector<RuleMask> nodes);

// Minimum-length path. Among equal lengths (within 1e-12 relative) the one
// with fewest edges wins, then the lexicographically smallest mask sequence.
LegalPath shortest_path(const GameOfGames& g, RuleMask from, RuleMask to);

// Up to k loopless paths over the full graph in nondecreasing length (Yen).
std::vector<LegalPath> k_shortest_paths(const GameOfGames& g, RuleMask from,
                                        RuleMask to, std::size_t k);

// Paths that add the rules of to \ from one at a time, ranked by length then
// mask sequence; min(k, m!) of them when every intermediate node exists.
// Throws kNotMonotone unless from ⊆ to.
std::vector<LegalPath> k_shortest_incremental_paths(const GameOfGames& g,
                                                    RuleMask from, RuleMask to,
                                                    std::size_t k);

// Shortest-path distance; a quasi-metric.
double path_distance(const GameOfGames& g, RuleMask u, RuleMask v);

// All-pairs path distances indexed like g.nodes().
std::vector<std::vector<double>> all_path_distances(const GameOfGames& g);

// Open ball {y : weight(center, y) < r}. Throws kInvalidArgument for r < 0.
std::vector<RuleMask> ball(const GameOfGames& g, RuleMask center, double r);

// True when super's regulation is contained in sub's and every titere rule
// of sub that lies in super is titere in super too. Throws kLawMismatch.
bool is_subgame(const LGame& sub, const LGame& super);

// Smallest positive weight over distinct ordered pairs; 0 if none is positive.
double graph_step(const GameOfGames& g);

// r <= graph_step(g): every distinct pair with a positive weight weighs at
// least r. Zero-weight pairs (rule removals under the directed variant) do
// not count against the step.
bool is_r_step(const GameOfGames& g, double r);

// Graphviz digraph; nodes ordered by mask, edges annotated with 6-place
// decimal weights.
std::string to_dot(const GameOfGames& g);

}  // namespace lexmetric
