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

#include "lexmetric/gamegraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lexmetric/error.hpp"

namespace lexmetric {

struct GameOfGames::Memo {
  std::mutex mu;
  std::unordered_map<RuleMask, std::unique_ptr<const LGame>> games;
  std::unordered_map<std::uint64_t, Quantity> edges;
};

GameOfGames::GameOfGames(std::shared_ptr<const Society> society,
                         PunishmentModel punishment, GraphOptions options)
    : society_(std::move(society)),
      punishment_(std::move(punishment)),
      options_(std::move(options)),
      memo_(std::make_unique<Memo>()) {
  if (!(punishment_.law() == society_->law())) {
    throw Error(Errc::kLawMismatch, "punishment model and society use different laws");
  }
  const Law& law = society_->law();
  position_.assign(law.regulation_count(), -1);
  if (options_.allowlist) {
    for (RuleMask m : *options_.allowlist) {
      if (!is_subset(m, law.full_mask())) {
        throw Error(Errc::kInvalidArgument, "allowlist entry outside the law");
      }
      position_[m] = 0;
    }
  } else {
    std::fill(position_.begin(), position_.end(), 0);
  }
  for (std::size_t m = 0; m < position_.size(); ++m) {
    if (position_[m] == 0) {
      position_[m] = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(static_cast<RuleMask>(m));
    }
  }
  if (nodes_.empty()) throw Error(Errc::kInvalidArgument, "graph has no nodes");
  for (const auto& [edge, w] : options_.weight_overrides) {
    if (!has_node(edge.first) || !has_node(edge.second)) {
      throw Error(Errc::kInvalidArgument, "weight override on a missing node");
    }
    if (!(w.value >= 0.0)) throw Error(Errc::kInvalidArgument, "negative weight override");
  }
}

GameOfGames::~GameOfGames() = default;
GameOfGames::GameOfGames(GameOfGames&&) noexcept = default;
GameOfGames& GameOfGames::operator=(GameOfGames&&) noexcept = default;

bool GameOfGames::has_node(RuleMask mask) const {
  return mask < position_.size() && position_[mask] >= 0;
}

std::size_t GameOfGames::index_of(RuleMask mask) const {
  if (!has_node(mask)) {
    throw Error(Errc::kInvalidArgument, "regulation " + std::to_string(mask) + " is not a node");
  }
  return static_cast<std::size_t>(position_[mask]);
}

const LGame& GameOfGames::game(RuleMask node) const {
  index_of(node);
  {
    std::lock_guard lock(memo_->mu);
    if (auto it = memo_->games.find(node); it != memo_->games.end()) return *it->second;
  }
  auto fresh = std::make_unique<const LGame>(
      realize(*society_, Regulation(society_->law_ptr(), node), punishment_));
  std::lock_guard lock(memo_->mu);
  auto [it, inserted] = memo_->games.try_emplace(node, std::move(fresh));
  return *it->second;
}

bool GameOfGames::is_overridden(RuleMask from, RuleMask to) const {
  return options_.weight_overrides.contains({from, to});
}

Quantity GameOfGames::edge(RuleMask from, RuleMask to) const {
  index_of(from);
  index_of(to);
  if (from == to) return Quantity::zero();
  if (auto it = options_.weight_overrides.find({from, to});
      it != options_.weight_overrides.end()) {
    return it->second;
  }
  const std::uint64_t key = (std::uint64_t{from} << 32) | to;
  {
    std::lock_guard lock(memo_->mu);
    if (auto it = memo_->edges.find(key); it != memo_->edges.end()) return it->second;
  }
  Quantity w = premetric(options_.variant, game(to), game(from), options_.extension);
  std::lock_guard lock(memo_->mu);
  return memo_->edges.try_emplace(key, std::move(w)).first->second;
}

GameOfGames build_graph(std::shared_ptr<const Society> society,
                        PunishmentModel punishment, GraphOptions options) {
  const Law& law = society->law();
  if (law.size() > law.cap()) {
    throw Error(Errc::kLawTooLarge, "law exceeds its rule cap");
  }
  return GameOfGames(std::move(society), std::move(punishment), std::move(options));
}

LegalPath make_path(const GameOfGames& g, std::vector<RuleMask> nodes) {
  LegalPath path;
  path.length = Quantity::zero();
  path.incremental = nodes.size() > 1;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    path.length = path.length + g.edge(nodes[i - 1], nodes[i]);
    const RuleMask prev = nodes[i - 1];
    const RuleMask next = nodes[i];
    if (!is_subset(prev, next) || std::popcount(next ^ prev) != 1) {
      path.incremental = false;
    }
  }
  path.nodes = std::move(nodes);
  return path;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool nearly_equal(double a, double b) {
  return std::fabs(a - b) <= 1e-12 * (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

struct Restrictions {
  std::vector<char> banned_node;                        // by node index
  std::set<std::pair<std::size_t, std::size_t>> banned_edge;  // by node index
};

// Best path by (length, hop count, mask sequence) over the nodes and edges
// not banned. Dense Dijkstra towards the target, then a greedy walk along
// tight edges that strictly decreases the remaining hop count.
std::optional<std::vector<RuleMask>> restricted_shortest(
    const GameOfGames& g, std::size_t source, std::size_t target,
    const Restrictions& r) {
  const std::size_t n = g.node_count();
  const auto& nodes = g.nodes();
  auto allowed = [&](std::size_t i) { return r.banned_node.empty() || !r.banned_node[i]; };
  auto edge_ok = [&](std::size_t u, std::size_t v) {
    return u != v && allowed(u) && allowed(v) && !r.banned_edge.contains({u, v});
  };
  if (!allowed(source) || !allowed(target)) return std::nullopt;
  if (source == target) return std::vector<RuleMask>{nodes[source]};

  std::vector<double> dist(n, kInf);
  std::vector<char> done(n, 0);
  dist[target] = 0.0;
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && allowed(i) && dist[i] < kInf && (v == n || dist[i] < dist[v])) v = i;
    }
    if (v == n) break;
    done[v] = 1;
    for (std::size_t u = 0; u < n; ++u) {
      if (done[u] || !edge_ok(u, v)) continue;
      const double cand = g.weight(nodes[u], nodes[v]) + dist[v];
      if (cand < dist[u]) dist[u] = cand;
    }
  }
  if (dist[source] == kInf) return std::nullopt;

  auto tight = [&](std::size_t u, std::size_t v) {
    return edge_ok(u, v) && dist[v] < kInf &&
           nearly_equal(g.weight(nodes[u], nodes[v]) + dist[v], dist[u]);
  };
  std::vector<std::size_t> hops(n, std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{target};
  hops[target] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (hops[u] == std::numeric_limits<std::size_t>::max() && tight(u, v)) {
        hops[u] = hops[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (hops[source] == std::numeric_limits<std::size_t>::max()) return std::nullopt;

  std::vector<RuleMask> path{nodes[source]};
  for (std::size_t u = source; u != target;) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (hops[v] + 1 == hops[u] && tight(u, v)) {
        next = v;
        break;
      }
    }
    if (next == n) return std::nullopt;
    path.push_back(nodes[next]);
    u = next;
  }
  return path;
}

bool path_less(const LegalPath& a, const LegalPath& b) {
  if (!nearly_equal(a.length.value, b.length.value)) return a.length.value < b.length.value;
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

}  // namespace

LegalPath shortest_path(const GameOfGames& g, RuleMask from, RuleMask to) {
  auto nodes = restricted_shortest(g, g.index_of(from), g.index_of(to), {});
  // The graph is complete, so a path always exists.
  return make_path(g, std::move(*nodes));
}

std::vector<LegalPath> k_shortest_paths(const GameOfGames& g, RuleMask from,
                                        RuleMask to, std::size_t k) {
  std::vector<LegalPath> accepted;
  if (k == 0) return accepted;
  accepted.push_back(shortest_path(g, from, to));
  auto cmp = [](const LegalPath& a, const LegalPath& b) {
    if (path_less(a, b)) return true;
    if (path_less(b, a)) return false;
    return a.nodes < b.nodes;
  };
  std::set<LegalPath, decltype(cmp)> candidates(cmp);
  std::set<std::vector<RuleMask>> seen{accepted.front().nodes};

  while (accepted.size() < k) {
    const std::vector<RuleMask> prev = accepted.back().nodes;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      Restrictions r;
      r.banned_node.assign(g.node_count(), 0);
      for (std::size_t j = 0; j < i; ++j) r.banned_node[g.index_of(prev[j])] = 1;
      for (const auto& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(prev.begin(), prev.begin() + i + 1, p.nodes.begin())) {
          r.banned_edge.insert({g.index_of(p.nodes[i]), g.index_of(p.nodes[i + 1])});
        }
      }
      auto spur = restricted_shortest(g, g.index_of(prev[i]), g.index_of(to), r);
      if (!spur) continue;
      std::vector<RuleMask> total(prev.begin(), prev.begin() + i);
      total.insert(total.end(), spur->begin(), spur->end());
      if (seen.insert(total).second) candidates.insert(make_path(g, std::move(total)));
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

std::vector<LegalPath> k_shortest_incremental_paths(const GameOfGames& g,
                                                    RuleMask from, RuleMask to,
                                                    std::size_t k) {
  g.index_of(from);
  g.index_of(to);
  if (!is_subset(from, to)) {
    throw Error(Errc::kNotMonotone, g.label(from) + " is not contained in " + g.label(to));
  }
  if (k == 0) return {};
  auto by_rank = [](const LegalPath& a, const LegalPath& b) {
    if (a.length.value != b.length.value) return a.length.value < b.length.value;
    return a.nodes < b.nodes;
  };

  // k best prefixes ending at each intermediate node, visited by layer.
  const RuleMask diff = to & ~from;
  std::vector<RuleMask> layer_order;
  for (RuleMask s : submasks(diff)) {
    if (g.has_node(from | s)) layer_order.push_back(from | s);
  }
  std::stable_sort(layer_order.begin(), layer_order.end(), [](RuleMask a, RuleMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::unordered_map<RuleMask, std::vector<LegalPath>> best;
  for (RuleMask v : layer_order) {
    std::vector<LegalPath> here;
    if (v == from) {
      here.push_back(LegalPath{{from}, Quantity::zero(), false});
    } else {
      for (RuleMask bits = v & diff; bits != 0; bits &= bits - 1) {
        const RuleMask u = v & ~(bits & -bits);
        auto it = best.find(u);
        if (it == best.end()) continue;
        const Quantity step = g.edge(u, v);
        for (const auto& prefix : it->second) {
          LegalPath p{prefix.nodes, prefix.length + step, true};
          p.nodes.push_back(v);
          here.push_back(std::move(p));
        }
      }
      std::sort(here.begin(), here.end(), by_rank);
      if (here.size() > k) here.resize(k);
    }
    best.emplace(v, std::move(here));
  }
  auto it = best.find(to);
  if (it == best.end()) return {};
  std::vector<LegalPath> out = std::move(it->second);
  for (auto& p : out) p.incremental = p.nodes.size() > 1;
  return out;
}

double path_distance(const GameOfGames& g, RuleMask u, RuleMask v) {
  return shortest_path(g, u, v).length.value;
}

std::vector<std::vector<double>> all_path_distances(const GameOfGames& g) {
  const std::size_t n = g.node_count();
  const auto& nodes = g.nodes();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = g.weight(nodes[i], nodes[j]);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
      }
    }
  }
  return d;
}

std::vector<RuleMask> ball(const GameOfGames& g, RuleMask center, double r) {
  if (!(r >= 0.0)) throw Error(Errc::kInvalidArgument, "ball radius must be >= 0");
  std::vector<RuleMask> out;
  for (RuleMask y : g.nodes()) {
    if (g.weight(center, y) < r) out.push_back(y);
  }
  return out;
}

bool is_subgame(const LGame& sub, const LGame& super) {
  if (!sub.regulation().same_law(super.regulation())) {
    throw Error(Errc::kLawMismatch, "l-games are defined under different laws");
  }
  const RuleMask super_mask = super.regulation().mask();
  if (!is_subset(super_mask, sub.regulation().mask())) return false;
  return is_subset(titere_rules(sub) & super_mask, titere_rules(super));
}

double graph_step(const GameOfGames& g) {
  double step = kInf;
  for (RuleMask u : g.nodes()) {
    for (RuleMask v : g.nodes()) {
      if (u == v) continue;
      const double w = g.weight(u, v);
      if (w > 0.0 && w < step) step = w;
    }
  }
  return step == kInf ? 0.0 : step;
}

bool is_r_step(const GameOfGames& g, double r) {
  if (!(r >= 0.0)) throw Error(Errc::kInvalidArgument, "step threshold must be >= 0");
  return r <= graph_step(g);
}

std::string to_dot(const GameOfGames& g) {
  std::ostringstream out;
  out << "digraph game_of_games {\n";
  for (RuleMask u : g.nodes()) {
    out << "  r" << u << " [label=\"" << g.label(u) << "\"];\n";
  }
  for (RuleMask u : g.nodes()) {
    for (RuleMask v : g.nodes()) {
      if (u == v) continue;
      out << "  r" << u << " -> r" << v << " [weight=" << format_decimal(g.weight(u, v))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lexmetric
