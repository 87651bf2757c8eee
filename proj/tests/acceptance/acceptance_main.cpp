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

// Acceptance checks. Prints one "criterion N PASS|FAIL ..." line per check.
// Usage: lexmetric_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexmetric/commands.hpp"
#include "lexmetric/communal.hpp"
#include "lexmetric/config.hpp"
#include "lexmetric/consensus.hpp"
#include "lexmetric/divergence.hpp"
#include "lexmetric/error.hpp"
#include "lexmetric/gamegraph.hpp"
#include "lexmetric/lgame.hpp"
#include "oracle.hpp"

using namespace lexmetric;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
    ++checks_;
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

constexpr Variant kVariants[] = {Variant::kDirected, Variant::kPlus, Variant::kMax};

Outcome premetric_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  Checker c;
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = oracle::random_instance(rng, 1 + trial % 4);
    const auto g = oracle::graph_of(raw);
    const std::size_t n = g.node_count();
    const RuleMask a = g.nodes()[rng() % n], b = g.nodes()[rng() % n];
    for (Extension ext : {Extension::kZero, Extension::kRestrict}) {
      const auto& ga = g.game(a);
      const auto& gb = g.game(b);
      c.expect(lgame_premetric(ga, ga, ext).value == 0.0, "D(x,x) != 0");
      c.expect(lgame_premetric(ga, gb, ext).value >= 0.0, "D < 0");
      c.expect(lgame_premetric(gb, ga, ext).value >= 0.0, "D < 0");
      c.expect(symmetrize_plus(ga, gb, ext).value == symmetrize_plus(gb, ga, ext).value, "D+ asymmetric");
      c.expect(symmetrize_max(ga, gb, ext).value == symmetrize_max(gb, ga, ext).value, "Ds asymmetric");
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 5.0, "runtime " + fmt(secs) + " s");
  return c.finish("500 instances in " + fmt(secs) + " s");
}

Outcome severity_identities() {
  auto cfg = communal_config();
  const auto g = build_graph(cfg);
  Checker c;
  for (RuleMask x : g.nodes()) {
    const double sev = expected_severity(g.game(x)).value;
    c.expect(std::abs(lgame_premetric(g.game(x), g.game(0)).value - sev) <= 1e-12, "D(G||0) != severity");
    c.expect(lgame_premetric(g.game(0), g.game(x)).value == 0.0, "D(0||G) != 0");
  }
  const auto d = lgame_premetric(g.game(4), g.game(0));
  const auto b = lgame_premetric(g.game(1), g.game(0));
  c.expect(d.exact && *d.exact == Rational(166, 30), "D(D||A) = " + fmt(d.value));
  c.expect(b.exact && *b.exact == Rational(800, 30), "D(B||A) = " + fmt(b.value));
  return c.finish("D(D||A) = " + fmt(d.value) + ", D(B||A) = " + fmt(b.value));
}

Outcome entropy_checks() {
  std::mt19937_64 rng(1003);
  Checker c;
  for (int trial = 0; trial < 200; ++trial) {
    const auto raw = oracle::random_instance(rng, 1 + trial % 4);
    const auto g = oracle::graph_of(raw);
    const RuleMask x = g.nodes()[rng() % g.node_count()];
    std::vector<double> p;
    for (const auto& [e, v] : raw.table[x]) p.push_back(v);
    c.expect(std::abs(entropy(g.game(x)) - oracle::entropy(p)) <= 1e-12, "entropy differs from oracle");
    auto law = g.law_ptr();
    const PunishmentModel em(law, PunishmentMode::kEntropy);
    c.expect(std::abs(expected_severity(LGame(g.game(x).probability(), em)).value - oracle::entropy(p)) <= 1e-12,
             "entropy mode severity differs");
  }
  auto law = std::make_shared<const Law>(std::vector<Rule>{{"a", Quantity::exactly(Rational(1))},
                                                           {"b", Quantity::exactly(Rational(1))},
                                                           {"c", Quantity::exactly(Rational(1))}});
  for (RuleMask reg = 1; reg < 8; ++reg) {
    const auto events = submasks(reg);
    std::map<RuleMask, Quantity> uniform;
    for (RuleMask e : events) uniform[e] = Quantity::exactly(Rational(1, static_cast<long>(events.size())));
    const double h = entropy(LGame(ProbabilityModel(Regulation(law, reg), uniform)));
    c.expect(std::abs(h - std::log(static_cast<double>(events.size()))) <= 1e-12, "uniform != log n");
    const double zero = entropy(LGame(ProbabilityModel(Regulation(law, reg), {{events.back(), Quantity::exactly(Rational(1))}})));
    c.expect(zero == 0.0, "deterministic entropy != 0");
  }
  const double row_d = entropy(build_graph(communal_config()).game(4));
  const double row_d_oracle = oracle::entropy({29.0 / 30, 1.0 / 30});
  c.expect(std::abs(row_d - row_d_oracle) <= 1e-12, "row D entropy " + fmt(row_d));
  return c.finish("row D entropy " + fmt(row_d) + " (oracle " + fmt(row_d_oracle) +
                  "; the hand figure 0.1441 is off by " + fmt(row_d_oracle - 0.1441) + ")");
}

Outcome kl_checks() {
  std::mt19937_64 rng(1004);
  auto law = std::make_shared<const Law>(
      std::vector<Rule>{{"x", Quantity::exactly(Rational(1))}, {"y", Quantity::exactly(Rational(1))}});
  const auto events = submasks(3);
  Checker c;
  std::size_t raised = 0, valid = 0;
  for (int trial = 0; valid < 500; ++trial) {
    const auto p = oracle::random_distribution(rng, 4, 0.25);
    const auto q = trial % 10 == 0 ? p : oracle::random_distribution(rng, 4, 0.25);
    std::map<RuleMask, Quantity> mp, mq;
    for (std::size_t i = 0; i < 4; ++i) {
      mp[events[i]] = Quantity::approx(p[i]);
      mq[events[i]] = Quantity::approx(q[i]);
    }
    const ProbabilityModel a(Regulation(law, 3), mp), b(Regulation(law, 3), mq);
    const auto expected = oracle::kl(p, q);
    bool threw = false;
    double v = 0.0;
    try {
      v = kl_social_divergence(a, b);
    } catch (const lexmetric::Error& e) {
      threw = e.code() == Errc::kAbsoluteContinuityViolated;
      ++raised;
    }
    c.expect(threw == !expected.has_value(), "AbsoluteContinuityViolated mismatch");
    if (!expected) continue;
    ++valid;
    c.expect(v >= 0.0, "negative KL");
    double gap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) gap = std::max(gap, std::abs(p[i] - q[i]));
    c.expect((v <= 1e-12) == (gap == 0.0), "zero iff equal failed");
    c.expect(std::abs(v - *expected) <= 1e-12, "KL differs from oracle");
  }
  return c.finish("500 valid pairs, " + std::to_string(raised) + " more without absolute continuity");
}

Outcome coherence_checks() {
  std::mt19937_64 rng(1005);
  Checker c;
  int done = 0;
  while (done < 200) {
    const std::size_t n = 2 + done % 3;
    const auto raw = oracle::random_instance(rng, n);
    const auto g = oracle::graph_of(raw);
    const RuleMask base = static_cast<RuleMask>(rng() % (std::size_t{1} << n));
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((base >> i) & 1u)) free.push_back(i);
    }
    if (free.empty()) continue;
    const std::size_t rule = free[rng() % free.size()];
    const RuleMask ext = base | (RuleMask{1} << rule);
    const auto verdict = check_coherence(g.game(base), g.game(ext), rule);
    c.expect(verdict.severity_monotone, "C1 not monotone");
    c.expect(verdict.probability_monotone, "C2 not monotone");
    c.expect(std::abs(verdict.severity_series.front() - oracle::premetric(raw, ext, base)) <= 1e-9,
             "series start differs from oracle");
    ++done;
  }
  return c.finish("200 extension instances");
}

Outcome graph_checks() {
  std::mt19937_64 rng(1006);
  Checker c;
  auto check_graph = [&](const GameOfGames& g, const std::vector<std::vector<double>>& w) {
    const std::size_t n = g.node_count();
    for (std::size_t s = 0; s < n; ++s) {
      const auto best = oracle::simple_path_minima(w, s);
      for (std::size_t t = 0; t < n; ++t) {
        const auto p = shortest_path(g, g.nodes()[s], g.nodes()[t]);
        c.expect(std::abs(p.length.value - best[t]) <= 1e-9 * std::max(1.0, best[t]), "shortest path != oracle");
      }
    }
    const auto d = all_path_distances(g);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t x = 0; x < n; ++x)
          c.expect(d[a][b] <= d[a][x] + d[x][b] + 1e-9, "triangle inequality");
  };
  check_graph(build_graph(communal_config()), oracle::weights(oracle::communal(), Variant::kDirected));
  std::size_t graphs = 1;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rules = 1 + trial % 4;
    const Variant v = kVariants[trial % 3];
    const auto raw = oracle::random_instance(rng, rules);
    check_graph(oracle::graph_of(raw, {.variant = v}), oracle::weights(raw, v));
    ++graphs;
  }
  std::size_t factorial = 1;
  for (std::size_t m = 1; m <= 4; ++m) {
    factorial *= m;
    const auto raw = oracle::random_instance(rng, m);
    const auto g = oracle::graph_of(raw);
    const RuleMask full = (RuleMask{1} << m) - 1;
    c.expect(k_shortest_incremental_paths(g, 0, full, 1000).size() == factorial, "incremental path count");
    c.expect(oracle::monotone_paths(0, full).size() == factorial, "oracle path count");
  }
  return c.finish(std::to_string(graphs) + " graphs");
}

std::vector<RuleMask> parse_path(const AnalysisConfig& cfg, const std::string& text) {
  std::vector<RuleMask> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '-')) out.push_back(resolve_set(cfg, part));
  return out;
}

Outcome reproduce_checks() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* argv[] = {"lexmetric", "reproduce", "--format", "json"};
  std::ostringstream out, err;
  const int code = run_cli(4, argv, out, err);
  const double secs = seconds_since(t0);
  Checker c;
  c.expect(code == 0, "reproduce exit " + std::to_string(code));
  if (code != 0) return c.finish(err.str());
  const auto j = nlohmann::json::parse(out.str());
  const auto cfg = communal_config();
  const auto raw = oracle::communal();
  const auto& rows = j.at("tables").at(0).at("rows");
  c.expect(rows.size() == 6, "expected 6 incremental paths");
  std::size_t flagged = 0;
  for (const auto& row : rows) {
    const auto nodes = parse_path(cfg, row.at("path").get<std::string>());
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      len += oracle::weight(raw, nodes[i], nodes[i + 1], Variant::kDirected);
    c.expect(std::abs(row.at("length").at("value").get<double>() - len) <= 1e-12, "path length differs from oracle");
    for (const auto& claim : path_claims()) {
      std::vector<RuleMask> claimed;
      for (const auto& l : claim.path) claimed.push_back(resolve_set(cfg, l));
      if (claimed != nodes) continue;
      const bool deviates = std::abs(len - to_double(claim.length)) > 5e-4;
      c.expect(row.at("deviates").get<bool>() == deviates, "deviation flag");
      flagged += deviates;
    }
  }
  c.expect(secs < 1.0, "runtime " + fmt(secs) + " s");
  return c.finish(std::to_string(rows.size()) + " paths, " + std::to_string(flagged) +
                  " published lengths flagged, " + fmt(secs) + " s");
}

std::vector<double> oracle_scores(const std::vector<std::vector<double>>& w, const std::vector<RuleMask>& nodes,
                                  const std::vector<RuleMask>& maximal) {
  std::vector<double> s;
  for (RuleMask y : nodes) {
    double best = std::numeric_limits<double>::infinity();
    for (RuleMask m : maximal) best = std::min(best, w[y][m]);
    s.push_back(best);
  }
  return s;
}

// Random preference: distance bands around a random maximal set, or sparse
// pairs consistent with the distance; kept only if it is lsc.
Preorder random_preference(std::mt19937_64& rng, const GameOfGames& g) {
  const auto& nodes = g.nodes();
  std::vector<RuleMask> seed{nodes[rng() % nodes.size()]};
  if (rng() % 3 == 0) seed.push_back(nodes[rng() % nodes.size()]);
  const auto ranking = distance_linear_order(g, seed);
  if (rng() % 2 == 0) {
    const std::size_t cuts = 1 + rng() % 3;
    std::vector<double> scores;
    for (RuleMask x : nodes) scores.push_back(static_cast<double>(std::min(ranking.class_of(x), cuts)));
    return Preorder::from_scores(nodes, scores);
  }
  std::vector<Preorder::Pair> strict;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const RuleMask x = nodes[rng() % nodes.size()], y = nodes[rng() % nodes.size()];
    if (ranking.score(y) < ranking.score(x)) strict.emplace_back(x, y);
  }
  return Preorder::from_pairs(nodes, strict);
}

Outcome consensus_checks() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1008);
  Checker c;
  std::size_t accepted = 0, rejected = 0, profiles = 0;
  while (accepted < 100) {
    const auto raw = oracle::random_instance(rng, 2 + rng() % 3);
    const Variant v = kVariants[rng() % 3];
    const auto g = oracle::graph_of(raw, {.variant = v});
    const auto w = oracle::weights(raw, v);
    PreferenceProfile profile;
    std::vector<std::vector<double>> scores;
    const std::size_t players = 1 + rng() % 3;
    for (std::size_t n = 0; n < players; ++n) {
      const auto pref = random_preference(rng, g);
      const auto m = maximal_elements(pref);
      if (!is_tau_lsc(pref, g, m)) {
        ++rejected;
        continue;
      }
      ++accepted;
      const auto ranking = distance_linear_order(g, m);
      c.expect(check_linear_extension(pref, ranking), "not a linear extension");
      const auto s = oracle_scores(w, g.nodes(), m);
      for (std::size_t i = 0; i < g.node_count(); ++i)
        for (std::size_t j = 0; j < g.node_count(); ++j)
          if (pref.less(i, j)) c.expect(s[j] < s[i], "oracle distance disagrees with preference");
      profile.players.push_back({"p" + std::to_string(n), pref, std::nullopt});
      scores.push_back(s);
    }
    if (profile.players.empty()) continue;
    ++profiles;
    for (RuleMask d : pareto_deals(g, profile)) {
      const std::size_t o = g.index_of(d);
      bool dominated = false;
      for (std::size_t x = 0; x < g.node_count() && !dominated; ++x) {
        bool gains = false, loses = false;
        for (const auto& s : scores) {
          gains |= s[x] < s[o];
          loses |= s[x] > s[o];
        }
        dominated = gains && !loses;
      }
      c.expect(!dominated, "Pareto member dominated");
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + fmt(secs) + " s");
  return c.finish(std::to_string(accepted) + " lsc preferences (" + std::to_string(rejected) + " rejected) in " +
                  std::to_string(profiles) + " profiles, " + fmt(secs) + " s");
}

Outcome radius_checks() {
  std::mt19937_64 rng(1009);
  Checker c;
  for (int trial = 0; trial < 100; ++trial) {
    const auto raw = oracle::random_instance(rng, 1 + trial % 4);
    const Variant v = kVariants[trial % 3];
    const auto g = oracle::graph_of(raw, {.variant = v});
    const auto w = oracle::weights(raw, v);
    PreferenceProfile profile;
    std::vector<std::vector<RuleMask>> tops;
    for (int n = 0; n < 2 + trial % 2; ++n) {
      std::vector<double> scores;
      for (std::size_t i = 0; i < g.node_count(); ++i) scores.push_back(static_cast<double>(rng() % 3));
      const auto pref = Preorder::from_scores(g.nodes(), scores);
      profile.players.push_back({"p" + std::to_string(n), pref, std::nullopt});
      tops.push_back(maximal_elements(pref));
    }
    const auto feasible = [&](RuleMask y, double r) {
      for (const auto& top : tops) {
        bool inside = false;
        for (RuleMask m : top) inside |= w[y][m] < r;
        if (!inside) return false;
      }
      return true;
    };
    const auto cr = min_consensus_radius(g, profile);
    c.expect(!cr.witnesses.empty(), "no witness");
    for (RuleMask y : cr.witnesses) c.expect(feasible(y, cr.radius), "witness outside a ball union");
    std::vector<double> candidates;
    for (const auto& top : tops)
      for (RuleMask m : top)
        for (RuleMask y : g.nodes()) candidates.push_back(w[y][m]);
    for (double r : candidates) {
      if (r >= cr.radius) continue;
      for (RuleMask y : g.nodes()) c.expect(!feasible(y, r), "smaller radius feasible");
    }
  }
  return c.finish("100 profiles");
}

Outcome signer_checks() {
  auto cfg = communal_config();
  const auto g = build_graph(cfg);
  const double step = graph_step(g);
  Checker c;
  c.expect(classify_signer(g, 0.0) == SignerClass::kBoycotter, "r = 0");
  c.expect(classify_signer(g, step) == SignerClass::kOrdinary, "r = step");
  c.expect(classify_signer(g, std::nextafter(step, 0.0)) == SignerClass::kStubborn, "r below step");

  const double r = to_double(signer_claim());
  std::string detail = "graph step " + fmt(step);
  for (Extension ext : {Extension::kZero, Extension::kRestrict}) {
    cfg.extension = ext;
    const auto ge = build_graph(cfg);
    const auto best = k_shortest_incremental_paths(ge, 0, 7, 1).front();
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < best.nodes.size(); ++i) worst = std::max(worst, ge.weight(best.nodes[i], best.nodes[i + 1]));
    detail += "; " + std::string(extension_name(ext)) + " max step " + fmt(worst);
    if (ext == Extension::kZero) c.expect(worst < r, "max step " + fmt(worst) + " exceeds 166/30");
  }
  return c.finish(detail);
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> all = {
      premetric_axioms, severity_identities, entropy_checks,   kl_checks,     coherence_checks,
      graph_checks,     reproduce_checks,    consensus_checks, radius_checks, signer_checks};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::strtoul(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: lexmetric_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only > criteria().size()) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t n = 1; n <= criteria().size(); ++n) {
    if (only && n != only) continue;
    Outcome o;
    try {
      o = criteria()[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << (o.pass ? " PASS " : " FAIL ") << o.detail << std::endl;
    ok &= o.pass;
  }
  return ok ? 0 : 1;
}
