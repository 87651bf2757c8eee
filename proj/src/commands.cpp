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

#include "lexmetric/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "lexmetric/communal.hpp"
#include "lexmetric/consensus.hpp"
#include "lexmetric/divergence.hpp"
#include "lexmetric/error.hpp"
#include "lexmetric/gamegraph.hpp"
#include "lexmetric/lgame.hpp"

namespace lexmetric {
namespace {

std::vector<RuleMask> domain_of(const AnalysisConfig& cfg) {
  if (cfg.allowlist) return *cfg.allowlist;
  std::vector<RuleMask> out;
  for (RuleMask m = 0; m < (RuleMask{1} << cfg.rules.size()); ++m) out.push_back(m);
  return out;
}

RuleMask flag_set(const AnalysisConfig& cfg, const std::optional<std::string>& value,
                  std::string_view flag) {
  if (!value) throw UsageError("command needs --" + std::string(flag));
  try {
    return resolve_set(cfg, *value);
  } catch (const Error& e) {
    throw UsageError("--" + std::string(flag) + ": " + e.what());
  }
}

std::string members_text(const AnalysisConfig& cfg, RuleMask mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t r = 0; r < cfg.rules.size(); ++r) {
    if (!((mask >> r) & 1u)) continue;
    if (!first) out += ",";
    out += cfg.rules[r].id;
    first = false;
  }
  return out + "}";
}

std::string path_text(const AnalysisConfig& cfg, const std::vector<RuleMask>& nodes) {
  std::string out;
  for (RuleMask m : nodes) {
    if (!out.empty()) out += "-";
    out += regulation_name(cfg, m);
  }
  return out;
}

std::string list_text(const AnalysisConfig& cfg, const std::vector<RuleMask>& masks) {
  std::string out;
  for (RuleMask m : masks) {
    if (!out.empty()) out += " ";
    out += regulation_name(cfg, m);
  }
  return out.empty() ? "-" : out;
}

std::vector<Quantity> steps_of(const GameOfGames& g, const std::vector<RuleMask>& nodes) {
  std::vector<Quantity> out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.push_back(g.edge(nodes[i], nodes[i + 1]));
  return out;
}

std::string steps_text(const std::vector<Quantity>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += " + ";
    out += format_decimal(s.value, 6);
  }
  return out.empty() ? "-" : out;
}

Quantity max_step(const std::vector<Quantity>& steps) {
  Quantity best = Quantity::zero();
  for (const auto& s : steps) best = max(best, s);
  return best;
}

double in_base(double nats, LogBase base) {
  return base == LogBase::k2 ? nats / std::numbers::ln2 : nats;
}

std::string base_note(LogBase base) {
  return base == LogBase::k2 ? "logarithms in base 2 (bits)" : "natural logarithms (nats)";
}

std::string graph_note(const AnalysisConfig& cfg) {
  return "variant " + std::string(variant_name(cfg.variant)) + ", " +
         std::string(extension_name(cfg.extension)) + " extension";
}

std::string source_of(const AnalysisConfig& cfg, RuleMask reg) {
  if (cfg.aggregate.count(reg)) return "aggregate";
  const bool all = !cfg.players.empty() &&
                   std::all_of(cfg.players.begin(), cfg.players.end(),
                               [&](const PlayerSpec& p) { return p.tables.count(reg) > 0; });
  if (all) return "players";
  const bool none = std::none_of(cfg.players.begin(), cfg.players.end(),
                                 [&](const PlayerSpec& p) { return p.tables.count(reg) > 0; });
  if (none && cfg.independent) return "independent";
  return "missing";
}

std::vector<RuleMask> selection(const AnalysisConfig& cfg, const CommandRequest& req) {
  if (req.from) return {flag_set(cfg, req.from, "from")};
  return domain_of(cfg);
}

Report validate_report(const AnalysisConfig& cfg) {
  Report rep{"validate", {}, {}};
  Table law{"law", {"rule", "punishment"}, {}};
  for (const auto& r : cfg.rules) law.add({r.id, r.punishment});
  rep.tables.push_back(std::move(law));

  Table coverage{"probability data", {"regulation", "members", "source"}, {}};
  std::size_t missing = 0;
  for (RuleMask m : domain_of(cfg)) {
    const std::string src = source_of(cfg, m);
    missing += src == "missing";
    coverage.add({regulation_name(cfg, m), members_text(cfg, m), src});
  }
  rep.tables.push_back(std::move(coverage));

  Table prefs{"preferences", {"player", "strict pairs", "top", "threshold"}, {}};
  for (const auto& p : cfg.preferences) {
    prefs.add({p.player, static_cast<std::int64_t>(p.strict.size()), list_text(cfg, p.top),
               p.threshold ? Cell(*p.threshold) : Cell(std::string("-"))});
  }
  rep.tables.push_back(std::move(prefs));

  rep.notes.push_back("society '" + cfg.society_name + "' with " +
                      std::to_string(cfg.players.size()) + " players");
  if (missing > 0) {
    rep.notes.push_back(std::to_string(missing) +
                        " regulations lack probability data; queries touching them fail with MissingTable");
  }
  rep.notes.push_back("config is valid");
  return rep;
}

Report severity_report(const AnalysisConfig& cfg, const CommandRequest& req) {
  const GameOfGames g = build_graph(cfg);
  Report rep{"severity", {}, {}};
  Table t{"expected severity", {"regulation", "members", "severity", "titere"}, {}};
  for (RuleMask m : selection(cfg, req)) {
    try {
      const LGame& game = g.game(m);
      t.add({regulation_name(cfg, m), members_text(cfg, m), expected_severity(game),
             members_text(cfg, titere_rules(game))});
    } catch (const Error& e) {
      if (req.from || e.code() != Errc::kMissingTable) throw;
      t.add({regulation_name(cfg, m), members_text(cfg, m), std::string("MissingTable"),
             std::string("-")});
    }
  }
  rep.tables.push_back(std::move(t));
  rep.notes.push_back(std::string("punishment mode ") +
                      (cfg.mode == PunishmentMode::kAdditive ? "additive" : "entropy"));
  return rep;
}

Report entropy_report(const AnalysisConfig& cfg, const CommandRequest& req) {
  const GameOfGames g = build_graph(cfg);
  Report rep{"entropy", {}, {}};
  Table t{"entropy", {"regulation", "members", "entropy"}, {}};
  for (RuleMask m : selection(cfg, req)) {
    try {
      t.add({regulation_name(cfg, m), members_text(cfg, m), in_base(entropy(g.game(m)), cfg.log_base)});
    } catch (const Error& e) {
      if (req.from || e.code() != Errc::kMissingTable) throw;
      t.add({regulation_name(cfg, m), members_text(cfg, m), std::string("MissingTable")});
    }
  }
  rep.tables.push_back(std::move(t));
  rep.notes.push_back(base_note(cfg.log_base));
  return rep;
}

Report divergence_report_cmd(const AnalysisConfig& cfg, const CommandRequest& req) {
  if (!req.other_config) throw UsageError("divergence needs --other PATH");
  const AnalysisConfig other = load_config(*req.other_config);
  bool same = other.rules.size() == cfg.rules.size();
  for (std::size_t i = 0; same && i < cfg.rules.size(); ++i) same = other.rules[i].id == cfg.rules[i].id;
  if (!same) throw Error(Errc::kLawMismatch, "the two configs define different rule lists");

  const LawPtr law = build_law(cfg);
  const auto mine = build_society(cfg, law);
  const auto theirs = build_society(other, law);
  const std::string a = cfg.society_name.empty() ? "self" : cfg.society_name;
  const std::string b = other.society_name.empty() ? "other" : other.society_name;

  Report rep{"divergence", {}, {}};
  Table t{"KL social divergence",
          {"regulation", "members", "KL(" + a + "||" + b + ")", "KL(" + b + "||" + a + ")"},
          {}};
  const auto kl = [&](const ProbabilityModel& p, const ProbabilityModel& q) -> Cell {
    try {
      return in_base(kl_social_divergence(p, q), cfg.log_base);
    } catch (const Error& e) {
      if (req.from || e.code() != Errc::kAbsoluteContinuityViolated) throw;
      return std::string(errc_name(e.code()));
    }
  };
  for (RuleMask m : selection(cfg, req)) {
    const Regulation reg(law, m);
    try {
      const ProbabilityModel p = mean_probability(*mine, reg);
      const ProbabilityModel q = mean_probability(*theirs, reg);
      t.add({regulation_name(cfg, m), members_text(cfg, m), kl(p, q), kl(q, p)});
    } catch (const Error& e) {
      if (req.from || e.code() != Errc::kMissingTable) throw;
      t.add({regulation_name(cfg, m), members_text(cfg, m), std::string("MissingTable"),
             std::string("MissingTable")});
    }
  }
  rep.tables.push_back(std::move(t));
  rep.notes.push_back(base_note(cfg.log_base));
  return rep;
}

Report distance_report(const AnalysisConfig& cfg, const CommandRequest& req) {
  const RuleMask from = flag_set(cfg, req.from, "from");
  const RuleMask to = flag_set(cfg, req.to, "to");
  const GameOfGames g = build_graph(cfg);
  const LGame& src = g.game(from);
  const LGame& dst = g.game(to);
  const std::string f = regulation_name(cfg, from), d = regulation_name(cfg, to);

  Report rep{"distance", {}, {}};
  Table t{"premetric between " + f + " and " + d, {"quantity", "meaning", "value"}, {}};
  t.add({"D(" + d + "||" + f + ")", "resistance moving " + f + " -> " + d,
         lgame_premetric(dst, src, cfg.extension)});
  t.add({"D(" + f + "||" + d + ")", "resistance moving " + d + " -> " + f,
         lgame_premetric(src, dst, cfg.extension)});
  t.add({"D+", "sum of both directions", symmetrize_plus(dst, src, cfg.extension)});
  t.add({"Ds", "max of both directions", symmetrize_max(dst, src, cfg.extension)});
  t.add({"path distance", "shortest path " + f + " -> " + d + " (" +
                              std::string(variant_name(cfg.variant)) + ")",
         path_distance(g, from, to)});
  if (g.is_overridden(from, to)) {
    t.add({"graph edge", "override, bypasses the premetric", g.edge(from, to)});
  }
  rep.tables.push_back(std::move(t));
  rep.notes.push_back(std::string(extension_name(cfg.extension)) + " extension of the source punishment");
  return rep;
}

Report graph_report(const AnalysisConfig& cfg) {
  const GameOfGames g = build_graph(cfg);
  Report rep{"graph", {}, {}};
  Table nodes{"regulations", {"regulation", "members", "mask"}, {}};
  for (RuleMask m : g.nodes()) {
    nodes.add({regulation_name(cfg, m), members_text(cfg, m), static_cast<std::int64_t>(m)});
  }
  rep.tables.push_back(std::move(nodes));
  Table edges{"edges", {"from", "to", "weight", "source"}, {}};
  for (RuleMask u : g.nodes()) {
    for (RuleMask v : g.nodes()) {
      if (u == v) continue;
      edges.add({regulation_name(cfg, u), regulation_name(cfg, v), g.edge(u, v),
                 std::string(g.is_overridden(u, v) ? "override" : "premetric")});
    }
  }
  rep.tables.push_back(std::move(edges));
  rep.notes.push_back(graph_note(cfg));
  rep.notes.push_back("edge u -> v weighs D(v||u), the resistance of moving from u to v");
  return rep;
}

Report path_report(const AnalysisConfig& cfg, const CommandRequest& req) {
  const RuleMask from = flag_set(cfg, req.from, "from");
  const RuleMask to = flag_set(cfg, req.to, "to");
  const GameOfGames g = build_graph(cfg);
  std::vector<LegalPath> paths;
  if (req.incremental) {
    paths = k_shortest_incremental_paths(g, from, to, req.k);
  } else if (req.k == 1) {
    paths.push_back(shortest_path(g, from, to));
  } else {
    paths = k_shortest_paths(g, from, to, req.k);
  }
  Report rep{"path", {}, {}};
  Table t{std::string(req.incremental ? "incremental paths " : "paths ") + regulation_name(cfg, from) +
              " -> " + regulation_name(cfg, to),
          {"rank", "path", "length", "steps", "max step", "incremental"},
          {}};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto steps = steps_of(g, paths[i].nodes);
    t.add({static_cast<std::int64_t>(i + 1), path_text(cfg, paths[i].nodes), paths[i].length,
           steps_text(steps), max_step(steps), paths[i].incremental});
  }
  rep.tables.push_back(std::move(t));
  rep.notes.push_back(graph_note(cfg));
  return rep;
}

void require_preferences(const AnalysisConfig& cfg) {
  if (cfg.preferences.empty()) throw Error(Errc::kInvalidArgument, "config declares no preferences");
}

Report pareto_report(const AnalysisConfig& cfg) {
  require_preferences(cfg);
  const GameOfGames g = build_graph(cfg);
  const PreferenceProfile profile = build_profile(cfg, g);
  const ConsensusOptions opts = consensus_options(cfg);
  const ParetoResult res = pareto_analysis(g, profile, opts);

  Report rep{"pareto", {}, {}};
  Table rankings{"distance linear orders", {"player", "class", "distance", "regulations"}, {}};
  for (const auto& r : res.rankings) {
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      rankings.add({r.player, static_cast<std::int64_t>(c + 1), r.class_scores[c], list_text(cfg, r.classes[c])});
    }
  }
  rep.tables.push_back(std::move(rankings));

  Table players{"players", {"player", "maximal", "lsc", "linear extension", "compatible"}, {}};
  for (std::size_t n = 0; n < profile.players.size(); ++n) {
    const auto& p = profile.players[n];
    players.add({p.id, list_text(cfg, res.rankings[n].maximal), static_cast<bool>(res.lsc[n]),
                 check_linear_extension(p.order, res.rankings[n]),
                 is_compatible(p.order, g, res.rankings[n].maximal, opts)});
  }
  rep.tables.push_back(std::move(players));

  const RuleMask closest = closest_pareto_deal(g, profile, opts);
  Table deals{"Pareto optimal deals", {"regulation", "members", "worst-case distance", "closest"}, {}};
  for (RuleMask d : res.deals) {
    deals.add({regulation_name(cfg, d), members_text(cfg, d), worst_case_distance(g, profile, d, opts),
               d == closest});
  }
  rep.tables.push_back(std::move(deals));
  rep.notes = res.warnings;
  rep.notes.push_back(graph_note(cfg) + ", deal distance " +
                      std::string(deal_distance_name(opts.direction)));
  return rep;
}

Report radius_report(const AnalysisConfig& cfg) {
  require_preferences(cfg);
  const GameOfGames g = build_graph(cfg);
  const PreferenceProfile profile = build_profile(cfg, g);
  const ConsensusOptions opts = consensus_options(cfg);
  const ConsensusRadius cr = min_consensus_radius(g, profile, opts);
  Report rep{"radius", {}, {}};
  Table t{"consensus radius", {"quantity", "value"}, {}};
  t.add({"infimum", cr.infimum});
  t.add({"radius", cr.radius});
  t.add({"witnesses", list_text(cfg, cr.witnesses)});
  t.add({"consensus at radius", list_text(cfg, consensus_at(g, profile, cr.radius, opts))});
  rep.tables.push_back(std::move(t));
  rep.notes.push_back("balls are open: every player's ball union meets exactly when r > infimum");
  rep.notes.push_back(graph_note(cfg) + ", deal distance " +
                      std::string(deal_distance_name(opts.direction)));
  return rep;
}

Report signers_report(const AnalysisConfig& cfg, const CommandRequest& req) {
  const GameOfGames g = build_graph(cfg);
  const double step = graph_step(g);
  Report rep{"signers", {}, {}};
  Table t{"signer classes", {"player", "threshold", "class"}, {}};
  for (const auto& p : cfg.preferences) {
    if (!p.threshold) continue;
    t.add({p.player, *p.threshold, std::string(signer_class_name(classify_signer(g, p.threshold->value)))});
  }
  if (req.r) t.add({"--r", *req.r, std::string(signer_class_name(classify_signer(g, *req.r)))});
  rep.tables.push_back(std::move(t));

  if (req.from && req.to) {
    const RuleMask from = flag_set(cfg, req.from, "from");
    const RuleMask to = flag_set(cfg, req.to, "to");
    const auto best = k_shortest_incremental_paths(g, from, to, 1);
    const auto steps = steps_of(g, best.front().nodes);
    const Quantity worst = max_step(steps);
    Table path{"least-resistance incremental path", {"path", "steps", "max step"}, {}};
    path.add({path_text(cfg, best.front().nodes), steps_text(steps), worst});
    rep.tables.push_back(std::move(path));
    Table admit{"step admission (signs when step < threshold)", {"player", "threshold", "admits every step"}, {}};
    for (const auto& p : cfg.preferences) {
      if (p.threshold) admit.add({p.player, *p.threshold, worst.value < p.threshold->value});
    }
    if (req.r) admit.add({"--r", *req.r, worst.value < *req.r});
    rep.tables.push_back(std::move(admit));
  }
  rep.notes.push_back("graph step (smallest positive edge weight): " + format_decimal(step, 6));
  rep.notes.push_back(graph_note(cfg));
  return rep;
}

AnalysisConfig with_extension(AnalysisConfig cfg, Extension e) {
  cfg.extension = e;
  return cfg;
}

Report reproduce_report() {
  const AnalysisConfig base = communal_config();
  const AnalysisConfig restrict_cfg = with_extension(base, Extension::kRestrict);
  AnalysisConfig figure_cfg = base;
  const auto label = [&](const std::string& name) { return resolve_set(base, name); };
  for (const auto& f : figure_labels()) {
    figure_cfg.edge_overrides.push_back({label(f.a), label(f.b), Quantity::exactly(f.weight), true});
  }
  const GameOfGames g0 = build_graph(base);
  const GameOfGames g1 = build_graph(restrict_cfg);
  const GameOfGames gf = build_graph(figure_cfg);
  const RuleMask a = label("A"), h = label("H");
  constexpr double kClaimTolerance = 5e-4;

  Report rep{"reproduce", {}, {}};

  const auto paths = k_shortest_incremental_paths(g0, a, h, 6);
  const auto claim_for = [&](const std::vector<RuleMask>& nodes) -> const PathClaim* {
    for (const auto& c : path_claims()) {
      std::vector<RuleMask> masks;
      for (const auto& l : c.path) masks.push_back(label(l));
      if (masks == nodes) return &c;
    }
    return nullptr;
  };
  Table mono{"incremental paths A -> H",
             {"rank", "path", "length", "steps", "length (restrict)", "length (figure)", "published",
              "deviates"},
             {}};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    const PathClaim* c = claim_for(p.nodes);
    Cell published = std::string("-");
    Cell deviates = std::string("-");
    if (c) {
      published = c->text;
      deviates = std::abs(p.length.value - to_double(c->length)) > kClaimTolerance;
    }
    mono.add({static_cast<std::int64_t>(i + 1), path_text(base, p.nodes), p.length,
              steps_text(steps_of(g0, p.nodes)), make_path(g1, p.nodes).length,
              make_path(gf, p.nodes).length, published, deviates});
  }
  rep.tables.push_back(std::move(mono));

  Table claims{"published path lengths",
               {"path", "published", "incremental", "length", "length (restrict)", "length (figure)",
                "matches"},
               {}};
  for (const auto& c : path_claims()) {
    std::vector<RuleMask> nodes;
    for (const auto& l : c.path) nodes.push_back(label(l));
    const LegalPath p0 = make_path(g0, nodes), p1 = make_path(g1, nodes), pf = make_path(gf, nodes);
    const double claim = to_double(c.length);
    std::string matches;
    for (const auto& [name, len] : {std::pair{"zero", p0.length.value}, std::pair{"restrict", p1.length.value},
                                    std::pair{"figure", pf.length.value}}) {
      if (std::abs(len - claim) <= kClaimTolerance) matches += std::string(matches.empty() ? "" : ",") + name;
    }
    claims.add({path_text(base, nodes), c.text, p0.incremental, p0.length, p1.length, pf.length,
                matches.empty() ? std::string("none") : matches});
  }
  rep.tables.push_back(std::move(claims));

  Table steps{"least-resistance step bound", {"extension", "path", "steps", "max step", "bound", "within bound"}, {}};
  const Quantity bound = Quantity::exactly(signer_claim());
  for (const auto* g : {&g0, &g1}) {
    const auto best = k_shortest_incremental_paths(*g, a, h, 1).front();
    const auto s = steps_of(*g, best.nodes);
    const Quantity worst = max_step(s);
    steps.add({std::string(extension_name(g->options().extension)), path_text(base, best.nodes), steps_text(s),
               worst, bound, worst.value <= bound.value});
  }
  rep.tables.push_back(std::move(steps));

  Table figure{"published edge labels",
               {"edge", "published", "D(v||u)", "D(u||v)", "D(v||u) restrict", "D(u||v) restrict", "matches"},
               {}};
  std::size_t matched = 0;
  for (const auto& f : figure_labels()) {
    const RuleMask u = label(f.a), v = label(f.b);
    const Quantity vals[4] = {g0.edge(u, v), g0.edge(v, u), g1.edge(u, v), g1.edge(v, u)};
    static constexpr const char* kNames[4] = {"D(v||u)", "D(u||v)", "D(v||u) restrict", "D(u||v) restrict"};
    std::string matches;
    for (int i = 0; i < 4; ++i) {
      if (std::abs(vals[i].value - to_double(f.weight)) <= 1e-9) {
        matches += std::string(matches.empty() ? "" : ",") + kNames[i];
      }
    }
    matched += !matches.empty();
    figure.add({f.a + "-" + f.b, Quantity::exactly(f.weight), vals[0], vals[1], vals[2], vals[3],
                matches.empty() ? std::string("none") : matches});
  }
  rep.tables.push_back(std::move(figure));

  Table deals{"two parties wanting H and A",
              {"variant", "Pareto deals", "closest", "radius infimum", "witnesses"},
              {}};
  for (Variant v : {Variant::kDirected, Variant::kPlus, Variant::kMax}) {
    AnalysisConfig cfg = base;
    cfg.variant = v;
    const GameOfGames g = build_graph(cfg);
    const PreferenceProfile profile = build_profile(cfg, g);
    const ConsensusOptions opts = consensus_options(cfg);
    const ConsensusRadius cr = min_consensus_radius(g, profile, opts);
    deals.add({std::string(variant_name(v)), list_text(base, pareto_deals(g, profile, opts)),
               regulation_name(base, closest_pareto_deal(g, profile, opts)), cr.infimum,
               list_text(base, cr.witnesses)});
  }
  rep.tables.push_back(std::move(deals));

  rep.notes.push_back("lengths follow the premetric definition with the zero extension unless marked restrict");
  rep.notes.push_back("figure lengths sum the published edge labels, loaded as symmetric weight overrides");
  rep.notes.push_back(std::to_string(matched) + " of " + std::to_string(figure_labels().size()) +
                      " published edge labels equal a computed premetric value");
  rep.notes.push_back("A-B-G-H is not an incremental path: B={tax} is not contained in G={raffle,comp}");
  return rep;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "severity", "entropy", "divergence",
                                                 "distance", "graph",    "path",    "pareto",
                                                 "radius",   "signers",  "reproduce"};
  return names;
}

Report run_command(const AnalysisConfig& cfg, const CommandRequest& req) {
  if (req.k == 0) throw UsageError("--k must be positive");
  if (req.r && !(*req.r >= 0.0 && std::isfinite(*req.r))) throw UsageError("--r must be a finite value >= 0");
  const std::string& c = req.command;
  if (c == "validate") return validate_report(cfg);
  if (c == "severity") return severity_report(cfg, req);
  if (c == "entropy") return entropy_report(cfg, req);
  if (c == "divergence") return divergence_report_cmd(cfg, req);
  if (c == "distance") return distance_report(cfg, req);
  if (c == "graph") return graph_report(cfg);
  if (c == "path") return path_report(cfg, req);
  if (c == "pareto") return pareto_report(cfg);
  if (c == "radius") return radius_report(cfg);
  if (c == "signers") return signers_report(cfg, req);
  if (c == "reproduce") return reproduce_report();
  throw UsageError("unknown command '" + c + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexmetric: distances, paths and deals between regulations"};
  app.name("lexmetric");
  CommandRequest req;
  std::string config_path, format = "human", variant, log_base;
  std::optional<std::string> from, to, other;
  std::optional<double> r;
  app.add_option("command", req.command, "one of: validate severity entropy divergence distance "
                                         "graph path pareto radius signers reproduce")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "config file (default: bundled communal example)");
  app.add_option("--format", format, "human, json or dot")->check(CLI::IsMember({"human", "json", "dot"}));
  app.add_option("--variant", variant, "directed, plus or max")
      ->check(CLI::IsMember({"directed", "plus", "max"}));
  app.add_option("--log-base", log_base, "e or 2")->check(CLI::IsMember({"e", "2"}));
  app.add_option("--from", from, "regulation: label or member list");
  app.add_option("--to", to, "regulation: label or member list");
  app.add_option("--other", other, "second config for divergence");
  app.add_option("--k", req.k, "number of paths");
  app.add_flag("--incremental", req.incremental, "only paths adding one rule per step");
  app.add_option("--r", r, "signer threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  req.from = from;
  req.to = to;
  req.other_config = other;
  req.r = r;

  try {
    if (format == "dot" && req.command != "graph") throw UsageError("--format dot only applies to graph");
    AnalysisConfig cfg = config_path.empty() ? communal_config() : load_config(config_path);
    if (variant == "directed") cfg.variant = Variant::kDirected;
    if (variant == "plus") cfg.variant = Variant::kPlus;
    if (variant == "max") cfg.variant = Variant::kMax;
    if (log_base == "e") cfg.log_base = LogBase::kE;
    if (log_base == "2") cfg.log_base = LogBase::k2;
    if (format == "dot") {
      out << to_dot(build_graph(cfg));
      return 0;
    }
    const Report rep = run_command(cfg, req);
    out << (format == "json" ? render_json(rep) : render_human(rep));
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lexmetric
