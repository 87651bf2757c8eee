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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lexmetric/divergence.hpp"
#include "oracle.hpp"

using namespace lexmetric;
using fixtures::error_code;
using fixtures::q;

namespace {

LawPtr one_rule() { return std::make_shared<const Law>(std::vector<Rule>{{"x", q(1)}}); }

ProbabilityModel pair_model(LawPtr law, double p0, double p1) {
  return ProbabilityModel(Regulation(law, 1), {{0, Quantity::approx(p0)}, {1, Quantity::approx(p1)}});
}

}  // namespace

TEST(KlDivergence, Examples) {
  auto law = one_rule();
  const auto p = pair_model(law, 0.5, 0.5);
  EXPECT_EQ(kl_social_divergence(p, p), 0.0);
  const double v = kl_social_divergence(p, pair_model(law, 0.25, 0.75));
  EXPECT_NEAR(v, 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(v, 0.1438, 1e-4);
  EXPECT_EQ(error_code([&] { kl_social_divergence(pair_model(law, 1, 0), pair_model(law, 0, 1)); }),
            Errc::kAbsoluteContinuityViolated);
  // Zero mass in p never needs support in q.
  EXPECT_NO_THROW(kl_social_divergence(pair_model(law, 1, 0), pair_model(law, 0.5, 0.5)));
}

TEST(KlDivergence, RegulationMismatch) {
  auto law = std::make_shared<const Law>(std::vector<Rule>{{"x", q(1)}, {"y", q(1)}});
  const ProbabilityModel a(Regulation(law, 1), {{0, q(1)}});
  const ProbabilityModel b(Regulation(law, 2), {{0, q(1)}});
  EXPECT_EQ(error_code([&] { kl_social_divergence(a, b); }), Errc::kRegulationMismatch);
}

TEST(KlDivergence, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(3);
  auto law = std::make_shared<const Law>(std::vector<Rule>{{"x", q(1)}, {"y", q(1)}});
  const auto events = submasks(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = oracle::random_distribution(rng, 4, 0.25);
    const auto r = oracle::random_distribution(rng, 4, 0.25);
    std::map<RuleMask, Quantity> mp, mq;
    for (std::size_t i = 0; i < 4; ++i) {
      mp[events[i]] = Quantity::approx(p[i]);
      mq[events[i]] = Quantity::approx(r[i]);
    }
    const ProbabilityModel a(Regulation(law, 3), mp), b(Regulation(law, 3), mq);
    const auto expected = oracle::kl(p, r);
    if (expected) {
      const double v = kl_social_divergence(a, b);
      EXPECT_GE(v, 0.0);
      EXPECT_NEAR(v, *expected, 1e-12);
    } else {
      EXPECT_EQ(error_code([&] { kl_social_divergence(a, b); }), Errc::kAbsoluteContinuityViolated);
    }
  }
}

class CommunalPremetric : public ::testing::Test {
 protected:
  GameOfGames g = fixtures::communal_graph();
  GameOfGames r = fixtures::communal_graph(Extension::kRestrict);
};

TEST_F(CommunalPremetric, EmptyRegulationIdentities) {
  using namespace fixtures;
  EXPECT_EQ(*lgame_premetric(g.game(D), g.game(A)).exact, Rational(166, 30));
  EXPECT_EQ(lgame_premetric(g.game(A), g.game(D)).value, 0.0);
  EXPECT_EQ(lgame_premetric(g.game(H), g.game(H)).value, 0.0);
}

TEST_F(CommunalPremetric, ExtensionConventions) {
  using namespace fixtures;
  // Zero extension: the event {raffle,comp} is unknown to D, so D punishes it with 0.
  EXPECT_EQ(*lgame_premetric(g.game(G), g.game(D)).exact, Rational(266, 90));
  // Restricting to D's rules keeps the comp share of that event.
  EXPECT_EQ(*lgame_premetric(r.game(G), r.game(D), Extension::kRestrict).exact, Rational(100, 90));
}

TEST_F(CommunalPremetric, Symmetrizations) {
  using namespace fixtures;
  EXPECT_EQ(*symmetrize_plus(g.game(D), g.game(A)).exact, Rational(166, 30));
  EXPECT_EQ(*symmetrize_max(g.game(D), g.game(A)).exact, Rational(166, 30));
  EXPECT_EQ(symmetrize_plus(g.game(D), g.game(D)).value, 0.0);
  EXPECT_EQ(symmetrize_max(g.game(E), g.game(E)).value, 0.0);
  EXPECT_EQ(*symmetrize_plus(g.game(G), g.game(D)).exact, *symmetrize_plus(g.game(D), g.game(G)).exact);
  const auto rep = divergence_report(Variant::kMax, g.game(D), g.game(A));
  EXPECT_EQ(rep.variant, Variant::kMax);
  EXPECT_EQ(rep.target, "{comp}");
  EXPECT_EQ(rep.source, "{}");
}

TEST_F(CommunalPremetric, NeedsPunishmentAndOneLaw) {
  using namespace fixtures;
  const LGame bare(g.game(D).probability());
  EXPECT_EQ(error_code([&] { lgame_premetric(bare, g.game(A)); }), Errc::kUnpunished);
  auto other = oracle::graph_of(oracle::communal());
  EXPECT_EQ(error_code([&] { lgame_premetric(other.game(D), g.game(A)); }), Errc::kLawMismatch);
}

TEST(Premetric, MatchesOracleAndAxiomsOnRandomInstances) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = oracle::random_instance(rng, 1 + trial % 4);
    const auto g = oracle::graph_of(raw);
    for (RuleMask t : g.nodes()) {
      for (RuleMask s : g.nodes()) {
        for (bool restrict_ext : {false, true}) {
          const Extension ext = restrict_ext ? Extension::kRestrict : Extension::kZero;
          const double d = lgame_premetric(g.game(t), g.game(s), ext).value;
          EXPECT_GE(d, 0.0);
          EXPECT_NEAR(d, oracle::premetric(raw, t, s, restrict_ext), 1e-9);
          if (t == s) EXPECT_EQ(d, 0.0);
        }
        EXPECT_EQ(symmetrize_plus(g.game(t), g.game(s)).value, symmetrize_plus(g.game(s), g.game(t)).value);
        EXPECT_EQ(symmetrize_max(g.game(t), g.game(s)).value, symmetrize_max(g.game(s), g.game(t)).value);
        EXPECT_LE(symmetrize_max(g.game(t), g.game(s)).value, symmetrize_plus(g.game(t), g.game(s)).value);
      }
    }
  }
}

TEST(Premetric, TriangleInequalityCanFail) {
  using namespace fixtures;
  // Found by exhaustive search over communal triples: adding every rule and then
  // dropping two of them is cheaper than adding the tax alone.
  const auto g = communal_graph();
  EXPECT_EQ(*g.edge(A, B).exact, Rational(80, 3));
  EXPECT_EQ(*(g.edge(A, H) + g.edge(H, B)).exact, Rational(61, 5));
  EXPECT_GT(g.weight(A, B), g.weight(A, H) + g.weight(H, B));

  const auto plus = communal_graph(Extension::kZero, Variant::kPlus);
  EXPECT_GT(plus.weight(B, C), plus.weight(B, E) + plus.weight(E, C));
  const auto mx = communal_graph(Extension::kZero, Variant::kMax);
  EXPECT_GT(mx.weight(A, B), mx.weight(A, E) + mx.weight(E, B));
}

TEST_F(CommunalPremetric, CoherenceExamples) {
  using namespace fixtures;
  const auto v = check_coherence(g.game(A), g.game(D), 2);
  EXPECT_TRUE(v.holds());
  // Raising g(comp) from 166 to 200 moves D(D||A) from 166/30 to 200/30.
  const auto law = g.law_ptr();
  const auto pun = g.punishment().with_rule_punishment(2, q(200));
  const LGame d200(g.game(D).probability(), pun), a200(g.game(A).probability(), pun);
  EXPECT_EQ(*lgame_premetric(d200, a200).exact, Rational(200, 30));
  // Moving 1/30 of mass from the empty event onto {tax} under B.
  const ProbabilityModel shifted(Regulation(law, B), {{0, q(21, 30)}, {1, q(9, 30)}});
  EXPECT_EQ(*lgame_premetric(LGame(shifted, g.punishment()), g.game(A)).exact, Rational(900, 30));
  EXPECT_EQ(error_code([&] { check_coherence(g.game(A), g.game(E), 0); }), Errc::kNotAnExtension);
  EXPECT_EQ(error_code([&] { check_coherence(g.game(B), g.game(E), 0); }), Errc::kNotAnExtension);
}

TEST(Coherence, ZeroBreachProbabilityContributesNothing) {
  auto law = std::make_shared<const Law>(std::vector<Rule>{{"x", q(10)}, {"y", q(20)}});
  const PunishmentModel pun(law);
  const LGame base(ProbabilityModel(Regulation(law, 1), {{0, q(1, 2)}, {1, q(1, 2)}}), pun);
  const LGame ext(ProbabilityModel(Regulation(law, 3), {{0, q(1, 2)}, {1, q(1, 2)}}), pun);
  EXPECT_EQ(lgame_premetric(ext, base).value, 0.0);
  const auto verdict = check_coherence(base, ext, 1, {.punishment_scales = {1, 2, 5}, .mass_shifts = {0}});
  for (double v : verdict.severity_series) EXPECT_EQ(v, 0.0);
}

TEST(Coherence, HoldsOnRandomExtensions) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto raw = oracle::random_instance(rng, n);
    const auto g = oracle::graph_of(raw);
    const RuleMask base = static_cast<RuleMask>(rng() % (std::size_t{1} << n));
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((base >> i) & 1u)) free.push_back(i);
    }
    if (free.empty()) continue;
    const std::size_t rule = free[rng() % free.size()];
    const auto verdict = check_coherence(g.game(base), g.game(base | (RuleMask{1} << rule)), rule);
    EXPECT_TRUE(verdict.severity_monotone);
    EXPECT_TRUE(verdict.probability_monotone);
    EXPECT_EQ(verdict.severity_series.size(), 3u);
    EXPECT_EQ(verdict.probability_series.size(), 5u);
  }
}
