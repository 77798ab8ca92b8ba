#include <gtest/gtest.h>

#include <random>

#include "c4ex/gf.hpp"
#include "c4ex/lemmas.hpp"
#include "c4ex/polarity.hpp"
#include "oracles.hpp"

namespace c4ex {
namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph polarity(std::int64_t q) { return polarity_graph(make_field(*is_prime_power(q))); }

Graph with_isolated(const Graph& g, int extra) {
  return Graph::from_edges(g.order() + extra, g.edges());
}

std::vector<Vertex> random_subset(const std::vector<Vertex>& from, std::mt19937_64& rng) {
  std::vector<Vertex> out;
  while (out.empty()) {
    for (Vertex v : from) {
      if (rng() % 2 == 0) out.push_back(v);
    }
  }
  return out;
}

TEST(LemmaFN, Examples) {
  const auto c5 = check_lemma_fN(cycle(5), 2, 0);
  EXPECT_TRUE(c5.holds);
  EXPECT_EQ(c5.margin, BigRational(2));
  EXPECT_EQ(c5.name, "lemma_fN");
  EXPECT_EQ(*c5.context.vertex, 0);

  const auto single = check_lemma_fN(Graph(1), 1, 0);
  EXPECT_TRUE(single.holds);
  EXPECT_EQ(single.margin, BigRational(0));
}

TEST(LemmaFN, RejectsGraphsWithC4) {
  try {
    check_lemma_fN(cycle(4), 1, 0);
    FAIL() << "expected LemmaHypothesisError";
  } catch (const LemmaHypothesisError& e) {
    ASSERT_TRUE(e.witness().has_value());
  }
}

TEST(LemmaFN, HoldsOnPolarityGraphs) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const Graph g = polarity(q);
    const C4FreeGraph cg(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto verdict = check_lemma_fN(cg, static_cast<int>(q), v);
      ASSERT_TRUE(verdict.holds) << q << " " << v;
    }
  }
}

TEST(LemmaFN, HoldsOnRandomC4FreeGraphsForAnyQ) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_c4_free(2 + trial % 35, 0.2 + 0.8 * (trial % 7) / 6.0, rng);
    const C4FreeGraph cg(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (int q : {0, 1, 3, 10}) ASSERT_TRUE(check_lemma_fN(cg, q, v).holds) << graph6_encode(g);
    }
  }
}

TEST(PuncturedNeighbourhoods, DisjointIffNoC4ThroughV) {
  EXPECT_TRUE(punctured_neighbourhoods_disjoint(cycle(5), 0));
  EXPECT_FALSE(punctured_neighbourhoods_disjoint(cycle(4), 0));
  const Graph p = polarity(3);
  for (Vertex v = 0; v < p.order(); ++v) EXPECT_TRUE(punctured_neighbourhoods_disjoint(p, v));
}

TEST(ClampedBinom, AgreesOnIntegers) {
  for (int x = -5; x < 20; ++x) {
    const std::int64_t expected = x >= 1 ? static_cast<std::int64_t>(x) * (x - 1) / 2 : 0;
    EXPECT_EQ(clamped_binom2(BigRational(x)), BigRational(expected)) << x;
  }
  EXPECT_EQ(clamped_binom2(BigRational(3, 2)), BigRational(3, 8));
  EXPECT_EQ(clamped_binom2(BigRational(1, 2)), BigRational(0));
}

TEST(TwoPath, PolarityGraphsHoldWithAllIntermediates) {
  std::mt19937_64 rng(5);
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    const Graph g = polarity(q);
    const C4FreeGraph cg(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto res = check_2path_inequality(cg, v, random_subset(g.neighbors(v), rng));
      ASSERT_TRUE(res.verdict.holds) << q << " " << v;
      ASSERT_TRUE(res.all_intermediates_hold()) << q << " " << v;
    }
  }
}

TEST(TwoPath, RandomC4FreeGraphs) {
  std::mt19937_64 rng(2024);
  int literal_checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_c4_free(3 + trial % 30, 0.3 + 0.7 * (trial % 5) / 4.0, rng);
    const C4FreeGraph cg(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) continue;
      const auto res = check_2path_inequality(cg, v, random_subset(g.neighbors(v), rng));
      const auto& d = res.details;
      ASSERT_TRUE(d.x_size_identity()) << graph6_encode(g) << " v=" << v;
      ASSERT_TRUE(d.m_routes_agree()) << graph6_encode(g) << " v=" << v;
      ASSERT_TRUE(d.m_upper_ok()) << graph6_encode(g) << " v=" << v;
      ASSERT_TRUE(d.jensen_ok()) << graph6_encode(g) << " v=" << v;
      ASSERT_TRUE(res.verdict.holds) << graph6_encode(g) << " v=" << v;
      if (d.literal_form_valid()) {
        ASSERT_GE(d.literal_margin.sign(), 0) << graph6_encode(g) << " v=" << v;
        ++literal_checked;
      }
    }
  }
  EXPECT_GT(literal_checked, 1000);
}

TEST(TwoPath, LiteralFormFailsForNegativeL) {
  const Graph g = with_isolated(polarity(2), 1);
  // v of degree 3 with neighbour degrees 2, 3, 3.
  Vertex v = 0;
  auto sum_of_neighbour_degrees = [&](Vertex x) {
    int sum = 0;
    for (Vertex u : g.neighbors(x)) sum += g.degree(u);
    return sum;
  };
  while (g.degree(v) != 3 || sum_of_neighbour_degrees(v) != 8) ++v;
  const auto res = check_2path_inequality(g, v, g.neighbors(v));
  EXPECT_EQ(res.details.L, -5);
  EXPECT_EQ(res.details.lhs, BigRational(1));
  EXPECT_EQ(res.details.literal_margin, BigRational(-4));
  EXPECT_FALSE(res.details.literal_form_valid());
  EXPECT_TRUE(res.verdict.holds);
  EXPECT_EQ(res.verdict.margin, BigRational(1));
  EXPECT_FALSE(res.verdict.context.note.empty());
}

TEST(TwoPath, RejectsBadSets) {
  const Graph g = cycle(5);
  EXPECT_THROW(check_2path_inequality(g, 0, {}), LemmaHypothesisError);
  EXPECT_THROW(check_2path_inequality(g, 0, {2}), LemmaHypothesisError);
  EXPECT_THROW(check_2path_inequality(g, 0, {1, 1}), LemmaHypothesisError);
  EXPECT_THROW(check_2path_inequality(cycle(4), 0, {1}), LemmaHypothesisError);
}

TEST(Regime, SelectionAndR) {
  EXPECT_EQ(regime_for(8, 2), Regime::kDeficient);
  EXPECT_EQ(regime_for(9, 2), Regime::kSurplus);
  EXPECT_EQ(regime_r(7, 2, Regime::kDeficient), 1);
  EXPECT_EQ(regime_r(9, 2, Regime::kSurplus), 2);
}

TEST(Regime, DeficientHypothesesOnPolarityGraph) {
  const Graph g = polarity(61);
  const auto hyp = regime_hypotheses(g, 61, 1, Regime::kDeficient);
  EXPECT_TRUE(hyp.met) << hyp.reason;
  EXPECT_FALSE(regime_hypotheses(g, 61, 2, Regime::kDeficient).met);
  EXPECT_EQ(regime_hypotheses(polarity(5), 5, 1, Regime::kDeficient).reason, "r outside [0, 0.033q]");

  const auto split = check_splus_bound(g, 61, 1);
  EXPECT_TRUE(split.verdict.hypotheses_met);
  EXPECT_TRUE(split.verdict.vacuous);
  EXPECT_TRUE(split.size_bound_ok());
  EXPECT_EQ(split.verdict.margin, BigRational(38));

  const auto chain = check_weight_chain(g, 61, Regime::kDeficient);
  EXPECT_TRUE(chain.lower.hypotheses_met);
  EXPECT_TRUE(chain.lower.vacuous);
  EXPECT_TRUE(chain.lower.holds);
  EXPECT_TRUE(chain.upper.holds);
  EXPECT_EQ(chain.weight, 0);
}

TEST(Regime, SurplusHypothesisFailureIsExplained) {
  const Graph g = with_isolated(polarity(5), 1);
  const auto hyp = regime_hypotheses(g, 5, 1, Regime::kSurplus);
  EXPECT_FALSE(hyp.met);
  EXPECT_EQ(hyp.reason, "e <= n(q+1)/2");
  EXPECT_FALSE(regime_hypotheses(g, 5, 2, Regime::kSurplus).met);
}

TEST(NeighbourhoodSplus, DeficientCapOnPolarityGraph) {
  const auto rep = check_neighborhood_splus(polarity(2), 2, Regime::kDeficient);
  ASSERT_EQ(rep.per_vertex.size(), 7U);
  for (const auto& v : rep.per_vertex) {
    EXPECT_EQ(v.margin, BigRational(11));
    EXPECT_TRUE(v.vacuous);
  }
}

TEST(NeighbourhoodSplus, SurplusCapIsLargestIntegerBelowBound) {
  // Star plus isolated vertices: only the centre has degree >= 0.7q.
  for (int q : {20, 21, 37}) {
    const int leaves = q;
    const int n = q * q + q + 2;
    Graph g(n);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    const auto rep = check_neighborhood_splus(g, q, Regime::kSurplus);
    ASSERT_EQ(rep.per_vertex.size(), 1U);
    std::int64_t cap = 0;
    while (BigRational(cap + 1) < BigRational(11, 20) * q) ++cap;
    EXPECT_EQ(rep.per_vertex[0].margin, BigRational(cap)) << q;
    EXPECT_FALSE(rep.per_vertex[0].hypotheses_met);
  }
}

}  // namespace
}  // namespace c4ex
