#include <gtest/gtest.h>

#include <random>

#include "c4ex/graph.hpp"
#include "oracles.hpp"

namespace c4ex {
namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(Graph, EdgeBookkeeping) {
  Graph g(70);  // spans two words per row
  g.add_edge(0, 69);
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(69, 0));
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.neighbors(64), std::vector<Vertex>{3});
  g.remove_edge(0, 69);
  g.remove_edge(0, 69);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(g.add_edge(5, 5), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 70), std::out_of_range);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
}

TEST(Graph, InducedRelabels) {
  const Graph c = cycle(6);
  const std::vector<Vertex> keep{4, 5, 0};
  const Graph p = c.induced(keep);
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ(p.edge_count(), 2);
  EXPECT_TRUE(p.has_edge(0, 1));
  EXPECT_TRUE(p.has_edge(1, 2));
  const std::vector<Vertex> repeated{1, 1};
  EXPECT_THROW(c.induced(repeated), std::invalid_argument);
}

TEST(C4Check, SmallCases) {
  EXPECT_TRUE(is_c4_free(Graph(0)).c4_free);
  EXPECT_TRUE(is_c4_free(cycle(3)).c4_free);
  EXPECT_TRUE(is_c4_free(cycle(5)).c4_free);
  const auto c4 = is_c4_free(cycle(4));
  ASSERT_FALSE(c4.c4_free);
  ASSERT_TRUE(c4.witness.has_value());
}

TEST(C4Check, AgreesWithEnumerationAndWitnessIsACycle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 14;
    const Graph g = random_graph(n, 0.05 + 0.25 * (trial % 5) / 4.0, rng);
    const auto res = is_c4_free(g);
    ASSERT_EQ(res.c4_free, !testing::has_c4_by_enumeration(g)) << graph6_encode(g);
    if (!res.c4_free) {
      const auto& w = *res.witness;
      for (int i = 0; i < 4; ++i) ASSERT_TRUE(g.has_edge(w[i], w[(i + 1) % 4])) << graph6_encode(g);
      std::array<Vertex, 4> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    }
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  Graph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  }
  EXPECT_EQ(graph6_encode(k4), "C~");
  // Example from the format description: 5 vertices, edges 02 04 13 34.
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 2}, {0, 4}, {1, 3}, {3, 4}};
  EXPECT_EQ(graph6_encode(Graph::from_edges(5, e)), "DQc");
  EXPECT_EQ(graph6_decode("DQc"), Graph::from_edges(5, e));
  EXPECT_EQ(graph6_decode(">>graph6<<DQc\n"), Graph::from_edges(5, e));
}

TEST(Graph6, LargeOrderHeader) {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(42, 43);
  const auto text = graph6_encode(g);
  EXPECT_EQ(text.substr(0, 4), "~?@c");  // 100 = 0*64^2 + 1*64 + 36
  EXPECT_EQ(graph6_decode(text), g);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 70; ++n) {
    const Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  auto offset_of = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      graph6_decode(text);
    } catch (const Graph6Error& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  EXPECT_EQ(offset_of(""), 0U);
  EXPECT_EQ(offset_of("C"), 1U);       // body missing
  EXPECT_EQ(offset_of("C~~"), 2U);     // one byte too many
  EXPECT_EQ(offset_of("C\x7f"), 1U);   // byte out of range
  EXPECT_EQ(offset_of("DQd"), 2U);     // padding bits set
  EXPECT_FALSE(offset_of("C~").has_value());
}

TEST(Deficiency, ProfilePartitionsVertices) {
  const Graph c = cycle(5);
  const auto p = deficiency_profile(c, 1);  // every degree is 2 = q + 1
  EXPECT_TRUE(p.S.empty());
  EXPECT_EQ(p.S_q1.size(), 5U);
  EXPECT_EQ(p.total(), 0);

  Graph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  const auto s = deficiency_profile(star, 2);
  EXPECT_EQ(s.S_plus, std::vector<Vertex>{0});
  EXPECT_EQ(s.fSplus, -1);
  EXPECT_EQ(s.fS, 8);
  EXPECT_EQ(s.f[0], -1);
}

TEST(TwoPaths, CountMatchesTripleLoop) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 20;
    const Graph g = random_graph(n, 0.3, rng);
    std::vector<Vertex> X;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) X.push_back(v);
    }
    EXPECT_EQ(count_2paths_outside(g, X), testing::two_paths_outside_naive(g, X));
  }
}

TEST(Weight, BetweenDisjointSets) {
  Graph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  const auto p = deficiency_profile(star, 2);
  const std::vector<Vertex> A{0}, B{1, 2}, overlap{0, 1};
  EXPECT_EQ(weight_between(star, p, A, B), 2 * 2);
  EXPECT_THROW(weight_between(star, p, A, overlap), std::invalid_argument);
}

TEST(AdjacencyText, Format) {
  EXPECT_EQ(adjacency_text(cycle(3)), "n 3 e 3\n0: 1 2\n1: 0 2\n2: 0 1\n");
}

}  // namespace
}  // namespace c4ex
