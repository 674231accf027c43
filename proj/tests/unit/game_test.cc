#include <algorithm>

#include <gtest/gtest.h>

#include "oracle.h"
#include "test_util.h"
#include "twocycle/errors.h"
#include "twocycle/game.h"
#include "twocycle/generators.h"

namespace twocycle {
namespace {

using testing::Example;
using testing::Idx;
using testing::V;

std::vector<Vertex> Sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(BuildGame, RunningExampleUniqueTwoCycle) {
  const auto g = Example();
  EXPECT_EQ(g.num_actions(), 20);
  const auto cycles = g.two_cycles();
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].first, V(1, "1"));
  EXPECT_EQ(cycles[0].second, V(2, "0"));
}

TEST(BuildGame, PromiseNeedsADisputedIndex) {
  EXPECT_THROW(TwoCycleGame(BitVector("00000"), BitVector("00000"), true),
               InvalidInput);
}

TEST(BuildGame, RejectsShortStrings) {
  EXPECT_THROW(TwoCycleGame(BitVector("11"), BitVector("00"), false), InvalidInput);
}

TEST(BuildGame, RejectsLengthMismatch) {
  EXPECT_THROW(TwoCycleGame(BitVector("110"), BitVector("1000"), false),
               InvalidInput);
}

TEST(BuildGame, NoPromiseAllowsZeroButNotTwo) {
  EXPECT_NO_THROW(TwoCycleGame(BitVector("00000"), BitVector("00000"), false));
  EXPECT_THROW(TwoCycleGame(BitVector("11000"), BitVector("00000"), false),
               InvalidInput);
}

TEST(OutNeighbor, RunningExample) {
  const auto g = Example();
  EXPECT_EQ(g.out_neighbor_a(V(2, "0")), V(1, "1"));
  EXPECT_EQ(g.out_neighbor_a(V(1, "1")), V(2, "11"));
  EXPECT_EQ(g.out_neighbor_b(V(1, "1")), V(2, "0"));
}

TEST(Utility, RunningExample) {
  const auto g = Example();
  EXPECT_EQ(g.utility_a(V(1, "1"), V(2, "0")), 1);
  EXPECT_EQ(g.utility_b(V(1, "1"), V(2, "0")), 1);
  EXPECT_EQ(g.utility_a(V(3, "0"), V(2, "0")), 0);
}

TEST(InNeighbors, RunningExample) {
  const auto g = Example();
  EXPECT_EQ(Sorted(g.in_neighbors_a(V(1, "1"))),
            (std::vector<Vertex>{V(1, "01"), V(1, "11"), V(2, "0")}));
  EXPECT_EQ(Sorted(g.forward_in_neighbors_a(V(1, "1"))),
            (std::vector<Vertex>{V(1, "01"), V(1, "11")}));
  EXPECT_EQ(Sorted(g.in_neighbors_b(V(2, "0"))),
            (std::vector<Vertex>{V(1, "0"), V(1, "1")}));
}

TEST(Layers, Definitions) {
  EXPECT_EQ(Layer(2), (std::vector<Vertex>{V(2, "0"), V(2, "1")}));
  EXPECT_EQ(MidwayLayer(2), (std::vector<Vertex>{V(2, "01"), V(2, "11"), V(2, "0")}));
  for (int i = 1; i <= 7; ++i) {
    EXPECT_EQ(Layer(i).size(), 2u);
    EXPECT_EQ(MidwayLayer(i).size(), 3u);
  }
}

TEST(KeyVertices, RunningExample) {
  const auto k = Example().key_vertices();
  EXPECT_EQ(k.disputed_index, 2);
  EXPECT_EQ(k.u_star, V(1, "1"));
  EXPECT_EQ(k.v0_star, V(2, "0"));
  EXPECT_EQ(k.v1_star, V(2, "1"));
  EXPECT_EQ(k.v01_star, V(2, "01"));
  EXPECT_EQ(k.v11_star, V(2, "11"));
}

TEST(KeyVertices, WrapsAtFirstLayer) {
  // i* = 1, so u* = (n, x_n).
  const TwoCycleGame g(BitVector("10001"), BitVector("00011"), true);
  const auto k = g.key_vertices();
  EXPECT_EQ(k.disputed_index, 1);
  EXPECT_EQ(k.u_star, V(5, "1"));
  const TwoCycleGame h(BitVector("10000"), BitVector("00000"), true);
  EXPECT_EQ(h.key_vertices().u_star, V(5, "0"));
}

TEST(KeyVertices, NoDisputedIndexThrows) {
  const TwoCycleGame g(BitVector("00000"), BitVector("00000"), false);
  EXPECT_THROW(g.key_vertices(), InvalidInput);
}

TEST(Graph, BackEdgesAreExactlyTheXOneClauses) {
  const auto g = Example();
  for (int i = 1; i <= 5; ++i) {
    EXPECT_EQ(g.graph_a().is_back_edge(Idx(i, "0")), g.x()[i] == 1);
    for (auto z : {"1", "01", "11"}) EXPECT_FALSE(g.graph_a().is_back_edge(Idx(i, z)));
  }
  for (int v = 0; v < 20; ++v) EXPECT_FALSE(g.graph_b().is_back_edge(v));
}

// The edge tables agree with a separate construction straight from the
// edge rules, on many random strings.
TEST(Graph, MatchesOracleConstruction) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    InstanceOptions o;
    o.n = 3 + static_cast<int>(seed % 20);
    o.seed = seed;
    const Instance inst = GenInstance(o);
    const TwoCycleGame g(inst.x, inst.y, true);
    const auto dense = testing::DenseOf(g);
    for (int u = 0; u < g.num_actions(); ++u) {
      for (int v = 0; v < g.num_actions(); ++v) {
        const auto vu = Vertex::FromIndex(u);
        const auto vv = Vertex::FromIndex(v);
        ASSERT_EQ(g.utility_a(vu, vv), dense.A(u, v));
        ASSERT_EQ(g.utility_b(vu, vv), dense.B(u, v));
      }
    }
  }
}

TEST(Graph, InListsInvertOutTables) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    InstanceOptions o;
    o.n = 3 + static_cast<int>(seed);
    o.seed = seed;
    const Instance inst = GenInstance(o);
    const TwoCycleGame g(inst.x, inst.y, true);
    int total_a = 0;
    int total_b = 0;
    for (int v = 0; v < g.num_actions(); ++v) {
      EXPECT_LE(g.graph_a().in_degree(v), 3);
      EXPECT_LE(g.graph_b().in_degree(v), 2);
      total_a += g.graph_a().in_degree(v);
      total_b += g.graph_b().in_degree(v);
      for (int s : g.graph_a().in(v)) EXPECT_EQ(g.graph_a().out(s), v);
      for (int s : g.graph_b().in(v)) EXPECT_EQ(g.graph_b().out(s), v);
    }
    EXPECT_EQ(total_a, g.num_actions());
    EXPECT_EQ(total_b, g.num_actions());
  }
}

TEST(BuildBayesian, SplitsBlocks) {
  const BayesianTwoCycleGame g(BitVector("1100100000"), BitVector("1001100000"), 2);
  EXPECT_EQ(g.num_types(), 2);
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.equilibrium_type(), 1);
  const auto pne1 = oracle::EnumeratePureNash(testing::DenseOf(g.sub_game(1)));
  ASSERT_EQ(pne1.size(), 1u);
  EXPECT_EQ(pne1[0], std::make_pair(Idx(1, "1"), Idx(2, "0")));
  EXPECT_TRUE(oracle::EnumeratePureNash(testing::DenseOf(g.sub_game(2))).empty());
  EXPECT_FALSE(g.sub_game(2).promise());
}

TEST(BuildBayesian, RejectsOneType) {
  EXPECT_THROW(BayesianTwoCycleGame(BitVector("11001"), BitVector("10011"), 1),
               InvalidInput);
}

TEST(BuildBayesian, RejectsIndivisibleLength) {
  EXPECT_THROW(BayesianTwoCycleGame(BitVector("1100100000"),
                                    BitVector("1001100000"), 3),
               InvalidInput);
}

TEST(BuildBayesian, RejectsWrongDisputedCount) {
  EXPECT_THROW(BayesianTwoCycleGame(BitVector("000000"), BitVector("000000"), 2),
               InvalidInput);
  EXPECT_THROW(BayesianTwoCycleGame(BitVector("100100"), BitVector("000000"), 2),
               InvalidInput);
}

}  // namespace
}  // namespace twocycle
