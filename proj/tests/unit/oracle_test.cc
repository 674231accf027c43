#include <gtest/gtest.h>

#include "oracle.h"
#include "test_util.h"
#include "twocycle/generators.h"

namespace twocycle {
namespace {

using testing::DenseOf;
using testing::Example;
using testing::Idx;

TEST(DenseCeRegret, PointMassOnPureNashIsZero) {
  const auto d = DenseOf(Example());
  std::vector<double> mu(400, 0.0);
  mu[Idx(1, "1") * 20 + Idx(2, "0")] = 1.0;
  EXPECT_EQ(oracle::DenseCeRegret(d, mu), 0.0);
}

TEST(DenseCeRegret, UniformOnRunningExample) {
  const auto d = DenseOf(Example());
  EXPECT_NEAR(oracle::DenseCeRegret(d, std::vector<double>(400, 1.0 / 400)),
              3.0 / 400.0, 1e-15);
}

TEST(ExhaustiveRuleRegret, HandEnumeratedExample) {
  oracle::DenseWinLoseGame g{3, std::vector<int>(9, 0), std::vector<int>(9, 0)};
  g.ua[0] = 1;  // u_A(1,1) = 1 in 1-based actions
  EXPECT_NEAR(oracle::ExhaustiveRuleRegret(g, std::vector<double>(9, 1.0 / 9)),
              2.0 / 9.0, 1e-15);
}

TEST(ExhaustiveRuleRegret, IdentityOnlyGameIsZero) {
  // Constant utilities: no rule changes anything.
  oracle::DenseWinLoseGame g{4, std::vector<int>(16, 1), std::vector<int>(16, 0)};
  Rng rng(1);
  EXPECT_EQ(oracle::ExhaustiveRuleRegret(g, RandomCorrelated(4, 6, rng).ToDense()), 0.0);
}

TEST(ExhaustiveRuleRegret, RefusesLargeGames) {
  oracle::DenseWinLoseGame g{7, std::vector<int>(49, 0), std::vector<int>(49, 0)};
  EXPECT_THROW(oracle::ExhaustiveRuleRegret(g, std::vector<double>(49, 1.0 / 49)),
               std::invalid_argument);
}

TEST(EnumeratePureNash, RunningExample) {
  const auto pne = oracle::EnumeratePureNash(DenseOf(Example()));
  ASSERT_EQ(pne.size(), 1u);
  EXPECT_EQ(pne[0], std::make_pair(Idx(1, "1"), Idx(2, "0")));
}

TEST(EnumeratePureNash, NoPromiseAllZeroHasNone) {
  EXPECT_TRUE(oracle::EnumeratePureNash(oracle::TwoCycleFromStrings("00000", "00000"))
                  .empty());
}

TEST(EnumeratePureNash, SeededPromiseGamesHaveExactlyTheKeyPair) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    InstanceOptions o;
    o.n = 3 + static_cast<int>(seed % 14);
    o.seed = seed;
    const Instance inst = GenInstance(o);
    const TwoCycleGame g(inst.x, inst.y, true);
    const auto pne = oracle::EnumeratePureNash(DenseOf(g));
    const auto k = g.key_vertices();
    ASSERT_EQ(pne.size(), 1u) << "seed " << seed;
    EXPECT_EQ(pne[0], std::make_pair(k.u_star.index(), k.v0_star.index()));
  }
}

TEST(DefinitionEvalBayesian, PureProfilesScoreZero) {
  const auto g1 = DenseOf(Example());
  const auto g2 = oracle::TwoCycleFromStrings("00000", "00000");
  std::vector<double> a(20, 0.0);
  std::vector<double> b(20, 0.0);
  a[Idx(1, "1")] = 1.0;
  b[Idx(2, "0")] = 1.0;
  // Type 2 on a cycle of out_B . out_A: layer 0-vertices chase each other.
  const auto sub2 = TwoCycleGame(BitVector("00000"), BitVector("00000"), false);
  const Profile cyc = CycleProfile(sub2, testing::V(1, "0"));
  EXPECT_NEAR(oracle::DefinitionEvalBayesian(oracle::DiagonalPrior(2), {g1, g2}, {g1, g2},
                                             {a, testing::Values(cyc.a)},
                                             {b, testing::Values(cyc.b)}),
              0.0, 1e-15);
}

TEST(DefinitionEvalBayesian, IdenticalTypesReduceToNash) {
  const auto g = DenseOf(Example());
  Rng rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = testing::Values(RandomMixed(20, 5, rng));
    const auto b = testing::Values(RandomMixed(20, 9, rng));
    EXPECT_NEAR(oracle::DefinitionEvalBayesian(oracle::DiagonalPrior(2), {g, g}, {g, g},
                                               {a, a}, {b, b}),
                oracle::DenseNeRegret(g, a, b), 1e-15);
  }
}

}  // namespace
}  // namespace twocycle
