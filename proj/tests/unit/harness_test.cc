#include <gtest/gtest.h>

#include "test_util.h"
#include "twocycle/errors.h"
#include "twocycle/harness.h"

namespace twocycle {
namespace {

TEST(Harness, ParseNames) {
  EXPECT_EQ(ParseKind("ce"), EquilibriumKind::kCorrelated);
  EXPECT_EQ(ParseKind("nash"), EquilibriumKind::kNash);
  EXPECT_EQ(ParseKind("wsne"), EquilibriumKind::kWellSupported);
  EXPECT_FALSE(ParseKind("bogus"));
  EXPECT_EQ(ParseFamily("noisy"), Family::kNoisy);
  EXPECT_EQ(DefaultFamily(EquilibriumKind::kWellSupported), Family::kCycle);
  EXPECT_THROW(CheckFamily(EquilibriumKind::kWellSupported, Family::kPerturbed),
               InvalidInput);
}

TEST(Harness, RunningExampleNash) {
  const auto r = EndToEndDisjointness(BitVector("11001"), BitVector("10011"),
                                      EquilibriumKind::kNash, Family::kPoint, 0);
  EXPECT_EQ(r.disputed_index, 2);
  EXPECT_EQ(r.recovery.transcript.total_bits(), 1);
  EXPECT_EQ(r.regret.value, 0.0);
}

TEST(Harness, CorrelatedPerturbedAlwaysCorrect) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 30);
    const RunRecord r = RunTrial(EquilibriumKind::kCorrelated, Family::kPerturbed, n, seed);
    ASSERT_TRUE(r.correct) << "n=" << n << " seed=" << seed << " " << r.error;
    EXPECT_LE(r.bits, r.bit_bound);
    EXPECT_LE(r.regret, r.epsilon_limit);
  }
}

TEST(Harness, EveryFamilyCorrect) {
  const std::pair<EquilibriumKind, Family> cases[] = {
      {EquilibriumKind::kCorrelated, Family::kPoint},
      {EquilibriumKind::kCorrelated, Family::kNoisy},
      {EquilibriumKind::kNash, Family::kPoint},
      {EquilibriumKind::kNash, Family::kPerturbed},
      {EquilibriumKind::kNash, Family::kCycle},
      {EquilibriumKind::kWellSupported, Family::kPoint},
      {EquilibriumKind::kWellSupported, Family::kCycle},
  };
  for (const auto& [kind, family] : cases) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const RunRecord r = RunTrial(kind, family, 3 + static_cast<int>(seed), seed);
      EXPECT_TRUE(r.correct) << r.kind << "/" << r.family << " seed=" << seed << " " << r.error;
    }
  }
}

TEST(Harness, BayesianTrials) {
  for (int t : {2, 4, 8}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const RunRecord r = RunBayesianTrial(12, t, seed);
      EXPECT_TRUE(r.correct) << "T=" << t << " seed=" << seed << " " << r.error;
      EXPECT_EQ(r.recovered_type, r.expected_type);
    }
  }
}

TEST(Harness, NoDisputedIndexIsAnError) {
  EXPECT_THROW(EndToEndDisjointness(BitVector("00000"), BitVector("00000"),
                                    EquilibriumKind::kNash, Family::kPoint, 0),
               InvalidInput);
}

TEST(Harness, TrialsAreDeterministic) {
  const auto a = RunTrial(EquilibriumKind::kCorrelated, Family::kNoisy, 17, 99);
  const auto b = RunTrial(EquilibriumKind::kCorrelated, Family::kNoisy, 17, 99);
  EXPECT_EQ(a.regret, b.regret);
  EXPECT_EQ(a.recovered_index, b.recovered_index);
  EXPECT_EQ(a.bits, b.bits);
}

}  // namespace
}  // namespace twocycle
