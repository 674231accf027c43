#include <benchmark/benchmark.h>

#include "twocycle/equilibria.h"
#include "twocycle/game.h"
#include "twocycle/generators.h"
#include "twocycle/recovery.h"

namespace {

using namespace twocycle;

TwoCycleGame MakeGame(int n) {
  InstanceOptions o;
  o.n = n;
  o.seed = 42;
  const Instance inst = GenInstance(o);
  return TwoCycleGame(inst.x, inst.y, true);
}

void BM_BuildGame(benchmark::State& state) {
  InstanceOptions o;
  o.n = static_cast<int>(state.range(0));
  o.seed = 42;
  const Instance inst = GenInstance(o);
  for (auto _ : state) {
    TwoCycleGame g(inst.x, inst.y, true);
    benchmark::DoNotOptimize(g.key_vertices());
  }
}
BENCHMARK(BM_BuildGame)->RangeMultiplier(4)->Range(16, 4096);

// Sparse: support grows linearly with N.
void BM_CeRegretSparse(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  Rng rng(1);
  const auto mu = RandomCorrelated(g.num_actions(), 4 * g.num_actions(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(CeRegret(g, mu).value);
}
BENCHMARK(BM_CeRegretSparse)->RangeMultiplier(4)->Range(16, 1024);

void BM_CeRegretDense(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  const auto mu = PerturbedCe(g, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(CeRegret(g, mu).value);
}
BENCHMARK(BM_CeRegretDense)->RangeMultiplier(2)->Range(8, 64);

void BM_RuleCeRegret(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  Rng rng(2);
  const auto mu = RandomCorrelated(g.num_actions(), 4 * g.num_actions(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(RuleCeRegret(g, mu).value);
}
BENCHMARK(BM_RuleCeRegret)->RangeMultiplier(4)->Range(16, 1024);

void BM_NeRegret(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  Rng rng(3);
  const auto a = RandomMixed(g.num_actions(), g.num_actions() / 2, rng);
  const auto b = RandomMixed(g.num_actions(), g.num_actions() / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(NeRegret(g, a, b).value);
}
BENCHMARK(BM_NeRegret)->RangeMultiplier(4)->Range(16, 4096);

void BM_RecoverCorrelated(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  const auto mu = PerturbedCe(g, 1.0 / (80.0 * g.num_actions()));
  const double eps = CeRegret(g, mu).value;
  const PartyViewA va(g.x());
  const PartyViewB vb(g.y());
  for (auto _ : state) {
    benchmark::DoNotOptimize(RecoverFromCorrelated(va, vb, mu, eps).transcript.total_bits());
  }
}
BENCHMARK(BM_RecoverCorrelated)->RangeMultiplier(2)->Range(8, 64);

void BM_RecoverNash(benchmark::State& state) {
  const auto g = MakeGame(static_cast<int>(state.range(0)));
  Rng rng(4);
  const double big_n = g.num_actions();
  const auto p = PerturbedNashProfile(g, 1.0 / (40.0 * big_n * big_n), rng);
  const double eps = NeRegret(g, p.a, p.b).value;
  const PartyViewA va(g.x());
  const PartyViewB vb(g.y());
  for (auto _ : state) {
    benchmark::DoNotOptimize(RecoverFromNash(va, p.a, vb, p.b, eps).transcript.total_bits());
  }
}
BENCHMARK(BM_RecoverNash)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
