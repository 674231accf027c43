#ifndef TWOCYCLE_GENERATORS_H_
#define TWOCYCLE_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "twocycle/bits.h"
#include "twocycle/distributions.h"
#include "twocycle/equilibria.h"
#include "twocycle/game.h"

namespace twocycle {

using Rng = std::mt19937_64;

// Instances ---------------------------------------------------------------

struct InstanceOptions {
  int n = 5;
  std::uint64_t seed = 0;
  // Force x_i = y_i = 0 for i <= zero_prefix_length.
  std::optional<int> zero_prefix_length;
  // Layer of the disputed index; uniform over the free layers when unset.
  std::optional<int> disputed_position;
};

struct Instance {
  BitVector x;
  BitVector y;
};

// Exactly one disputed index. Off it every (x_i, y_i) is drawn uniformly
// from {(0,0), (0,1), (1,1)}. Throws InvalidInput on infeasible options.
Instance GenInstance(const InstanceOptions& options);

struct BayesianInstanceOptions {
  int n = 12;  // per-type block length
  int num_types = 2;
  std::uint64_t seed = 0;
  // 1-based type holding the disputed index; uniform when unset.
  std::optional<int> equilibrium_type;
};

// Strings of length T * n. The equilibrium block is a promise instance,
// every other block has no disputed index.
Instance GenBayesianInstance(const BayesianInstanceOptions& options);

// Random objects for property checks ---------------------------------------

// Dirichlet(1)-like weights on `support` distinct random actions.
MixedStrategy RandomMixed(int num_actions, int support, Rng& rng);
// Random weights on `support` random pairs (duplicates merge).
CorrelatedDistribution RandomCorrelated(int num_actions, int support, Rng& rng);

// Correlated equilibria ----------------------------------------------------

// Point mass on the pure Nash equilibrium (u*, v0*).
CorrelatedDistribution PureNashPointMass(const TwoCycleGame& game);
// (1 - eta) * point mass + eta * uniform. ce regret is at most
// eta * 3 / N^2. Throws InvalidInput when the game has no pure equilibrium
// or eta is outside [0, 1].
CorrelatedDistribution PerturbedCe(const TwoCycleGame& game, double eta);
// (1 - eta) * point mass + eta * nu with nu random. ce regret <= eta.
CorrelatedDistribution NoisyCe(const TwoCycleGame& game, double eta, Rng& rng);

// Nash profiles ------------------------------------------------------------

Profile PureNashProfile(const TwoCycleGame& game);
// Each side (1 - eta) * its pure action + eta * a random strategy. Nash
// regret is at most 2 eta.
Profile PerturbedNashProfile(const TwoCycleGame& game, double eta, Rng& rng);

// The cycle of f(v) = out_B(out_A(v)) reached from `start`, in visiting
// order. Length 1 exactly at v0*.
std::vector<Vertex> CycleFrom(const TwoCycleGame& game, const Vertex& start);
// a uniform on out_A(v_j), b uniform on the cycle v_j. An exact Nash and
// exact well-supported Nash equilibrium.
Profile CycleProfile(const TwoCycleGame& game, const Vertex& start);
Profile RandomCycleProfile(const TwoCycleGame& game, Rng& rng);

// Exact per-type equilibria of a Bayesian game: the pure equilibrium for
// the equilibrium type, a cycle equilibrium from a random start elsewhere.
std::vector<Profile> BayesianEquilibriumProfiles(const BayesianTwoCycleGame& game,
                                                 Rng& rng);

// Trivial equilibria that carry no information about the disputed index -----

struct TrivialAceResult {
  CorrelatedDistribution mu;
  double alpha = 0.0;
};
// Symmetric distribution on pairs ((i,0),(j,0)): a band on
// n/4+4 <= i,j <= n/2+2, two strips at n/4+3, and a ramp along |i-j| = 1
// for 2 <= i,j <= n/4+2. alpha is fixed by normalisation. Requires n
// divisible by 4, n >= 16 and x_i = y_i = 0 for i <= n/2+3.
TrivialAceResult TrivialAce(const BitVector& x, const BitVector& y);

// a = b = 2/n on (i,0), 2 <= i <= n/2+1. Requires n even and
// x_i = y_i = 0 for i <= n/2+2.
Profile TrivialAne(const BitVector& x, const BitVector& y);

struct TrivialWsneResult {
  Profile profile;
  // Raw mass is (n + #ones) / n; each side is rescaled by n / (n + #ones).
  double scale_a = 1.0;
  double scale_b = 1.0;
};
TrivialWsneResult TrivialWsne(const BitVector& x, const BitVector& y);

// mu(v1,u1) = mu(u2,v2) = 1/2 for the first edges (u1,v1) of G_A and
// (u2,v2) of G_B, in linear order, with v2 not in N_A(v1) and v1 not in
// N_B(v2). An exact coarse correlated equilibrium.
CorrelatedDistribution ExactCce(const TwoCycleGame& game);

}  // namespace twocycle

#endif  // TWOCYCLE_GENERATORS_H_
