#ifndef TWOCYCLE_EQUILIBRIA_H_
#define TWOCYCLE_EQUILIBRIA_H_

#include <string_view>
#include <variant>
#include <vector>

#include "twocycle/distributions.h"
#include "twocycle/game.h"
#include "twocycle/win_lose_game.h"

namespace twocycle {

enum class Player { kA, kB };
std::string_view PlayerName(Player p);

// Deviations that attain a reported regret.

// Stay with the recommendation. Reported when no deviation gains.
struct FollowWitness {};
// Recommended `from`, play `to` instead (ce, wsne).
struct SwapWitness {
  int from = 0;
  int to = 0;
};
// Ignore the recommendation and always play `to` (cce, ne).
struct ConstantWitness {
  int to = 0;
};
// Remap every action (rce).
struct RuleWitness {
  SwitchingRule rule;
};

using Witness =
    std::variant<FollowWitness, SwapWitness, ConstantWitness, RuleWitness>;

// The exact value of the best deviation for the worse-off player. A
// profile is an epsilon-equilibrium of the corresponding kind iff
// value <= epsilon.
struct RegretReport {
  double value = 0.0;
  Player player = Player::kA;
  Witness witness = FollowWitness{};
  // Type of the attaining sub-game for Bayesian regrets (1-based), else 0.
  int type = 0;
};

struct Profile {
  MixedStrategy a;
  MixedStrategy b;
};

// Correlated notions ------------------------------------------------------

// max over players and (u, u') of sum_v mu(u,v) (u_A(u',v) - u_A(u,v)).
RegretReport CeRegret(const WinLoseGame& game, const CorrelatedDistribution& mu);
// Best switching rule, chosen action by action: the u-slices of mu are
// disjoint, so the expectation splits into one independent maximisation per
// recommended action.
RegretReport RuleCeRegret(const WinLoseGame& game,
                          const CorrelatedDistribution& mu);
// Best constant deviation (coarse correlated equilibrium). Following the
// recommendation is always available, so the value is never negative.
RegretReport CceRegret(const WinLoseGame& game, const CorrelatedDistribution& mu);

// Product notions ---------------------------------------------------------

RegretReport NeRegret(const WinLoseGame& game, const MixedStrategy& a,
                      const MixedStrategy& b);
// Worst supported action (support: probability > kSupportTolerance).
RegretReport WsneRegret(const WinLoseGame& game, const MixedStrategy& a,
                        const MixedStrategy& b);

// Under the diagonal prior a type only ever meets its own type, so the
// Bayesian regret is the worst per-type Nash regret. Throws InvalidInput
// unless there is exactly one profile per type.
RegretReport BayesianNeRegret(const BayesianTwoCycleGame& game,
                              const std::vector<Profile>& profiles);

// Convenience overloads on the 2-cycle game.
RegretReport CeRegret(const TwoCycleGame& game, const CorrelatedDistribution& mu);
RegretReport RuleCeRegret(const TwoCycleGame& game,
                          const CorrelatedDistribution& mu);
RegretReport CceRegret(const TwoCycleGame& game,
                       const CorrelatedDistribution& mu);
RegretReport NeRegret(const TwoCycleGame& game, const MixedStrategy& a,
                      const MixedStrategy& b);
RegretReport WsneRegret(const TwoCycleGame& game, const MixedStrategy& a,
                        const MixedStrategy& b);

// Re-evaluates a witness directly from the utility functions. Used to check
// that reports are self-certifying.
double EvaluateWitness(const WinLoseGame& game, const CorrelatedDistribution& mu,
                       const RegretReport& report);
double EvaluateWitness(const WinLoseGame& game, const MixedStrategy& a,
                       const MixedStrategy& b, const RegretReport& report);

// mu(u, v) = 1 / N^2.
CorrelatedDistribution UniformCorrelated(const TwoCycleGame& game);
inline CorrelatedDistribution ProductDistribution(const MixedStrategy& a,
                                                  const MixedStrategy& b) {
  return CorrelatedDistribution::Product(a, b);
}

}  // namespace twocycle

#endif  // TWOCYCLE_EQUILIBRIA_H_
