#include "twocycle/equilibria.h"

#include <algorithm>
#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

// Sparse accumulator over action indices; `touched` lists the slots that
// became nonzero, ascending after Sorted().
class Accumulator {
 public:
  explicit Accumulator(int size) : value_(size, 0.0), seen_(size, 0) {}

  void Add(int index, double amount) {
    if (!seen_[index]) {
      seen_[index] = 1;
      touched_.push_back(index);
    }
    value_[index] += amount;
  }
  double operator[](int index) const { return value_[index]; }
  const std::vector<int>& Sorted() {
    std::sort(touched_.begin(), touched_.end());
    return touched_;
  }
  void Clear() {
    for (int i : touched_) {
      value_[i] = 0.0;
      seen_[i] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> value_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> touched_;
};

struct Deviation {
  double gain = 0.0;
  int to = 0;
};

// Best replacement for `self` given accumulated payoffs; `self` wins ties so
// the gain is never negative.
Deviation BestAgainst(Accumulator& payoff, int self) {
  Deviation best{0.0, self};
  const double base = payoff[self];
  for (int w : payoff.Sorted()) {
    const double gain = payoff[w] - base;
    if (gain > best.gain) best = {gain, w};
  }
  return best;
}

// Per recommended action, the best swap gain for player A (rows) or B
// (columns). `fn(action, deviation)` is called for every action with mass.
template <typename Fn>
void ForEachSwapA(const WinLoseGame& g, const CorrelatedDistribution& mu, Fn fn) {
  Accumulator payoff(g.num_actions());
  for (int u = 0; u < g.num_actions(); ++u) {
    if (mu.RowTotal(u) == 0.0) continue;
    mu.ForEachInRow(u, [&](int v, double p) {
      for (int w : g.a_winners(v)) payoff.Add(w, p);
    });
    fn(u, BestAgainst(payoff, u));
    payoff.Clear();
  }
}

template <typename Fn>
void ForEachSwapB(const WinLoseGame& g, const CorrelatedDistribution& mu, Fn fn) {
  Accumulator payoff(g.num_actions());
  for (int v = 0; v < g.num_actions(); ++v) {
    if (mu.ColumnTotal(v) == 0.0) continue;
    mu.ForEachInColumn(v, [&](int u, double p) {
      for (int w : g.b_winners(u)) payoff.Add(w, p);
    });
    fn(v, BestAgainst(payoff, v));
    payoff.Clear();
  }
}

void CheckSize(const WinLoseGame& g, int size) {
  if (size != g.num_actions()) {
    throw InvalidInput("distribution over " + std::to_string(size) +
                       " actions for a game with " +
                       std::to_string(g.num_actions()));
  }
}

RegretReport Worse(RegretReport a, RegretReport b) {
  return b.value > a.value ? b : a;
}

RegretReport SwapRegret(const WinLoseGame& g, const CorrelatedDistribution& mu,
                        Player player) {
  RegretReport r{.player = player};
  auto take = [&](int from, const Deviation& d) {
    if (d.gain > r.value) {
      r.value = d.gain;
      r.witness = SwapWitness{from, d.to};
    }
  };
  if (player == Player::kA) {
    ForEachSwapA(g, mu, take);
  } else {
    ForEachSwapB(g, mu, take);
  }
  return r;
}

RegretReport RuleRegret(const WinLoseGame& g, const CorrelatedDistribution& mu,
                        Player player) {
  SwitchingRule rule(g.num_actions());
  for (int i = 0; i < g.num_actions(); ++i) rule[i] = i;
  double total = 0.0;
  auto take = [&](int from, const Deviation& d) {
    total += d.gain;
    rule[from] = d.to;
  };
  if (player == Player::kA) {
    ForEachSwapA(g, mu, take);
  } else {
    ForEachSwapB(g, mu, take);
  }
  return {.value = total, .player = player, .witness = RuleWitness{std::move(rule)}};
}

// payoff[w] = expected utility of always playing w, and the expected utility
// of following the recommendation.
RegretReport ConstantRegret(std::span<const double> payoff, double follow,
                            Player player) {
  RegretReport r{.player = player};
  for (int w = 0; w < static_cast<int>(payoff.size()); ++w) {
    const double gain = payoff[w] - follow;
    if (gain > r.value) {
      r.value = gain;
      r.witness = ConstantWitness{w};
    }
  }
  return r;
}

RegretReport CoarseRegret(const WinLoseGame& g, const CorrelatedDistribution& mu,
                          Player player) {
  std::vector<double> payoff(g.num_actions(), 0.0);
  double follow = 0.0;
  if (player == Player::kA) {
    for (int v = 0; v < g.num_actions(); ++v) {
      const double column = mu.ColumnTotal(v);
      for (int w : g.a_winners(v)) {
        payoff[w] += column;
        follow += mu.at(w, v);
      }
    }
  } else {
    for (int u = 0; u < g.num_actions(); ++u) {
      const double row = mu.RowTotal(u);
      for (int w : g.b_winners(u)) {
        payoff[w] += row;
        follow += mu.at(u, w);
      }
    }
  }
  return ConstantRegret(payoff, follow, player);
}

// Expected payoff of each pure action of `player` against the opponent's
// mixed strategy.
std::vector<double> PurePayoffs(const WinLoseGame& g, const MixedStrategy& a,
                                const MixedStrategy& b, Player player) {
  std::vector<double> payoff(g.num_actions(), 0.0);
  for (int i = 0; i < g.num_actions(); ++i) {
    if (player == Player::kA) {
      if (b[i] == 0.0) continue;
      for (int w : g.a_winners(i)) payoff[w] += b[i];
    } else {
      if (a[i] == 0.0) continue;
      for (int w : g.b_winners(i)) payoff[w] += a[i];
    }
  }
  return payoff;
}

}  // namespace

std::string_view PlayerName(Player p) { return p == Player::kA ? "A" : "B"; }

RegretReport CeRegret(const WinLoseGame& game, const CorrelatedDistribution& mu) {
  CheckSize(game, mu.num_actions());
  return Worse(SwapRegret(game, mu, Player::kA), SwapRegret(game, mu, Player::kB));
}

RegretReport RuleCeRegret(const WinLoseGame& game,
                          const CorrelatedDistribution& mu) {
  CheckSize(game, mu.num_actions());
  return Worse(RuleRegret(game, mu, Player::kA), RuleRegret(game, mu, Player::kB));
}

RegretReport CceRegret(const WinLoseGame& game, const CorrelatedDistribution& mu) {
  CheckSize(game, mu.num_actions());
  return Worse(CoarseRegret(game, mu, Player::kA),
               CoarseRegret(game, mu, Player::kB));
}

RegretReport NeRegret(const WinLoseGame& game, const MixedStrategy& a,
                      const MixedStrategy& b) {
  CheckSize(game, a.size());
  CheckSize(game, b.size());
  RegretReport worst;
  for (Player player : {Player::kA, Player::kB}) {
    const auto payoff = PurePayoffs(game, a, b, player);
    const MixedStrategy& own = player == Player::kA ? a : b;
    double follow = 0.0;
    for (int i = 0; i < game.num_actions(); ++i) follow += own[i] * payoff[i];
    RegretReport r = ConstantRegret(payoff, follow, player);
    worst = player == Player::kA ? r : Worse(worst, r);
  }
  return worst;
}

RegretReport WsneRegret(const WinLoseGame& game, const MixedStrategy& a,
                        const MixedStrategy& b) {
  CheckSize(game, a.size());
  CheckSize(game, b.size());
  RegretReport worst;
  for (Player player : {Player::kA, Player::kB}) {
    const auto payoff = PurePayoffs(game, a, b, player);
    const MixedStrategy& own = player == Player::kA ? a : b;
    int best = 0;
    for (int w = 1; w < game.num_actions(); ++w) {
      if (payoff[w] > payoff[best]) best = w;
    }
    RegretReport r{.player = player};
    for (int u : own.Support()) {
      const double gain = payoff[best] - payoff[u];
      if (gain > r.value) {
        r.value = gain;
        r.witness = SwapWitness{u, best};
      }
    }
    worst = player == Player::kA ? r : Worse(worst, r);
  }
  return worst;
}

RegretReport BayesianNeRegret(const BayesianTwoCycleGame& game,
                              const std::vector<Profile>& profiles) {
  if (static_cast<int>(profiles.size()) != game.num_types()) {
    throw InvalidInput("expected " + std::to_string(game.num_types()) +
                       " profiles, got " + std::to_string(profiles.size()));
  }
  RegretReport worst;
  for (int t = 1; t <= game.num_types(); ++t) {
    const Profile& p = profiles[t - 1];
    RegretReport r = NeRegret(WinLoseGame(game.sub_game(t)), p.a, p.b);
    r.type = t;
    worst = t == 1 ? r : Worse(worst, r);
  }
  return worst;
}

RegretReport CeRegret(const TwoCycleGame& game, const CorrelatedDistribution& mu) {
  return CeRegret(WinLoseGame(game), mu);
}
RegretReport RuleCeRegret(const TwoCycleGame& game,
                          const CorrelatedDistribution& mu) {
  return RuleCeRegret(WinLoseGame(game), mu);
}
RegretReport CceRegret(const TwoCycleGame& game,
                       const CorrelatedDistribution& mu) {
  return CceRegret(WinLoseGame(game), mu);
}
RegretReport NeRegret(const TwoCycleGame& game, const MixedStrategy& a,
                      const MixedStrategy& b) {
  return NeRegret(WinLoseGame(game), a, b);
}
RegretReport WsneRegret(const TwoCycleGame& game, const MixedStrategy& a,
                        const MixedStrategy& b) {
  return WsneRegret(WinLoseGame(game), a, b);
}

double EvaluateWitness(const WinLoseGame& g, const CorrelatedDistribution& mu,
                       const RegretReport& report) {
  const bool is_a = report.player == Player::kA;
  // Utility of the deviating player at (u, v) when its own action is
  // replaced by `own`.
  auto util = [&](int u, int v, int own) {
    return is_a ? g.utility_a(own, v) : g.utility_b(u, own);
  };
  auto mine = [&](int u, int v) { return is_a ? u : v; };

  double total = 0.0;
  if (const auto* s = std::get_if<SwapWitness>(&report.witness)) {
    mu.ForEach([&](int u, int v, double p) {
      if (mine(u, v) != s->from) return;
      total += p * (util(u, v, s->to) - util(u, v, s->from));
    });
  } else if (const auto* c = std::get_if<ConstantWitness>(&report.witness)) {
    mu.ForEach([&](int u, int v, double p) {
      total += p * (util(u, v, c->to) - util(u, v, mine(u, v)));
    });
  } else if (const auto* r = std::get_if<RuleWitness>(&report.witness)) {
    mu.ForEach([&](int u, int v, double p) {
      const int own = mine(u, v);
      total += p * (util(u, v, r->rule[own]) - util(u, v, own));
    });
  }
  return total;
}

double EvaluateWitness(const WinLoseGame& g, const MixedStrategy& a,
                       const MixedStrategy& b, const RegretReport& report) {
  const bool is_a = report.player == Player::kA;
  const int n = g.num_actions();
  // Expected utility of playing `own` against the opponent's strategy.
  auto against = [&](int own) {
    double total = 0.0;
    for (int other = 0; other < n; ++other) {
      total += is_a ? b[other] * g.utility_a(own, other)
                    : a[other] * g.utility_b(other, own);
    }
    return total;
  };
  const MixedStrategy& self = is_a ? a : b;

  if (const auto* s = std::get_if<SwapWitness>(&report.witness)) {
    return against(s->to) - against(s->from);
  }
  if (const auto* c = std::get_if<ConstantWitness>(&report.witness)) {
    double follow = 0.0;
    for (int own = 0; own < n; ++own) follow += self[own] * against(own);
    return against(c->to) - follow;
  }
  return 0.0;
}

CorrelatedDistribution UniformCorrelated(const TwoCycleGame& game) {
  return CorrelatedDistribution::Uniform(game.num_actions());
}

}  // namespace twocycle
