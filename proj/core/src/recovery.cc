#include "twocycle/recovery.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

void CheckLength(std::span<const double> values, int num_actions,
                 const char* what) {
  if (static_cast<int>(values.size()) != num_actions) {
    throw PreconditionViolation(std::string(what) + " has " +
                                std::to_string(values.size()) +
                                " entries, expected " +
                                std::to_string(num_actions));
  }
}

void CheckViews(const PartyViewA& view_a, const PartyViewB& view_b) {
  if (view_a.n() != view_b.n()) {
    throw PreconditionViolation("party views disagree on n");
  }
}

// B: the first layer i, ascending, with y_i = 0 and b(i,1) > threshold.
std::optional<int> FindUnguardedLayer(const PartyViewB& view,
                                      std::span<const double> b,
                                      double threshold) {
  for (int i = 1; i <= view.n(); ++i) {
    if (view.y()[i] == 0 && b[Vertex{i, Tag::kOne}.index()] > threshold) {
      return i;
    }
  }
  return std::nullopt;
}

// Either side: the first vertex, ascending in linear index, above threshold.
std::optional<Vertex> FirstAbove(std::span<const double> values,
                                 double threshold) {
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] > threshold) return Vertex::FromIndex(k);
  }
  return std::nullopt;
}

// A's answer to a received layer i: (i-1, x_{i-1}).
Vertex PredecessorOf(const PartyViewA& view, int layer) {
  const int prev = WrapIndex(layer - 1, view.n());
  return {prev, BitTag(view.x()[prev])};
}

double Total(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

void CheckEpsilon(double epsilon, double limit, const char* task) {
  if (!(epsilon >= 0.0 && epsilon <= limit)) {
    throw PreconditionViolation(std::string(task) + " recovery needs 0 <= eps <= " +
                                std::to_string(limit) + ", got " +
                                std::to_string(epsilon));
  }
}

}  // namespace

std::vector<PartyViewA> SplitViewsA(const BitVector& x, int num_types) {
  if (num_types < 1 || x.size() % num_types != 0) {
    throw InvalidInput("string length not divisible by T");
  }
  const int n = x.size() / num_types;
  std::vector<PartyViewA> views;
  for (int t = 0; t < num_types; ++t) views.emplace_back(x.slice(t * n + 1, n));
  return views;
}

std::vector<PartyViewB> SplitViewsB(const BitVector& y, int num_types) {
  if (num_types < 1 || y.size() % num_types != 0) {
    throw InvalidInput("string length not divisible by T");
  }
  const int n = y.size() / num_types;
  std::vector<PartyViewB> views;
  for (int t = 0; t < num_types; ++t) views.emplace_back(y.slice(t * n + 1, n));
  return views;
}

double CorrelatedEpsilonLimit(int num_actions) {
  const double n = num_actions;
  return 1.0 / (24.0 * n * n * n);
}

double NashEpsilonLimit(int num_actions) {
  const double n = num_actions;
  return 1.0 / (16.0 * n * n);
}

double WellSupportedEpsilonLimit(int num_actions) { return 1.0 / num_actions; }

std::vector<double> ExtractScalarsA(const PartyViewA& view,
                                    const CorrelatedDistribution& mu) {
  if (mu.num_actions() != view.num_actions()) {
    throw InvalidInput("distribution size does not match the game");
  }
  std::vector<double> a(view.num_actions());
  for (int v = 0; v < view.num_actions(); ++v) {
    a[v] = mu.RowMass(v, view.graph().in(v));
  }
  return a;
}

std::vector<double> ExtractScalarsB(const PartyViewB& view,
                                    const CorrelatedDistribution& mu) {
  if (mu.num_actions() != view.num_actions()) {
    throw InvalidInput("distribution size does not match the game");
  }
  std::vector<double> b(view.num_actions());
  for (int v = 0; v < view.num_actions(); ++v) {
    b[v] = mu.ColumnMass(view.graph().in(v), v);
  }
  return b;
}

ScalarPair ExtractSlowlyIncreasing(const PartyViewA& view_a,
                                   const PartyViewB& view_b,
                                   const CorrelatedDistribution& mu) {
  CheckViews(view_a, view_b);
  return {ExtractScalarsA(view_a, mu), ExtractScalarsB(view_b, mu)};
}

bool IsSlowlyIncreasing(const TwoCycleGame& game, const ScalarPair& pair,
                        double delta) {
  const auto& ga = game.graph_a();
  const auto& gb = game.graph_b();
  for (int u = 0; u < game.num_actions(); ++u) {
    double b_in = 0.0;
    for (int w : ga.in(u)) b_in += pair.b[w];
    if (pair.a[u] > b_in + delta) return false;
    double a_in = 0.0;
    for (int w : gb.in(u)) a_in += pair.a[w];
    if (pair.b[u] > a_in + delta) return false;
  }
  return true;
}

bool IsNonIncreasing(const TwoCycleGame& game, std::span<const double> a,
                     std::span<const double> b, double p) {
  const auto& ga = game.graph_a();
  const auto& gb = game.graph_b();
  for (int u = 0; u < game.num_actions(); ++u) {
    double b_max = 0.0;
    for (int w : ga.in(u)) b_max = std::max(b_max, b[w]);
    if (b_max <= p && a[u] > p) return false;
    double a_max = 0.0;
    for (int w : gb.in(u)) a_max = std::max(a_max, a[w]);
    if (a_max <= p && b[u] > p) return false;
  }
  return true;
}

bool IsConcentrated(std::span<const double> f, const Vertex& u, double p) {
  for (int v = 0; v < static_cast<int>(f.size()); ++v) {
    if (v != u.index() && f[v] > p) return false;
  }
  return true;
}

RecoveredPair RunSlowlyIncreasingProtocol(const PartyViewA& view_a,
                                          std::span<const double> a,
                                          const PartyViewB& view_b,
                                          std::span<const double> b,
                                          double delta) {
  CheckViews(view_a, view_b);
  CheckLength(a, view_a.num_actions(), "a");
  CheckLength(b, view_b.num_actions(), "b");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw PreconditionViolation("delta must lie in [0, 1]");
  }
  const int n = view_a.n();
  const double num_actions = view_a.num_actions();
  const double high = 5.0 * num_actions * delta;
  Transcript transcript;

  // Round 1 (B).
  if (auto i = FindUnguardedLayer(view_b, b, 3.0 * delta)) {
    transcript.Append(Message::LayerIndex(Sender::kB, *i, n));
    return {PredecessorOf(view_a, *i), Vertex{*i, Tag::kZero},
            std::move(transcript)};
  }
  transcript.Append(Message::Flag(Sender::kB));

  // Round 2 (A).
  if (delta < Total(a) / (5.0 * num_actions * num_actions)) {
    const auto u = FirstAbove(a, high);
    if (!u) throw ProtocolFailure("round 2: no vertex with a(u) > 5N delta");
    transcript.Append(Message::LayerIndex(Sender::kA, u->layer, n));
    return {*u, Vertex{WrapIndex(u->layer + 1, n), Tag::kZero},
            std::move(transcript)};
  }
  transcript.Append(Message::Flag(Sender::kA));

  // Round 3 (B).
  const auto v = FirstAbove(b, high);
  if (!v) throw ProtocolFailure("round 3: no vertex with b(v) > 5N delta");
  transcript.Append(Message::LayerIndex(Sender::kB, v->layer, n));
  return {PredecessorOf(view_a, v->layer), *v, std::move(transcript)};
}

RecoveredPair RunNonIncreasingProtocol(const PartyViewA& view_a,
                                       std::span<const double> a,
                                       const PartyViewB& view_b,
                                       std::span<const double> b, double p) {
  CheckViews(view_a, view_b);
  CheckLength(a, view_a.num_actions(), "a");
  CheckLength(b, view_b.num_actions(), "b");
  if (!(p >= 0.0 && p < 1.0 / view_a.num_actions())) {
    throw PreconditionViolation("p must lie in [0, 1/N)");
  }
  const int n = view_a.n();
  Transcript transcript;

  if (auto i = FindUnguardedLayer(view_b, b, p)) {
    transcript.Append(Message::LayerIndex(Sender::kB, *i, n));
    return {PredecessorOf(view_a, *i), Vertex{*i, Tag::kZero},
            std::move(transcript)};
  }
  transcript.Append(Message::Flag(Sender::kB));

  const auto u = FirstAbove(a, p);
  if (!u) throw ProtocolFailure("A has no vertex with a(u) > p");
  const auto v = FirstAbove(b, p);
  if (!v) throw ProtocolFailure("B has no vertex with b(v) > p");
  return {*u, *v, std::move(transcript)};
}

RecoveredPair RecoverFromCorrelated(const PartyViewA& view_a,
                                    const PartyViewB& view_b,
                                    const CorrelatedDistribution& mu,
                                    double epsilon) {
  CheckViews(view_a, view_b);
  CheckEpsilon(epsilon, CorrelatedEpsilonLimit(view_a.num_actions()),
               "correlated");
  const auto a = ExtractScalarsA(view_a, mu);
  const auto b = ExtractScalarsB(view_b, mu);
  return RunSlowlyIncreasingProtocol(view_a, a, view_b, b, 3.0 * epsilon);
}

RecoveredPair RecoverFromNash(const PartyViewA& view_a, const MixedStrategy& a,
                              const PartyViewB& view_b, const MixedStrategy& b,
                              double epsilon) {
  CheckViews(view_a, view_b);
  CheckEpsilon(epsilon, NashEpsilonLimit(view_a.num_actions()), "Nash");
  const double p = 1.0 / (4.0 * view_a.num_actions());
  return RunNonIncreasingProtocol(view_a, a.values(), view_b, b.values(), p);
}

RecoveredPair RecoverFromWellSupported(const PartyViewA& view_a,
                                       const MixedStrategy& a,
                                       const PartyViewB& view_b,
                                       const MixedStrategy& b, double epsilon) {
  CheckViews(view_a, view_b);
  CheckEpsilon(epsilon, WellSupportedEpsilonLimit(view_a.num_actions()),
               "well-supported Nash");
  // p = 0 with "> 0" meaning "in the support".
  return RunNonIncreasingProtocol(view_a, a.values(), view_b, b.values(),
                                  kSupportTolerance);
}

bool ClassifySubgame(const PartyViewB& view, std::span<const double> b,
                     double p) {
  CheckLength(b, view.num_actions(), "b");
  if (FindUnguardedLayer(view, b, p)) return true;
  std::optional<Vertex> only;
  for (int k = 0; k < view.num_actions(); ++k) {
    if (b[k] <= p) continue;
    if (only) return false;
    only = Vertex::FromIndex(k);
  }
  return only && only->tag == Tag::kZero && view.y()[only->layer] == 0;
}

BayesianRecovery RecoverBayesian(std::span<const PartyViewA> views_a,
                                 std::span<const MixedStrategy> a_by_type,
                                 std::span<const PartyViewB> views_b,
                                 std::span<const MixedStrategy> b_by_type,
                                 double epsilon) {
  const int num_types = static_cast<int>(views_a.size());
  if (num_types < 2) throw PreconditionViolation("Bayesian recovery needs T >= 2");
  if (views_b.size() != views_a.size() || a_by_type.size() != views_a.size() ||
      b_by_type.size() != views_a.size()) {
    throw PreconditionViolation("one view and one strategy per type required");
  }
  const int num_actions = views_a.front().num_actions();
  if (num_actions < 12) throw PreconditionViolation("Bayesian recovery needs N >= 12");
  CheckEpsilon(epsilon, NashEpsilonLimit(num_actions), "Bayesian Nash");
  const double p = 1.0 / (4.0 * num_actions);

  // B, locally: which sub-game has a pure equilibrium.
  std::vector<int> candidates;
  for (int t = 1; t <= num_types; ++t) {
    if (ClassifySubgame(views_b[t - 1], b_by_type[t - 1].values(), p)) {
      candidates.push_back(t);
    }
  }
  if (candidates.size() != 1) {
    throw ProtocolFailure("expected exactly one sub-game with a pure equilibrium, "
                          "classified " + std::to_string(candidates.size()));
  }
  const int type = candidates.front();

  BayesianRecovery result;
  result.type = type;
  result.transcript.Append(Message::TypeIndex(Sender::kB, type, num_types));
  RecoveredPair inner = RunNonIncreasingProtocol(
      views_a[type - 1], a_by_type[type - 1].values(), views_b[type - 1],
      b_by_type[type - 1].values(), p);
  result.u = inner.u;
  result.v = inner.v;
  result.transcript.Extend(inner.transcript);
  return result;
}

}  // namespace twocycle
