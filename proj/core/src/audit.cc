#include "twocycle/audit.h"

#include <algorithm>
#include <numeric>

namespace twocycle {
namespace {

double SumOver(std::span<const double> f, const std::vector<Vertex>& vs) {
  double s = 0.0;
  for (const auto& v : vs) s += f[v.index()];
  return s;
}

double MaxOver(std::span<const double> f, const std::vector<Vertex>& vs) {
  double m = 0.0;
  for (const auto& v : vs) m = std::max(m, f[v.index()]);
  return m;
}

double MaxOverIndices(std::span<const double> f, const std::vector<int>& ks) {
  double m = 0.0;
  for (int k : ks) m = std::max(m, f[k]);
  return m;
}

double Total(std::span<const double> f) {
  return std::accumulate(f.begin(), f.end(), 0.0);
}

// Layers i whose successor is not the disputed index.
bool AwayFromDispute(int i, int n, int i_star) {
  return WrapIndex(i + 1, n) != i_star;
}

}  // namespace

SlowlyIncreasingAudit AuditSlowlyIncreasing(const TwoCycleGame& game,
                                            const ScalarPair& pair,
                                            double delta) {
  const KeyVertices key = game.key_vertices();
  const int n = game.n();
  const double big_n = game.num_actions();
  const auto& a = pair.a;
  const auto& b = pair.b;
  SlowlyIncreasingAudit audit;

  audit.definition = IsSlowlyIncreasing(game, pair, delta);

  audit.forward_bound = true;
  audit.midway_bound = true;
  for (int i = 1; i <= n; ++i) {
    if (!AwayFromDispute(i, n, key.disputed_index)) continue;
    for (Tag z : {Tag::kZero, Tag::kOne}) {
      const int u = Vertex{i, z}.index();
      double fwd = 0.0;
      for (int w : game.graph_a().forward_in(u)) fwd += b[w];
      if (a[u] > fwd + 2.0 * delta) audit.forward_bound = false;
    }
    const auto layer = Layer(i);
    const auto midway = MidwayLayer(i);
    if (SumOver(a, layer) + SumOver(b, layer) >
        SumOver(a, midway) + SumOver(b, midway) + 3.0 * delta) {
      audit.midway_bound = false;
    }
  }

  audit.undisputed_bound = true;
  for (int i = 1; i <= n; ++i) {
    if (i == key.disputed_index || game.y()[i] != 0) continue;
    if (b[Vertex{i, Tag::kOne}.index()] > 3.0 * delta) {
      audit.undisputed_bound = false;
    }
  }

  audit.concentration_precondition =
      delta < std::max(Total(a), Total(b)) / (5.0 * big_n * big_n);

  const double high = 5.0 * big_n * delta;
  audit.concentration_dichotomy =
      b[key.v1_star.index()] > 3.0 * delta ||
      (IsConcentrated(a, key.u_star, high) && IsConcentrated(b, key.v0_star, high));
  return audit;
}

NonIncreasingAudit AuditNonIncreasing(const TwoCycleGame& game,
                                      std::span<const double> a,
                                      std::span<const double> b, double p) {
  const KeyVertices key = game.key_vertices();
  const int n = game.n();
  const auto& ga = game.graph_a();
  NonIncreasingAudit audit;

  audit.definition = IsNonIncreasing(game, a, b, p);

  audit.back_edge_bound = true;
  for (int v = 0; v < game.num_actions(); ++v) {
    if (!ga.is_back_edge(v) || v == key.v0_star.index()) continue;
    const int u = ga.out(v);
    if (MaxOverIndices(b, ga.forward_in(u)) <= p && a[u] > p) {
      audit.back_edge_bound = false;
    }
  }

  audit.midway_bound = true;
  for (int i = 1; i <= n; ++i) {
    if (!AwayFromDispute(i, n, key.disputed_index)) continue;
    const auto midway = MidwayLayer(i);
    if (MaxOver(a, midway) <= p && MaxOver(b, midway) <= p) {
      const int one = Vertex{i, Tag::kOne}.index();
      if (a[one] > p || b[one] > p) audit.midway_bound = false;
    }
  }

  audit.undisputed_bound = true;
  for (int i = 1; i <= n; ++i) {
    if (i == key.disputed_index || game.y()[i] != 0) continue;
    if (b[Vertex{i, Tag::kOne}.index()] > p) audit.undisputed_bound = false;
  }

  audit.concentration_precondition = p >= 0.0 && p < 1.0 / game.num_actions();

  audit.concentration_dichotomy =
      b[key.v1_star.index()] > p ||
      (IsConcentrated(a, key.u_star, p) && IsConcentrated(b, key.v0_star, p));
  return audit;
}

}  // namespace twocycle
