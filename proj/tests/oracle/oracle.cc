#include "oracle.h"

#include <algorithm>
#include <stdexcept>

namespace oracle {

DenseWinLoseGame TwoCycleFromStrings(const std::string& x, const std::string& y) {
  const int n = static_cast<int>(x.size());
  const int N = 4 * n;
  auto id = [n](int i, int z) {
    i = ((i - 1) % n + n) % n + 1;
    return 4 * (i - 1) + z;
  };
  auto bit = [n](const std::string& s, int i) {
    i = ((i - 1) % n + n) % n + 1;
    return s[i - 1] == '1';
  };
  enum { Z0 = 0, Z1 = 1, Z01 = 2, Z11 = 3 };

  DenseWinLoseGame g{N, std::vector<int>(N * N, 0), std::vector<int>(N * N, 0)};
  // Edge (p, q) of G_A: A wins at (u = q, v = p).
  auto edge_a = [&](int p, int q) { g.ua[q * N + p] = 1; };
  // Edge (p, q) of G_B: B wins at (u = p, v = q).
  auto edge_b = [&](int p, int q) { g.ub[p * N + q] = 1; };

  for (int i = 1; i <= n; ++i) {
    edge_a(id(i, Z1), id(i + 1, bit(x, i + 1) ? Z11 : Z0));
    if (!bit(x, i)) {
      edge_a(id(i, Z0), id(i + 1, bit(x, i + 1) ? Z01 : Z0));
    } else {
      edge_a(id(i, Z0), id(i - 1, bit(x, i - 1) ? Z1 : Z0));
    }
    edge_a(id(i, Z01), id(i, Z1));
    edge_a(id(i, Z11), id(i, Z1));

    edge_b(id(i, Z1), id(i + 1, bit(y, i + 1) ? Z11 : Z0));
    edge_b(id(i, Z0), id(i + 1, bit(y, i + 1) ? Z01 : Z0));
    edge_b(id(i, Z01), id(i, Z1));
    edge_b(id(i, Z11), id(i, Z1));
  }
  return g;
}

double DenseCeRegret(const DenseWinLoseGame& g, const std::vector<double>& mu) {
  const int N = g.N;
  double best = 0.0;
  for (int u = 0; u < N; ++u) {
    for (int u2 = 0; u2 < N; ++u2) {
      double s = 0.0;
      for (int v = 0; v < N; ++v) s += mu[u * N + v] * (g.A(u2, v) - g.A(u, v));
      best = std::max(best, s);
    }
  }
  for (int v = 0; v < N; ++v) {
    for (int v2 = 0; v2 < N; ++v2) {
      double s = 0.0;
      for (int u = 0; u < N; ++u) s += mu[u * N + v] * (g.B(u, v2) - g.B(u, v));
      best = std::max(best, s);
    }
  }
  return best;
}

double ExhaustiveRuleRegret(const DenseWinLoseGame& g, const std::vector<double>& mu) {
  const int N = g.N;
  if (N > 6) throw std::invalid_argument("exhaustive rule enumeration needs N <= 6");
  long long rules = 1;
  for (int k = 0; k < N; ++k) rules *= N;
  double best = 0.0;
  std::vector<int> f(N);
  for (long long code = 0; code < rules; ++code) {
    long long c = code;
    for (int k = 0; k < N; ++k) {
      f[k] = static_cast<int>(c % N);
      c /= N;
    }
    double sa = 0.0;
    double sb = 0.0;
    for (int u = 0; u < N; ++u) {
      for (int v = 0; v < N; ++v) {
        sa += mu[u * N + v] * (g.A(f[u], v) - g.A(u, v));
        sb += mu[u * N + v] * (g.B(u, f[v]) - g.B(u, v));
      }
    }
    best = std::max({best, sa, sb});
  }
  return best;
}

std::vector<std::pair<int, int>> EnumeratePureNash(const DenseWinLoseGame& g) {
  const int N = g.N;
  // Best payoff A can get against each v, and B against each u.
  std::vector<int> best_a(N, 0);
  std::vector<int> best_b(N, 0);
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      best_a[v] = std::max(best_a[v], g.A(u, v));
      best_b[u] = std::max(best_b[u], g.B(u, v));
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      if (g.A(u, v) == best_a[v] && g.B(u, v) == best_b[u]) out.emplace_back(u, v);
    }
  }
  return out;
}

double DenseNeRegret(const DenseWinLoseGame& g, const std::vector<double>& a,
                     const std::vector<double>& b) {
  const int N = g.N;
  double pay_a = 0.0;
  double pay_b = 0.0;
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      pay_a += a[u] * b[v] * g.A(u, v);
      pay_b += a[u] * b[v] * g.B(u, v);
    }
  }
  double best = 0.0;
  for (int w = 0; w < N; ++w) {
    double dev_a = 0.0;
    double dev_b = 0.0;
    for (int k = 0; k < N; ++k) {
      dev_a += b[k] * g.A(w, k);
      dev_b += a[k] * g.B(k, w);
    }
    best = std::max({best, dev_a - pay_a, dev_b - pay_b});
  }
  return best;
}

double DefinitionEvalBayesian(const std::vector<double>& phi,
                              const std::vector<DenseWinLoseGame>& game_a,
                              const std::vector<DenseWinLoseGame>& game_b,
                              const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b) {
  const int T = static_cast<int>(game_a.size());
  if (static_cast<int>(phi.size()) != T * T || static_cast<int>(game_b.size()) != T ||
      static_cast<int>(a.size()) != T || static_cast<int>(b.size()) != T) {
    throw std::invalid_argument("shape mismatch");
  }
  const int N = game_a.front().N;
  double best = 0.0;

  // Condition 1: every A-type, every pure deviation (mixed deviations are
  // averages of pure ones).
  for (int ta = 0; ta < T; ++ta) {
    double marginal = 0.0;
    for (int tb = 0; tb < T; ++tb) marginal += phi[ta * T + tb];
    if (marginal <= 0.0) continue;
    const auto& g = game_a[ta];
    double follow = 0.0;
    std::vector<double> deviate(N, 0.0);
    for (int tb = 0; tb < T; ++tb) {
      const double w = phi[ta * T + tb] / marginal;
      if (w == 0.0) continue;
      for (int u = 0; u < N; ++u) {
        for (int v = 0; v < N; ++v) {
          follow += w * a[ta][u] * b[tb][v] * g.A(u, v);
          deviate[u] += w * b[tb][v] * g.A(u, v);
        }
      }
    }
    for (int u = 0; u < N; ++u) best = std::max(best, deviate[u] - follow);
  }

  // Condition 2, mirrored.
  for (int tb = 0; tb < T; ++tb) {
    double marginal = 0.0;
    for (int ta = 0; ta < T; ++ta) marginal += phi[ta * T + tb];
    if (marginal <= 0.0) continue;
    const auto& g = game_b[tb];
    double follow = 0.0;
    std::vector<double> deviate(N, 0.0);
    for (int ta = 0; ta < T; ++ta) {
      const double w = phi[ta * T + tb] / marginal;
      if (w == 0.0) continue;
      for (int u = 0; u < N; ++u) {
        for (int v = 0; v < N; ++v) {
          follow += w * a[ta][u] * b[tb][v] * g.B(u, v);
          deviate[v] += w * a[ta][u] * g.B(u, v);
        }
      }
    }
    for (int v = 0; v < N; ++v) best = std::max(best, deviate[v] - follow);
  }
  return best;
}

std::vector<double> DiagonalPrior(int T) {
  std::vector<double> phi(T * T, 0.0);
  for (int t = 0; t < T; ++t) phi[t * T + t] = 1.0 / T;
  return phi;
}

}  // namespace oracle
