#ifndef TWOCYCLE_TESTS_ORACLE_H_
#define TWOCYCLE_TESTS_ORACLE_H_

// Brute-force reference implementations. Straight from the definitions;
// nothing here calls into the library's fast paths, and the 2-cycle game is
// rebuilt from the edge rules on its own.

#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Row-major N x N tables, entry [u * N + v].
struct DenseWinLoseGame {
  int N = 0;
  std::vector<int> ua;
  std::vector<int> ub;

  int A(int u, int v) const { return ua[u * N + v]; }
  int B(int u, int v) const { return ub[u * N + v]; }
};

// The 2-cycle game on vertices (i,z), index 4(i-1) + {0:"0", 1:"1",
// 2:"01", 3:"11"}, from two bit strings.
DenseWinLoseGame TwoCycleFromStrings(const std::string& x, const std::string& y);

// mu is a row-major N x N table.
double DenseCeRegret(const DenseWinLoseGame& g, const std::vector<double>& mu);

// Every one of the N^N switching rules per player. N <= 6.
double ExhaustiveRuleRegret(const DenseWinLoseGame& g, const std::vector<double>& mu);

// Every pair where both players are best-responding.
std::vector<std::pair<int, int>> EnumeratePureNash(const DenseWinLoseGame& g);

// Plain Nash regret of a product profile.
double DenseNeRegret(const DenseWinLoseGame& g, const std::vector<double>& a,
                     const std::vector<double>& b);

// Bayesian regret with a general prior phi[t_a * T + t_b]. game_a[t] holds
// A's utilities for A-type t and game_b[t] B's utilities for B-type t.
double DefinitionEvalBayesian(const std::vector<double>& phi,
                              const std::vector<DenseWinLoseGame>& game_a,
                              const std::vector<DenseWinLoseGame>& game_b,
                              const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b);

// Uniform prior on the diagonal of [T] x [T].
std::vector<double> DiagonalPrior(int T);

}  // namespace oracle

#endif  // TWOCYCLE_TESTS_ORACLE_H_
