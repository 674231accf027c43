#ifndef TWOCYCLE_RECOVERY_H_
#define TWOCYCLE_RECOVERY_H_

#include <span>
#include <vector>

#include "twocycle/bits.h"
#include "twocycle/distributions.h"
#include "twocycle/equilibria.h"
#include "twocycle/graph.h"
#include "twocycle/transcript.h"
#include "twocycle/vertex.h"

namespace twocycle {

// What player A holds: its string and its own graph. Built from x alone;
// there is no path from here to y or to G_B.
class PartyViewA {
 public:
  explicit PartyViewA(BitVector x) : x_(std::move(x)), graph_(BuildGraphA(x_)) {}
  const BitVector& x() const { return x_; }
  const PlayerGraph& graph() const { return graph_; }
  int n() const { return x_.size(); }
  int num_actions() const { return graph_.num_vertices(); }

 private:
  BitVector x_;
  PlayerGraph graph_;
};

// Mirror of PartyViewA for player B.
class PartyViewB {
 public:
  explicit PartyViewB(BitVector y) : y_(std::move(y)), graph_(BuildGraphB(y_)) {}
  const BitVector& y() const { return y_; }
  const PlayerGraph& graph() const { return graph_; }
  int n() const { return y_.size(); }
  int num_actions() const { return graph_.num_vertices(); }

 private:
  BitVector y_;
  PlayerGraph graph_;
};

// Per-type views of the Bayesian game, one block of the string each.
std::vector<PartyViewA> SplitViewsA(const BitVector& x, int num_types);
std::vector<PartyViewB> SplitViewsB(const BitVector& y, int num_types);

// Vertex-indexed values in [0, 1]; not necessarily distributions.
struct ScalarPair {
  std::vector<double> a;
  std::vector<double> b;
};

struct RecoveredPair {
  Vertex u;  // A's output
  Vertex v;  // B's output
  Transcript transcript;
};

struct BayesianRecovery {
  int type = 0;  // 1-based
  Vertex u;
  Vertex v;
  Transcript transcript;
};

// Thresholds on the shared approximation parameter.
// 1 / (24 N^3): correlated recovery.
double CorrelatedEpsilonLimit(int num_actions);
// 1 / (16 N^2): Nash and Bayesian Nash recovery.
double NashEpsilonLimit(int num_actions);
// 1 / N: well-supported Nash recovery.
double WellSupportedEpsilonLimit(int num_actions);

// Scalar extraction -------------------------------------------------------

// a(v) = mu(v, N_A(v)), computed by A from its own graph.
std::vector<double> ExtractScalarsA(const PartyViewA& view,
                                    const CorrelatedDistribution& mu);
// b(v) = mu(N_B(v), v), computed by B from its own graph.
std::vector<double> ExtractScalarsB(const PartyViewB& view,
                                    const CorrelatedDistribution& mu);
// Both halves. Each side only touches its own view. Throws InvalidInput
// when mu does not match the game size (mass is validated by mu itself).
ScalarPair ExtractSlowlyIncreasing(const PartyViewA& view_a,
                                   const PartyViewB& view_b,
                                   const CorrelatedDistribution& mu);

// Predicates --------------------------------------------------------------

// For all u: a(u) <= b(N_A(u)) + delta and b(u) <= a(N_B(u)) + delta.
bool IsSlowlyIncreasing(const TwoCycleGame& game, const ScalarPair& pair,
                        double delta);
// For all u: max_{N_A(u)} b <= p implies a(u) <= p, and symmetrically.
// Empty maxima are 0.
bool IsNonIncreasing(const TwoCycleGame& game, std::span<const double> a,
                     std::span<const double> b, double p);
// f(v) <= p for every v != u.
bool IsConcentrated(std::span<const double> f, const Vertex& u, double p);

// Protocols ---------------------------------------------------------------

// Recovery from a delta-slowly-increasing pair. Three rounds:
//   1. B looks for a layer i with y_i = 0 and b(i,1) > 3 delta and sends it
//      (A outputs (i-1, x_{i-1}), B outputs (i,0)), else a flag.
//   2. If delta < a(V) / (5 N^2), A sends the layer of the first u with
//      a(u) > 5 N delta (A outputs u, B outputs (i+1,0)), else a flag.
//   3. B sends the layer of the first v with b(v) > 5 N delta (A outputs
//      (i-1, x_{i-1}), B outputs v).
// At most 3 + ceil(log2 n) bits. Throws ProtocolFailure when the reached
// round finds nothing above its threshold.
RecoveredPair RunSlowlyIncreasingProtocol(const PartyViewA& view_a,
                                          std::span<const double> a,
                                          const PartyViewB& view_b,
                                          std::span<const double> b,
                                          double delta);

// Recovery from a p-non-increasing pair, p in [0, 1/N). B looks for a
// layer i with y_i = 0 and b(i,1) > p and sends it, else a flag after which
// each side outputs its first vertex above p. At most 1 + ceil(log2 n)
// bits. Throws PreconditionViolation for p outside [0, 1/N) and
// ProtocolFailure when a side has nothing above p.
RecoveredPair RunNonIncreasingProtocol(const PartyViewA& view_a,
                                       std::span<const double> a,
                                       const PartyViewB& view_b,
                                       std::span<const double> b, double p);

// Extraction followed by the slowly-increasing protocol at delta = 3 eps.
// eps is the shared approximation value; the caller vouches that
// CeRegret(mu) <= eps. Throws PreconditionViolation unless
// 0 <= eps <= 1 / (24 N^3).
RecoveredPair RecoverFromCorrelated(const PartyViewA& view_a,
                                    const PartyViewB& view_b,
                                    const CorrelatedDistribution& mu,
                                    double epsilon);

// Non-increasing protocol at p = 1 / (4N). Requires eps <= 1 / (16 N^2).
RecoveredPair RecoverFromNash(const PartyViewA& view_a, const MixedStrategy& a,
                              const PartyViewB& view_b, const MixedStrategy& b,
                              double epsilon);

// Non-increasing protocol at p = 0, with "> 0" read as "in the support"
// (> kSupportTolerance). Requires eps <= 1 / N.
RecoveredPair RecoverFromWellSupported(const PartyViewA& view_a,
                                       const MixedStrategy& a,
                                       const PartyViewB& view_b,
                                       const MixedStrategy& b, double epsilon);

// B's local test of whether its sub-game has a pure Nash equilibrium, given
// its strategy from an approximate Bayesian Nash equilibrium: either some
// layer j with y_j = 0 has b(j,1) > p, or exactly one vertex is above p and
// it is (j,0) with y_j = 0.
bool ClassifySubgame(const PartyViewB& view, std::span<const double> b, double p);

// B classifies every type, sends the unique equilibrium type in
// ceil(log2 T) bits, then both run the non-increasing protocol on that
// sub-game at p = 1/(4N). At most ceil(log2 T) + 1 + ceil(log2 n) bits.
// Throws PreconditionViolation for eps > 1/(16 N^2), T < 2, N < 12 or
// mismatched sizes, and ProtocolFailure when zero or several types
// classify as having an equilibrium.
//
// A's per-type strategies go only to A's steps and B's only to B's.
BayesianRecovery RecoverBayesian(std::span<const PartyViewA> views_a,
                                 std::span<const MixedStrategy> a_by_type,
                                 std::span<const PartyViewB> views_b,
                                 std::span<const MixedStrategy> b_by_type,
                                 double epsilon);

}  // namespace twocycle

#endif  // TWOCYCLE_RECOVERY_H_
