#ifndef TWOCYCLE_AUDIT_H_
#define TWOCYCLE_AUDIT_H_

#include <span>

#include "twocycle/game.h"
#include "twocycle/recovery.h"

namespace twocycle {

// Exhaustive per-instance checks of the structural consequences of a
// delta-slowly-increasing pair. Needs both sides of the game, so this is
// harness code, never called from a protocol step.
struct SlowlyIncreasingAudit {
  // The defining inequalities.
  bool definition = false;
  // a(u) <= b(N_A^f(u)) + 2 delta for u = (i,z), z in {0,1}, i+1 != i*.
  bool forward_bound = false;
  // a(L_i) + b(L_i) <= a(L_i^m) + b(L_i^m) + 3 delta for i+1 != i*.
  bool midway_bound = false;
  // Undisputed i with y_i = 0 has b(i,1) <= 3 delta.
  bool undisputed_bound = false;
  // delta < max{a(V), b(V)} / (5 N^2).
  bool concentration_precondition = false;
  // b(v1*) > 3 delta, or a is 5N delta-concentrated on u* and b on v0*.
  bool concentration_dichotomy = false;

  bool all() const {
    return definition && forward_bound && midway_bound && undisputed_bound &&
           concentration_precondition && concentration_dichotomy;
  }
};

SlowlyIncreasingAudit AuditSlowlyIncreasing(const TwoCycleGame& game,
                                            const ScalarPair& pair, double delta);

// Same for a p-non-increasing pair of distributions.
struct NonIncreasingAudit {
  bool definition = false;
  // For every back-edge (v,u) with v != v0*: max_{N_A^f(u)} b <= p implies
  // a(u) <= p.
  bool back_edge_bound = false;
  // For i+1 != i*: a, b <= p on L_i^m implies a(i,1), b(i,1) <= p.
  bool midway_bound = false;
  // Undisputed i with y_i = 0 has b(i,1) <= p.
  bool undisputed_bound = false;
  // p in [0, 1/N).
  bool concentration_precondition = false;
  // b(v1*) > p, or a is p-concentrated on u* and b on v0*.
  bool concentration_dichotomy = false;

  bool all() const {
    return definition && back_edge_bound && midway_bound && undisputed_bound &&
           concentration_precondition && concentration_dichotomy;
  }
};

NonIncreasingAudit AuditNonIncreasing(const TwoCycleGame& game,
                                      std::span<const double> a,
                                      std::span<const double> b, double p);

}  // namespace twocycle

#endif  // TWOCYCLE_AUDIT_H_
