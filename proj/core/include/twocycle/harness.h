#ifndef TWOCYCLE_HARNESS_H_
#define TWOCYCLE_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twocycle/equilibria.h"
#include "twocycle/game.h"
#include "twocycle/recovery.h"

// Glue between generators, verifiers and protocols. Has both strings in
// hand, so it plays referee: it measures the regret on the full game and
// hands each protocol only the party views.
namespace twocycle {

enum class EquilibriumKind { kCorrelated, kNash, kWellSupported };
std::string_view KindName(EquilibriumKind k);
std::optional<EquilibriumKind> ParseKind(std::string_view name);

// Which generator supplies the equilibrium.
//   point      point mass on the pure equilibrium (every kind)
//   perturbed  correlated: mix with uniform at eta = 1/(80N);
//              nash: mix with random strategies at eta = 1/(40N^2)
//   noisy      correlated: mix with a random distribution at
//              eta = 1/(30N^3)
//   cycle      nash, wsne: exact equilibrium on a cycle of out_B . out_A
enum class Family { kPoint, kPerturbed, kNoisy, kCycle };
std::string_view FamilyName(Family f);
std::optional<Family> ParseFamily(std::string_view name);
Family DefaultFamily(EquilibriumKind kind);
// The mixing weight listed above for `family`, 0 when it has none.
double DefaultEta(EquilibriumKind kind, Family family, int num_actions);
// Throws InvalidInput for combinations that do not produce an equilibrium
// of the kind (e.g. wsne + perturbed).
void CheckFamily(EquilibriumKind kind, Family family);

struct EndToEndResult {
  int disputed_index = 0;  // recovered i*
  RecoveredPair recovery;
  RegretReport regret;     // measured on the full game
  double epsilon_limit = 0.0;
  int bit_bound = 0;
  double eta = 0.0;
};

// Generates an equilibrium of `kind`, measures its regret, runs the
// matching protocol and reads i* off B's output (i*, 0). Throws
// InvalidInput when (x, y) has no single disputed index. `eta` overrides
// the mixing weight of the perturbed and noisy families.
EndToEndResult EndToEndDisjointness(const BitVector& x, const BitVector& y,
                                    EquilibriumKind kind, Family family,
                                    std::uint64_t seed,
                                    std::optional<double> eta = std::nullopt);

// One row of a sweep. Schema version 1.
struct RunRecord {
  static constexpr int kSchemaVersion = 1;
  int n = 0;
  std::uint64_t seed = 0;
  std::string kind;
  std::string family;
  int num_types = 0;  // Bayesian runs only
  int expected_index = 0;
  int recovered_index = 0;
  int expected_type = 0;
  int recovered_type = 0;
  double regret = 0.0;
  double epsilon_limit = 0.0;
  int bits = 0;
  int bit_bound = 0;
  bool correct = false;
  double eta = 0.0;    // mixing weight; 0 for families without one
  std::string error;  // empty on success
  double wall_ms = 0.0;
};

// Instance from GenInstance({n, seed}), then EndToEndDisjointness with the
// same seed. Protocol errors are recorded, not thrown.
RunRecord RunTrial(EquilibriumKind kind, Family family, int n, std::uint64_t seed,
                   std::optional<double> eta = std::nullopt);

// Bayesian instance from GenBayesianInstance({n, T, seed}), exact per-type
// equilibria, RecoverBayesian.
RunRecord RunBayesianTrial(int n, int num_types, std::uint64_t seed);

}  // namespace twocycle

#endif  // TWOCYCLE_HARNESS_H_
