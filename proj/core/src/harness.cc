#include "twocycle/harness.h"

#include <chrono>
#include <exception>

#include "twocycle/errors.h"
#include "twocycle/generators.h"

namespace twocycle {
namespace {

double Sq(double v) { return v * v; }

int BitBound(EquilibriumKind kind, int n) {
  return (kind == EquilibriumKind::kCorrelated ? 3 : 1) + CeilLog2(n);
}

}  // namespace

double DefaultEta(EquilibriumKind kind, Family family, int num_actions) {
  const double big_n = num_actions;
  if (family == Family::kNoisy) return 1.0 / (30.0 * big_n * Sq(big_n));
  if (family != Family::kPerturbed) return 0.0;
  return kind == EquilibriumKind::kCorrelated ? 1.0 / (80.0 * big_n)
                                              : 1.0 / (40.0 * Sq(big_n));
}

std::string_view KindName(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::kCorrelated:
      return "correlated";
    case EquilibriumKind::kNash:
      return "nash";
    case EquilibriumKind::kWellSupported:
      return "wsne";
  }
  return "?";
}

std::optional<EquilibriumKind> ParseKind(std::string_view name) {
  if (name == "correlated" || name == "ce") return EquilibriumKind::kCorrelated;
  if (name == "nash" || name == "ne") return EquilibriumKind::kNash;
  if (name == "wsne") return EquilibriumKind::kWellSupported;
  return std::nullopt;
}

std::string_view FamilyName(Family f) {
  switch (f) {
    case Family::kPoint:
      return "point";
    case Family::kPerturbed:
      return "perturbed";
    case Family::kNoisy:
      return "noisy";
    case Family::kCycle:
      return "cycle";
  }
  return "?";
}

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "point") return Family::kPoint;
  if (name == "perturbed") return Family::kPerturbed;
  if (name == "noisy") return Family::kNoisy;
  if (name == "cycle") return Family::kCycle;
  return std::nullopt;
}

Family DefaultFamily(EquilibriumKind kind) {
  return kind == EquilibriumKind::kWellSupported ? Family::kCycle
                                                 : Family::kPerturbed;
}

void CheckFamily(EquilibriumKind kind, Family family) {
  bool ok = family == Family::kPoint;
  switch (kind) {
    case EquilibriumKind::kCorrelated:
      ok = ok || family == Family::kPerturbed || family == Family::kNoisy;
      break;
    case EquilibriumKind::kNash:
      ok = ok || family == Family::kPerturbed || family == Family::kCycle;
      break;
    case EquilibriumKind::kWellSupported:
      ok = ok || family == Family::kCycle;
      break;
  }
  if (!ok) {
    throw InvalidInput("family \"" + std::string(FamilyName(family)) +
                       "\" does not generate " + std::string(KindName(kind)) +
                       " equilibria");
  }
}

EndToEndResult EndToEndDisjointness(const BitVector& x, const BitVector& y,
                                    EquilibriumKind kind, Family family,
                                    std::uint64_t seed,
                                    std::optional<double> eta) {
  CheckFamily(kind, family);
  const TwoCycleGame game(x, y, /*promise=*/true);
  const PartyViewA view_a(x);
  const PartyViewB view_b(y);
  Rng rng(seed);

  EndToEndResult out;
  out.eta = eta.value_or(DefaultEta(kind, family, game.num_actions()));
  out.bit_bound = BitBound(kind, game.n());
  if (kind == EquilibriumKind::kCorrelated) {
    const CorrelatedDistribution mu =
        family == Family::kPoint       ? PureNashPointMass(game)
        : family == Family::kPerturbed ? PerturbedCe(game, out.eta)
                                       : NoisyCe(game, out.eta, rng);
    out.regret = CeRegret(game, mu);
    out.epsilon_limit = CorrelatedEpsilonLimit(game.num_actions());
    out.recovery = RecoverFromCorrelated(view_a, view_b, mu, out.regret.value);
  } else {
    const Profile profile =
        family == Family::kPoint       ? PureNashProfile(game)
        : family == Family::kPerturbed ? PerturbedNashProfile(game, out.eta, rng)
                                       : RandomCycleProfile(game, rng);
    if (kind == EquilibriumKind::kNash) {
      out.regret = NeRegret(game, profile.a, profile.b);
      out.epsilon_limit = NashEpsilonLimit(game.num_actions());
      out.recovery = RecoverFromNash(view_a, profile.a, view_b, profile.b,
                                     out.regret.value);
    } else {
      out.regret = WsneRegret(game, profile.a, profile.b);
      out.epsilon_limit = WellSupportedEpsilonLimit(game.num_actions());
      out.recovery = RecoverFromWellSupported(view_a, profile.a, view_b,
                                              profile.b, out.regret.value);
    }
  }
  out.disputed_index = out.recovery.v.layer;
  return out;
}

RunRecord RunTrial(EquilibriumKind kind, Family family, int n,
                   std::uint64_t seed, std::optional<double> eta) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.n = n;
  r.seed = seed;
  r.kind = KindName(kind);
  r.family = FamilyName(family);
  try {
    InstanceOptions options;
    options.n = n;
    options.seed = seed;
    const Instance inst = GenInstance(options);
    const TwoCycleGame game(inst.x, inst.y, true);
    const KeyVertices key = game.key_vertices();
    r.expected_index = key.disputed_index;
    const auto res =
        EndToEndDisjointness(inst.x, inst.y, kind, family, seed, eta);
    r.eta = res.eta;
    r.recovered_index = res.disputed_index;
    r.regret = res.regret.value;
    r.epsilon_limit = res.epsilon_limit;
    r.bits = res.recovery.transcript.total_bits();
    r.bit_bound = res.bit_bound;
    r.correct = res.recovery.u == key.u_star && res.recovery.v == key.v0_star &&
                r.bits <= r.bit_bound;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

RunRecord RunBayesianTrial(int n, int num_types, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.n = n;
  r.seed = seed;
  r.kind = "bayesian";
  r.family = "exact";
  r.num_types = num_types;
  try {
    BayesianInstanceOptions options;
    options.n = n;
    options.num_types = num_types;
    options.seed = seed;
    const Instance inst = GenBayesianInstance(options);
    const BayesianTwoCycleGame game(inst.x, inst.y, num_types);
    Rng rng(seed);
    const auto profiles = BayesianEquilibriumProfiles(game, rng);
    r.regret = BayesianNeRegret(game, profiles).value;
    r.epsilon_limit = NashEpsilonLimit(game.num_actions());
    r.bit_bound = CeilLog2(num_types) + 1 + CeilLog2(n);

    const auto views_a = SplitViewsA(inst.x, num_types);
    const auto views_b = SplitViewsB(inst.y, num_types);
    std::vector<MixedStrategy> a_by_type;
    std::vector<MixedStrategy> b_by_type;
    for (const auto& p : profiles) {
      a_by_type.push_back(p.a);
      b_by_type.push_back(p.b);
    }
    const auto res = RecoverBayesian(views_a, a_by_type, views_b, b_by_type, r.regret);
    const KeyVertices key = game.sub_game(game.equilibrium_type()).key_vertices();
    r.expected_type = game.equilibrium_type();
    r.recovered_type = res.type;
    r.expected_index = key.disputed_index;
    r.recovered_index = res.v.layer;
    r.bits = res.transcript.total_bits();
    r.correct = res.type == r.expected_type && res.u == key.u_star &&
                res.v == key.v0_star && r.bits <= r.bit_bound;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace twocycle
