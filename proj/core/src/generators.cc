#include "twocycle/generators.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

// Off the disputed index x_i <= y_i.
constexpr std::array<std::pair<int, int>, 3> kUndisputedPairs = {
    std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}};

// Fills bits [offset, offset + n) of x and y. `disputed` is a 1-based layer
// of this block or 0 for none; layers <= zero_prefix are forced to 0.
void FillBlock(Rng& rng, int n, int zero_prefix, int disputed, int offset,
               std::vector<std::uint8_t>& x, std::vector<std::uint8_t>& y) {
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 1; i <= n; ++i) {
    int xi = 0;
    int yi = 0;
    if (i == disputed) {
      xi = 1;
    } else if (i > zero_prefix) {
      std::tie(xi, yi) = kUndisputedPairs[pick(rng)];
    }
    x[offset + i - 1] = static_cast<std::uint8_t>(xi);
    y[offset + i - 1] = static_cast<std::uint8_t>(yi);
  }
}

void CheckZeroPrefix(const BitVector& x, const BitVector& y, int length,
                     const char* what) {
  if (x.size() != y.size()) throw InvalidInput("string lengths differ");
  if (length > x.size()) {
    throw InvalidInput(std::string(what) + ": n too small for the zero prefix");
  }
  for (int i = 1; i <= length; ++i) {
    if (x[i] != 0 || y[i] != 0) {
      throw InvalidInput(std::string(what) + ": needs x_i = y_i = 0 for i <= " +
                         std::to_string(length));
    }
  }
}

std::vector<double> RandomWeights(int count, Rng& rng) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(count);
  for (auto& v : w) v = draw(rng) + 1e-3;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= total;
  return w;
}

MixedStrategy Blend(const MixedStrategy& base, const MixedStrategy& noise,
                    double eta) {
  std::vector<double> p(base.size());
  for (int k = 0; k < base.size(); ++k) {
    p[k] = (1.0 - eta) * base[k] + eta * noise[k];
  }
  return MixedStrategy(std::move(p));
}

void CheckEta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidInput("eta must lie in [0, 1]");
}

KeyVertices PureKeys(const TwoCycleGame& game) {
  if (!game.has_disputed_index()) {
    throw InvalidInput("game has no pure Nash equilibrium");
  }
  return game.key_vertices();
}

}  // namespace

Instance GenInstance(const InstanceOptions& options) {
  const int n = options.n;
  if (n < kMinStringLength) throw InvalidInput("n must be at least 3");
  const int zero_prefix = options.zero_prefix_length.value_or(0);
  if (zero_prefix < 0 || zero_prefix >= n) {
    throw InvalidInput("zero prefix leaves no room for the disputed index");
  }
  Rng rng(options.seed);
  int disputed = 0;
  if (options.disputed_position) {
    disputed = *options.disputed_position;
    if (disputed < 1 || disputed > n) {
      throw InvalidInput("disputed position outside [1, n]");
    }
    if (disputed <= zero_prefix) {
      throw InvalidInput("disputed position inside the zero prefix");
    }
  } else {
    disputed = std::uniform_int_distribution<int>(zero_prefix + 1, n)(rng);
  }
  std::vector<std::uint8_t> x(n);
  std::vector<std::uint8_t> y(n);
  FillBlock(rng, n, zero_prefix, disputed, 0, x, y);
  return {BitVector(std::move(x)), BitVector(std::move(y))};
}

Instance GenBayesianInstance(const BayesianInstanceOptions& options) {
  const int n = options.n;
  const int types = options.num_types;
  if (n < kMinStringLength) throw InvalidInput("n must be at least 3");
  if (types < 2) throw InvalidInput("T must be at least 2");
  Rng rng(options.seed);
  int eq_type = 0;
  if (options.equilibrium_type) {
    eq_type = *options.equilibrium_type;
    if (eq_type < 1 || eq_type > types) {
      throw InvalidInput("equilibrium type outside [1, T]");
    }
  } else {
    eq_type = std::uniform_int_distribution<int>(1, types)(rng);
  }
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n) * types);
  std::vector<std::uint8_t> y(x.size());
  for (int t = 1; t <= types; ++t) {
    const int disputed =
        t == eq_type ? std::uniform_int_distribution<int>(1, n)(rng) : 0;
    FillBlock(rng, n, 0, disputed, (t - 1) * n, x, y);
  }
  return {BitVector(std::move(x)), BitVector(std::move(y))};
}

MixedStrategy RandomMixed(int num_actions, int support, Rng& rng) {
  support = std::clamp(support, 1, num_actions);
  std::vector<int> actions(num_actions);
  std::iota(actions.begin(), actions.end(), 0);
  std::shuffle(actions.begin(), actions.end(), rng);
  const auto w = RandomWeights(support, rng);
  std::vector<double> p(num_actions, 0.0);
  for (int k = 0; k < support; ++k) p[actions[k]] = w[k];
  return MixedStrategy(std::move(p));
}

CorrelatedDistribution RandomCorrelated(int num_actions, int support, Rng& rng) {
  support = std::max(support, 1);
  std::uniform_int_distribution<int> pick(0, num_actions - 1);
  const auto w = RandomWeights(support, rng);
  std::vector<CorrelatedEntry> entries;
  entries.reserve(support);
  for (int k = 0; k < support; ++k) {
    const int u = pick(rng);
    const int v = pick(rng);
    entries.push_back({u, v, w[k]});
  }
  return CorrelatedDistribution::FromEntries(num_actions, std::move(entries));
}

CorrelatedDistribution PureNashPointMass(const TwoCycleGame& game) {
  const auto key = PureKeys(game);
  return CorrelatedDistribution::PointMass(
      game.num_actions(), key.u_star.index(), key.v0_star.index());
}

CorrelatedDistribution PerturbedCe(const TwoCycleGame& game, double eta) {
  CheckEta(eta);
  const auto key = PureKeys(game);
  const int num_actions = game.num_actions();
  const double cell = eta / (static_cast<double>(num_actions) * num_actions);
  std::vector<double> table(static_cast<std::size_t>(num_actions) * num_actions,
                            cell);
  table[static_cast<std::size_t>(key.u_star.index()) * num_actions +
        key.v0_star.index()] += 1.0 - eta;
  return CorrelatedDistribution::FromDense(num_actions, table);
}

CorrelatedDistribution NoisyCe(const TwoCycleGame& game, double eta, Rng& rng) {
  CheckEta(eta);
  const auto key = PureKeys(game);
  const int num_actions = game.num_actions();
  const auto noise = RandomCorrelated(num_actions, num_actions, rng);
  std::vector<CorrelatedEntry> entries = noise.Entries();
  for (auto& e : entries) e.p *= eta;
  entries.push_back({key.u_star.index(), key.v0_star.index(), 1.0 - eta});
  return CorrelatedDistribution::FromEntries(num_actions, std::move(entries));
}

Profile PureNashProfile(const TwoCycleGame& game) {
  const auto key = PureKeys(game);
  return {MixedStrategy::PointMass(game.num_actions(), key.u_star.index()),
          MixedStrategy::PointMass(game.num_actions(), key.v0_star.index())};
}

Profile PerturbedNashProfile(const TwoCycleGame& game, double eta, Rng& rng) {
  CheckEta(eta);
  const Profile pure = PureNashProfile(game);
  const int num_actions = game.num_actions();
  const auto noise_a = RandomMixed(num_actions, num_actions, rng);
  const auto noise_b = RandomMixed(num_actions, num_actions, rng);
  return {Blend(pure.a, noise_a, eta), Blend(pure.b, noise_b, eta)};
}

std::vector<Vertex> CycleFrom(const TwoCycleGame& game, const Vertex& start) {
  const auto& ga = game.graph_a();
  const auto& gb = game.graph_b();
  std::vector<int> seen_at(game.num_actions(), -1);
  std::vector<int> walk;
  int v = start.index();
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = gb.out(ga.out(v));
  }
  std::vector<Vertex> cycle;
  for (std::size_t k = seen_at[v]; k < walk.size(); ++k) {
    cycle.push_back(Vertex::FromIndex(walk[k]));
  }
  return cycle;
}

Profile CycleProfile(const TwoCycleGame& game, const Vertex& start) {
  const auto cycle = CycleFrom(game, start);
  const int num_actions = game.num_actions();
  const double w = 1.0 / static_cast<double>(cycle.size());
  std::vector<double> a(num_actions, 0.0);
  std::vector<double> b(num_actions, 0.0);
  for (const auto& v : cycle) {
    a[game.graph_a().out(v.index())] += w;
    b[v.index()] += w;
  }
  return {MixedStrategy(std::move(a)), MixedStrategy(std::move(b))};
}

Profile RandomCycleProfile(const TwoCycleGame& game, Rng& rng) {
  const int start =
      std::uniform_int_distribution<int>(0, game.num_actions() - 1)(rng);
  return CycleProfile(game, Vertex::FromIndex(start));
}

std::vector<Profile> BayesianEquilibriumProfiles(const BayesianTwoCycleGame& game,
                                                 Rng& rng) {
  std::vector<Profile> profiles;
  for (int t = 1; t <= game.num_types(); ++t) {
    const auto& sub = game.sub_game(t);
    profiles.push_back(t == game.equilibrium_type() ? PureNashProfile(sub)
                                                    : RandomCycleProfile(sub, rng));
  }
  return profiles;
}

TrivialAceResult TrivialAce(const BitVector& x, const BitVector& y) {
  const int n = x.size();
  if (n % 4 != 0 || n < 16) {
    throw InvalidInput("trivial ACE needs n divisible by 4 and n >= 16");
  }
  CheckZeroPrefix(x, y, n / 2 + 3, "trivial ACE");
  const int q = n / 4;
  const double dn = n;
  const double base = 16.0 / (dn * dn);
  const double step = 64.0 / (dn * dn * dn);

  // Weights in units of alpha.
  auto weight = [&](int i, int j) -> double {
    if (i >= q + 4 && i <= 2 * q + 2 && j >= q + 4 && j <= 2 * q + 2) return base;
    if (i == q + 3 && j >= q + 2 && j <= 2 * q + 2) return base;
    if (j == q + 3 && i >= q + 2 && i <= 2 * q + 2) return base;
    if (i >= 2 && i <= q + 2 && j >= 2 && j <= q + 2 && std::abs(i - j) == 1) {
      return base - step * (q - std::max(i, j) + 3);
    }
    return 0.0;
  };

  double total = 0.0;
  std::vector<std::array<int, 2>> cells;
  std::vector<double> weights;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double w = weight(i, j);
      if (w == 0.0) continue;
      cells.push_back({i, j});
      weights.push_back(w);
      total += w;
    }
  }
  const double alpha = 1.0 / total;
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::logic_error("trivial ACE normalising constant outside (0, 2)");
  }
  std::vector<CorrelatedEntry> entries;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    entries.push_back({Vertex{cells[k][0], Tag::kZero}.index(),
                       Vertex{cells[k][1], Tag::kZero}.index(),
                       alpha * weights[k]});
  }
  return {CorrelatedDistribution::FromEntries(4 * n, std::move(entries)), alpha};
}

Profile TrivialAne(const BitVector& x, const BitVector& y) {
  const int n = x.size();
  if (n % 2 != 0) throw InvalidInput("trivial ANE needs n even");
  CheckZeroPrefix(x, y, n / 2 + 2, "trivial ANE");
  std::vector<double> p(4 * n, 0.0);
  for (int i = 2; i <= n / 2 + 1; ++i) p[Vertex{i, Tag::kZero}.index()] = 2.0 / n;
  return {MixedStrategy(p), MixedStrategy(p)};
}

namespace {

// 1 on (i,0) when s_i = 0; 1 on (i,1) and (i, s_{i-1}1) when s_i = 1.
std::pair<MixedStrategy, double> WsneSide(const BitVector& s) {
  const int n = s.size();
  std::vector<double> p(4 * n, 0.0);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (s[i] == 0) {
      p[Vertex{i, Tag::kZero}.index()] = 1.0;
      ++count;
    } else {
      const Tag second = s.at_wrapped(i - 1) ? Tag::kOneOne : Tag::kZeroOne;
      p[Vertex{i, Tag::kOne}.index()] = 1.0;
      p[Vertex{i, second}.index()] = 1.0;
      count += 2;
    }
  }
  for (auto& v : p) v /= count;
  return {MixedStrategy(std::move(p)), static_cast<double>(n) / count};
}

}  // namespace

TrivialWsneResult TrivialWsne(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw InvalidInput("string lengths differ");
  auto [a, scale_a] = WsneSide(x);
  auto [b, scale_b] = WsneSide(y);
  return {Profile{std::move(a), std::move(b)}, scale_a, scale_b};
}

CorrelatedDistribution ExactCce(const TwoCycleGame& game) {
  const auto& ga = game.graph_a();
  const auto& gb = game.graph_b();
  const int num_actions = game.num_actions();
  auto contains = [](std::span<const int> s, int v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  for (int u1 = 0; u1 < num_actions; ++u1) {
    const int v1 = ga.out(u1);
    for (int u2 = 0; u2 < num_actions; ++u2) {
      const int v2 = gb.out(u2);
      if (contains(ga.in(v1), v2) || contains(gb.in(v2), v1)) continue;
      return CorrelatedDistribution::FromEntries(
          num_actions, {{v1, u1, 0.5}, {u2, v2, 0.5}});
    }
  }
  throw InvalidInput("no edge pair qualifies for the exact CCE");
}

}  // namespace twocycle
