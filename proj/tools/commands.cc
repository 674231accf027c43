#include "commands.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include <spdlog/spdlog.h>

#include "io.h"
#include "twocycle/errors.h"
#include "twocycle/generators.h"
#include "twocycle/harness.h"
#include "twocycle/recovery.h"

namespace twocycle::cli {
namespace {

int RequireN(const Options& o) {
  if (!o.n) throw InvalidInput("--n is required here");
  return *o.n;
}

Json BayesianGameToJson(const BayesianTwoCycleGame& g) {
  return Json{{"type", "bayesian_game"},
              {"T", g.num_types()},
              {"n", g.n()},
              {"x", g.x().str()},
              {"y", g.y().str()}};
}

BayesianTwoCycleGame BayesianGameFromJson(const Json& j) {
  if (!IsBayesianGame(j)) throw InvalidInput("expected a bayesian_game file");
  try {
    const int types = j.at("T").get<int>();
    const int n = j.at("n").get<int>();
    BitVector x(j.at("x").get<std::string>());
    BitVector y(j.at("y").get<std::string>());
    if (x.size() != n * types) throw InvalidInput("string length is not T * n");
    return BayesianTwoCycleGame(x, y, types);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad bayesian_game: ") + e.what());
  }
}

TwoCycleGame LoadGame(const std::string& path) {
  return GameFromJson(ReadJsonFile(path));
}

// --game when given, else a fresh instance from --n/--seed. `zero_prefix`
// applies only to the generated case.
TwoCycleGame GameFromFlags(const Options& o, std::optional<int> zero_prefix) {
  if (!o.game_path.empty()) return LoadGame(o.game_path);
  InstanceOptions opts;
  opts.n = RequireN(o);
  opts.seed = o.seed;
  opts.zero_prefix_length = zero_prefix ? zero_prefix : o.zero_prefix;
  opts.disputed_position = o.disputed;
  const Instance inst = GenInstance(opts);
  return TwoCycleGame(inst.x, inst.y, true);
}

Json KeyVerticesToJson(const KeyVertices& k) {
  return Json{{"i_star", k.disputed_index},
              {"u_star", VertexToJson(k.u_star)},
              {"v0_star", VertexToJson(k.v0_star)},
              {"v1_star", VertexToJson(k.v1_star)},
              {"v01_star", VertexToJson(k.v01_star)},
              {"v11_star", VertexToJson(k.v11_star)}};
}

Json RecordToJson(const RunRecord& r, bool timing) {
  Json j{{"schema", RunRecord::kSchemaVersion},
         {"n", r.n},
         {"T", r.num_types},
         {"seed", r.seed},
         {"kind", r.kind},
         {"family", r.family},
         {"eta", r.eta},
         {"expected_index", r.expected_index},
         {"recovered_index", r.recovered_index},
         {"expected_type", r.expected_type},
         {"recovered_type", r.recovered_type},
         {"regret", r.regret},
         {"epsilon_limit", r.epsilon_limit},
         {"bits", r.bits},
         {"bit_bound", r.bit_bound},
         {"correct", r.correct},
         {"error", r.error}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RecordsToCsv(const std::vector<RunRecord>& rows, bool timing) {
  std::ostringstream out;
  out << "schema,n,T,seed,kind,family,eta,expected_index,recovered_index,"
         "expected_type,recovered_type,regret,epsilon_limit,bits,bit_bound,"
         "correct,error";
  if (timing) out << ",wall_ms";
  out << "\n";
  for (const auto& r : rows) {
    out << RunRecord::kSchemaVersion << ',' << r.n << ',' << r.num_types << ','
        << r.seed << ',' << r.kind << ',' << r.family << ','
        << FormatDouble(r.eta) << ',' << r.expected_index << ','
        << r.recovered_index << ',' << r.expected_type << ','
        << r.recovered_type << ',' << FormatDouble(r.regret) << ','
        << FormatDouble(r.epsilon_limit) << ',' << r.bits << ','
        << r.bit_bound << ',' << (r.correct ? 1 : 0) << ','
        << CsvQuote(r.error);
    if (timing) out << ',' << FormatDouble(r.wall_ms);
    out << "\n";
  }
  return out.str();
}

EquilibriumKind RequireKind(const std::string& name) {
  const auto k = ParseKind(name);
  if (!k) throw InvalidInput("unknown --kind \"" + name + "\"");
  return *k;
}

Family FamilyOrDefault(const std::string& name, EquilibriumKind kind) {
  if (name.empty()) return DefaultFamily(kind);
  const auto f = ParseFamily(name);
  if (!f) throw InvalidInput("unknown --family \"" + name + "\"");
  CheckFamily(kind, *f);
  return *f;
}

Json MeasuredJson(const char* kind, const RegretReport& r) {
  Json j{{"kind", kind}};
  j["regret"] = RegretToJson(r);
  return j;
}

}  // namespace

int RunGen(const Options& o) {
  const int n = RequireN(o);
  if (o.num_types) {
    if (o.disputed || o.zero_prefix) {
      throw InvalidInput("--disputed/--zero-prefix do not apply with --T");
    }
    BayesianInstanceOptions opts;
    opts.n = n;
    opts.num_types = *o.num_types;
    opts.seed = o.seed;
    const Instance inst = GenBayesianInstance(opts);
    WriteJson(BayesianGameToJson(BayesianTwoCycleGame(inst.x, inst.y, opts.num_types)),
              o.out_path);
    return kOk;
  }
  const TwoCycleGame game = GameFromFlags(o, std::nullopt);
  spdlog::info("generated n={} disputed={}", game.n(), game.disputed().front());
  WriteJson(GameToJson(game), o.out_path);
  return kOk;
}

int RunBuild(const Options& o) {
  const TwoCycleGame game = LoadGame(o.game_path);
  int max_in_a = 0;
  int max_in_b = 0;
  Json back_edges = Json::array();
  for (int v = 0; v < game.num_actions(); ++v) {
    max_in_a = std::max(max_in_a, game.graph_a().in_degree(v));
    max_in_b = std::max(max_in_b, game.graph_b().in_degree(v));
    if (game.graph_a().is_back_edge(v)) {
      back_edges.push_back(Json::array(
          {VertexToJson(Vertex::FromIndex(v)),
           VertexToJson(Vertex::FromIndex(game.graph_a().out(v)))}));
    }
  }
  Json cycles = Json::array();
  for (const auto& [u, v] : game.two_cycles()) {
    cycles.push_back(Json::array({VertexToJson(u), VertexToJson(v)}));
  }
  Json report{{"game", GameToJson(game)},
              {"N", game.num_actions()},
              {"disputed", game.disputed()},
              {"max_in_degree_a", max_in_a},
              {"max_in_degree_b", max_in_b},
              {"back_edges", std::move(back_edges)},
              {"two_cycles", std::move(cycles)}};
  if (game.has_disputed_index()) {
    report["key_vertices"] = KeyVerticesToJson(game.key_vertices());
  }
  WriteJson(report, o.out_path);
  return kOk;
}

int RunTrivial(const Options& o) {
  const std::string& kind = o.kind;
  Json out;
  if (kind == "ace") {
    const int n = o.game_path.empty() ? RequireN(o) : 0;
    const TwoCycleGame game = GameFromFlags(o, n / 2 + 3);
    const auto res = TrivialAce(game.x(), game.y());
    const double dn = game.n();
    out = CorrelatedToJson(res.mu);
    out["meta"] = MeasuredJson("ce", CeRegret(game, res.mu));
    out["meta"]["alpha"] = res.alpha;
    out["meta"]["bound"] = 64.0 * res.alpha / (dn * dn * dn);
  } else if (kind == "ane") {
    const int n = o.game_path.empty() ? RequireN(o) : 0;
    const TwoCycleGame game = GameFromFlags(o, n / 2 + 2);
    const Profile p = TrivialAne(game.x(), game.y());
    const double big_n = game.num_actions();
    out = ProfileToJson(p);
    out["meta"] = MeasuredJson("ne", NeRegret(game, p.a, p.b));
    out["meta"]["bound"] = 64.0 / (big_n * big_n);
  } else if (kind == "wsne") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    const auto res = TrivialWsne(game.x(), game.y());
    out = ProfileToJson(res.profile);
    out["meta"] = MeasuredJson("wsne", WsneRegret(game, res.profile.a, res.profile.b));
    out["meta"]["scale_a"] = res.scale_a;
    out["meta"]["scale_b"] = res.scale_b;
    out["meta"]["bound"] = 12.0 / game.num_actions();
  } else if (kind == "cce") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    const auto mu = ExactCce(game);
    out = CorrelatedToJson(mu);
    out["meta"] = MeasuredJson("cce", CceRegret(game, mu));
  } else if (kind == "uniform") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    const auto mu = UniformCorrelated(game);
    out = CorrelatedToJson(mu);
    out["meta"] = MeasuredJson("ce", CeRegret(game, mu));
  } else if (kind == "perturbed") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    const double eta = o.eta.value_or(DefaultEta(
        EquilibriumKind::kCorrelated, Family::kPerturbed, game.num_actions()));
    const auto mu = PerturbedCe(game, eta);
    out = CorrelatedToJson(mu);
    out["meta"] = MeasuredJson("ce", CeRegret(game, mu));
    out["meta"]["eta"] = eta;
  } else if (kind == "pure-ce") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    out = CorrelatedToJson(PureNashPointMass(game));
  } else if (kind == "pure-ne") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    out = ProfileToJson(PureNashProfile(game));
  } else if (kind == "cycle") {
    const TwoCycleGame game = GameFromFlags(o, std::nullopt);
    Rng rng(o.seed);
    const Profile p = RandomCycleProfile(game, rng);
    out = ProfileToJson(p);
    out["meta"] = MeasuredJson("wsne", WsneRegret(game, p.a, p.b));
  } else {
    throw InvalidInput("unknown trivial --kind \"" + kind + "\"");
  }
  WriteJson(out, o.out_path);
  return kOk;
}

int RunVerify(const Options& o) {
  const double epsilon = o.epsilon.value_or(0.0);
  const Json game_json = ReadJsonFile(o.game_path);
  const Json dist = ReadJsonFile(o.dist_path);
  RegretReport report;
  if (o.kind == "bne") {
    const auto game = BayesianGameFromJson(game_json);
    const auto profiles =
        BayesianProfilesFromJson(dist, game.n(), game.num_types());
    report = BayesianNeRegret(game, profiles);
  } else {
    const TwoCycleGame game = GameFromJson(game_json);
    const std::string type = dist.value("type", "");
    if (o.kind == "ne" || o.kind == "wsne") {
      const Profile p = ProfileFromJson(dist, game.n());
      report = o.kind == "ne" ? NeRegret(game, p.a, p.b) : WsneRegret(game, p.a, p.b);
    } else if (o.kind == "ce" || o.kind == "rce" || o.kind == "cce") {
      // A product profile is a correlated distribution too.
      const CorrelatedDistribution mu =
          type == "profile"
              ? [&] {
                  const Profile p = ProfileFromJson(dist, game.n());
                  return ProductDistribution(p.a, p.b);
                }()
              : CorrelatedFromJson(dist, game.n());
      report = o.kind == "ce"    ? CeRegret(game, mu)
               : o.kind == "rce" ? RuleCeRegret(game, mu)
                                 : CceRegret(game, mu);
    } else {
      throw InvalidInput("unknown verify --kind \"" + o.kind + "\"");
    }
  }
  const bool ok = report.value <= epsilon;
  spdlog::info("{} regret {} vs epsilon {}", o.kind, report.value, epsilon);
  WriteJson(Json{{"kind", o.kind},
                 {"epsilon", epsilon},
                 {"regret", RegretToJson(report)},
                 {"verified", ok}},
            o.out_path);
  return ok ? kOk : kFailed;
}

int RunRecover(const Options& o) {
  const EquilibriumKind kind = RequireKind(o.kind);

  if (o.game_path.empty()) {
    // Generated run; the same row `sweep` would print for this seed.
    const Family family = FamilyOrDefault(o.family, kind);
    InstanceOptions opts;
    opts.n = RequireN(o);
    opts.seed = o.seed;
    const Instance inst = GenInstance(opts);
    const TwoCycleGame game(inst.x, inst.y, true);
    const KeyVertices key = game.key_vertices();
    const auto res = EndToEndDisjointness(inst.x, inst.y, kind, family, o.seed, o.eta);
    const bool correct = res.recovery.u == key.u_star && res.recovery.v == key.v0_star &&
                         res.recovery.transcript.total_bits() <= res.bit_bound;
    const RunRecord record = RunTrial(kind, family, opts.n, o.seed, o.eta);
    WriteJson(Json{{"game", GameToJson(game)},
                   {"kind", KindName(kind)},
                   {"family", FamilyName(family)},
                   {"regret", RegretToJson(res.regret)},
                   {"epsilon_limit", res.epsilon_limit},
                   {"result", RecoveryToJson(res.recovery)},
                   {"i_star", res.disputed_index},
                   {"expected", KeyVerticesToJson(key)},
                   {"correct", correct},
                   {"record", RecordToJson(record, false)}},
              o.out_path);
    return correct ? kOk : kFailed;
  }

  if (o.dist_path.empty()) throw InvalidInput("--dist is required with --game");
  const TwoCycleGame game = LoadGame(o.game_path);
  const Json dist = ReadJsonFile(o.dist_path);
  const PartyViewA view_a(game.x());
  const PartyViewB view_b(game.y());
  RegretReport measured;
  RecoveredPair result;
  if (kind == EquilibriumKind::kCorrelated) {
    const auto mu = CorrelatedFromJson(dist, game.n());
    measured = CeRegret(game, mu);
    result = RecoverFromCorrelated(view_a, view_b, mu, o.epsilon.value_or(measured.value));
  } else {
    const Profile p = ProfileFromJson(dist, game.n());
    if (kind == EquilibriumKind::kNash) {
      measured = NeRegret(game, p.a, p.b);
      result = RecoverFromNash(view_a, p.a, view_b, p.b, o.epsilon.value_or(measured.value));
    } else {
      measured = WsneRegret(game, p.a, p.b);
      result = RecoverFromWellSupported(view_a, p.a, view_b, p.b,
                                        o.epsilon.value_or(measured.value));
    }
  }
  Json out{{"game", GameToJson(game)},
           {"kind", KindName(kind)},
           {"regret", RegretToJson(measured)},
           {"result", RecoveryToJson(result)},
           {"i_star", result.v.layer}};
  bool correct = true;
  if (game.has_disputed_index()) {
    const KeyVertices key = game.key_vertices();
    correct = result.u == key.u_star && result.v == key.v0_star;
    out["expected"] = KeyVerticesToJson(key);
  }
  out["correct"] = correct;
  WriteJson(out, o.out_path);
  return correct ? kOk : kFailed;
}

int RunBayesian(const Options& o) {
  std::optional<BayesianTwoCycleGame> game;
  std::vector<Profile> profiles;
  if (!o.game_path.empty()) {
    game.emplace(BayesianGameFromJson(ReadJsonFile(o.game_path)));
    if (!o.dist_path.empty()) {
      profiles = BayesianProfilesFromJson(ReadJsonFile(o.dist_path), game->n(),
                                          game->num_types());
    }
  } else {
    if (!o.num_types) throw InvalidInput("--T is required without --game");
    BayesianInstanceOptions opts;
    opts.n = RequireN(o);
    opts.num_types = *o.num_types;
    opts.seed = o.seed;
    const Instance inst = GenBayesianInstance(opts);
    game.emplace(inst.x, inst.y, opts.num_types);
  }
  if (profiles.empty()) {
    Rng rng(o.seed);
    profiles = BayesianEquilibriumProfiles(*game, rng);
  }
  const RegretReport measured = BayesianNeRegret(*game, profiles);
  const int types = game->num_types();
  const auto views_a = SplitViewsA(game->x(), types);
  const auto views_b = SplitViewsB(game->y(), types);
  std::vector<MixedStrategy> a_by_type;
  std::vector<MixedStrategy> b_by_type;
  for (const auto& p : profiles) {
    a_by_type.push_back(p.a);
    b_by_type.push_back(p.b);
  }
  const auto result = RecoverBayesian(views_a, a_by_type, views_b, b_by_type,
                                      o.epsilon.value_or(measured.value));
  const int eq = game->equilibrium_type();
  const KeyVertices key = game->sub_game(eq).key_vertices();
  const bool correct =
      result.type == eq && result.u == key.u_star && result.v == key.v0_star;
  Json expected = KeyVerticesToJson(key);
  expected["type"] = eq;
  WriteJson(Json{{"game", BayesianGameToJson(*game)},
                 {"regret", RegretToJson(measured)},
                 {"result", RecoveryToJson(result)},
                 {"expected", std::move(expected)},
                 {"correct", correct}},
            o.out_path);
  return correct ? kOk : kFailed;
}

int RunSweep(const Options& o) {
  const auto [lo, hi] = ParseRange(o.n_range);
  const bool bayesian = o.kind == "bayesian";
  std::optional<EquilibriumKind> kind;
  Family family = Family::kPoint;
  if (!bayesian) {
    kind = RequireKind(o.kind);
    family = FamilyOrDefault(o.family, *kind);
  } else if (!o.num_types) {
    throw InvalidInput("--T is required for a bayesian sweep");
  }
  std::vector<RunRecord> rows;
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(trial);
    for (int n = lo; n <= hi; ++n) {
      rows.push_back(bayesian ? RunBayesianTrial(n, *o.num_types, seed)
                              : RunTrial(*kind, family, n, seed, o.eta));
      spdlog::debug("n={} seed={} correct={}", n, seed, rows.back().correct);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.seed, a.n) < std::tie(b.seed, b.n);
  });
  const auto failures = std::count_if(rows.begin(), rows.end(),
                                      [](const RunRecord& r) { return !r.correct; });
  spdlog::info("{} runs, {} failed", rows.size(), failures);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) list.push_back(RecordToJson(r, o.timing));
    WriteJson(list, o.out_path);
  } else {
    WriteText(RecordsToCsv(rows, o.timing), o.out_path);
  }
  return failures == 0 ? kOk : kFailed;
}

}  // namespace twocycle::cli
