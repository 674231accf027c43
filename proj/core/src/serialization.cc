#include "twocycle/serialization.h"

#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field \"") + key + "\": " + e.what());
  }
}

void ExpectType(const Json& j, const char* type) {
  const auto got = Field<std::string>(j, "type");
  if (got != type) {
    throw InvalidInput("expected type \"" + std::string(type) + "\", got \"" +
                       got + "\"");
  }
}

void ExpectN(const Json& j, int n) {
  const int got = Field<int>(j, "n");
  if (got != n) {
    throw InvalidInput("file is for n = " + std::to_string(got) +
                       ", game has n = " + std::to_string(n));
  }
}

int CheckedIndex(const Json& e, int num_actions) {
  if (!e.is_number_integer()) throw InvalidInput("vertex index must be an integer");
  const int k = e.get<int>();
  if (k < 0 || k >= num_actions) {
    throw InvalidInput("vertex index " + std::to_string(k) + " out of range");
  }
  return k;
}

double CheckedProbability(const Json& e) {
  if (!e.is_number()) throw InvalidInput("probability must be a number");
  return e.get<double>();
}

Json StrategyEntries(const MixedStrategy& s) {
  Json out = Json::array();
  for (int k = 0; k < s.size(); ++k) {
    if (s[k] != 0.0) out.push_back(Json::array({k, s[k]}));
  }
  return out;
}

MixedStrategy StrategyFromEntries(const Json& entries, int n) {
  if (!entries.is_array()) throw InvalidInput("entries must be an array");
  std::vector<double> p(4 * n, 0.0);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidInput("mixed entry must be [index, p]");
    }
    p[CheckedIndex(e[0], 4 * n)] += CheckedProbability(e[1]);
  }
  return MixedStrategy(std::move(p));
}

Json WitnessToJson(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, FollowWitness>) {
          j["kind"] = "follow";
        } else if constexpr (std::is_same_v<T, SwapWitness>) {
          j["kind"] = "swap";
          j["from"] = VertexToJson(Vertex::FromIndex(x.from));
          j["to"] = VertexToJson(Vertex::FromIndex(x.to));
        } else if constexpr (std::is_same_v<T, ConstantWitness>) {
          j["kind"] = "constant";
          j["to"] = VertexToJson(Vertex::FromIndex(x.to));
        } else {
          j["kind"] = "rule";
          // Only the actions the rule moves.
          Json moves = Json::array();
          for (int k = 0; k < static_cast<int>(x.rule.size()); ++k) {
            if (x.rule[k] != k) moves.push_back(Json::array({k, x.rule[k]}));
          }
          j["moves"] = std::move(moves);
        }
        return j;
      },
      w);
}

}  // namespace

Json VertexToJson(const Vertex& v) {
  return Json{{"i", v.layer}, {"z", std::string(TagName(v.tag))}};
}

Vertex VertexFromJson(const Json& j, int n) {
  const int i = Field<int>(j, "i");
  const auto z = ParseTag(Field<std::string>(j, "z"));
  if (i < 1 || i > n) throw InvalidInput("vertex layer out of range");
  if (!z) throw InvalidInput("vertex tag must be one of 0, 1, 01, 11");
  return {i, *z};
}

Json GameToJson(const TwoCycleGame& game) {
  return Json{{"n", game.n()},
              {"x", game.x().str()},
              {"y", game.y().str()},
              {"promise", game.promise()}};
}

TwoCycleGame GameFromJson(const Json& j) {
  const int n = Field<int>(j, "n");
  BitVector x(Field<std::string>(j, "x"));
  BitVector y(Field<std::string>(j, "y"));
  if (x.size() != n || y.size() != n) {
    throw InvalidInput("string length does not match n");
  }
  const bool promise = j.contains("promise") ? Field<bool>(j, "promise") : true;
  return TwoCycleGame(std::move(x), std::move(y), promise);
}

Json MixedToJson(const MixedStrategy& s) {
  return Json{{"type", "mixed"},
              {"n", s.size() / kTagsPerLayer},
              {"entries", StrategyEntries(s)}};
}

MixedStrategy MixedFromJson(const Json& j, int n) {
  ExpectType(j, "mixed");
  ExpectN(j, n);
  return StrategyFromEntries(Field<Json>(j, "entries"), n);
}

Json CorrelatedToJson(const CorrelatedDistribution& mu) {
  Json entries = Json::array();
  mu.ForEach([&](int u, int v, double p) {
    entries.push_back(Json::array({u, v, p}));
  });
  return Json{{"type", "correlated"},
              {"n", mu.num_actions() / kTagsPerLayer},
              {"entries", std::move(entries)}};
}

CorrelatedDistribution CorrelatedFromJson(const Json& j, int n) {
  ExpectType(j, "correlated");
  ExpectN(j, n);
  const auto entries = Field<Json>(j, "entries");
  if (!entries.is_array()) throw InvalidInput("entries must be an array");
  std::vector<CorrelatedEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) {
      throw InvalidInput("correlated entry must be [u, v, p]");
    }
    out.push_back({CheckedIndex(e[0], 4 * n), CheckedIndex(e[1], 4 * n),
                   CheckedProbability(e[2])});
  }
  return CorrelatedDistribution::FromEntries(4 * n, std::move(out));
}

Json ProfileToJson(const Profile& profile) {
  return Json{{"type", "profile"},
              {"n", profile.a.size() / kTagsPerLayer},
              {"a", StrategyEntries(profile.a)},
              {"b", StrategyEntries(profile.b)}};
}

Profile ProfileFromJson(const Json& j, int n) {
  ExpectType(j, "profile");
  ExpectN(j, n);
  return {StrategyFromEntries(Field<Json>(j, "a"), n),
          StrategyFromEntries(Field<Json>(j, "b"), n)};
}

Json BayesianProfilesToJson(const std::vector<Profile>& profiles) {
  Json list = Json::array();
  for (const auto& p : profiles) list.push_back(ProfileToJson(p));
  return Json{{"type", "bayesian_profile"},
              {"T", profiles.size()},
              {"n", profiles.empty() ? 0 : profiles.front().a.size() / kTagsPerLayer},
              {"profiles", std::move(list)}};
}

std::vector<Profile> BayesianProfilesFromJson(const Json& j, int n,
                                              int num_types) {
  ExpectType(j, "bayesian_profile");
  ExpectN(j, n);
  if (Field<int>(j, "T") != num_types) throw InvalidInput("profile T mismatch");
  const auto list = Field<Json>(j, "profiles");
  if (!list.is_array() || static_cast<int>(list.size()) != num_types) {
    throw InvalidInput("need one profile per type");
  }
  std::vector<Profile> out;
  for (const auto& p : list) out.push_back(ProfileFromJson(p, n));
  return out;
}

Json RegretToJson(const RegretReport& report) {
  Json j{{"player", std::string(PlayerName(report.player))},
         {"value", report.value},
         {"witness", WitnessToJson(report.witness)}};
  if (report.type > 0) j["type"] = report.type;
  return j;
}

Json TranscriptToJson(const Transcript& t) {
  Json messages = Json::array();
  for (const auto& m : t.messages()) {
    Json payload = m.payload ? Json(*m.payload) : Json(nullptr);
    messages.push_back(Json{{"sender", std::string(SenderName(m.sender))},
                            {"kind", std::string(MessageKindName(m.kind))},
                            {"payload", std::move(payload)},
                            {"bits", m.bits},
                            {"encoded", m.encoded}});
  }
  return Json{{"messages", std::move(messages)}, {"total_bits", t.total_bits()}};
}

Json RecoveryToJson(const RecoveredPair& r) {
  return Json{{"u", VertexToJson(r.u)},
              {"v", VertexToJson(r.v)},
              {"type", nullptr},
              {"transcript", TranscriptToJson(r.transcript)}};
}

Json RecoveryToJson(const BayesianRecovery& r) {
  return Json{{"u", VertexToJson(r.u)},
              {"v", VertexToJson(r.v)},
              {"type", r.type},
              {"transcript", TranscriptToJson(r.transcript)}};
}

}  // namespace twocycle
