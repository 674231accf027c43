#ifndef TWOCYCLE_SERIALIZATION_H_
#define TWOCYCLE_SERIALIZATION_H_

#include <vector>

#include <json.hpp>

#include "twocycle/distributions.h"
#include "twocycle/equilibria.h"
#include "twocycle/game.h"
#include "twocycle/recovery.h"
#include "twocycle/transcript.h"
#include "twocycle/vertex.h"

// JSON forms. Keys keep insertion order so output is stable and readable.
// Every *FromJson throws InvalidInput on malformed input.
namespace twocycle {

using Json = nlohmann::ordered_json;

// {"i": 2, "z": "01"}
Json VertexToJson(const Vertex& v);
Vertex VertexFromJson(const Json& j, int n);

// {"n": 5, "x": "11001", "y": "10011", "promise": true}
Json GameToJson(const TwoCycleGame& game);
TwoCycleGame GameFromJson(const Json& j);

// {"type": "mixed", "n": n, "entries": [[index, p], ...]}
// {"type": "correlated", "n": n, "entries": [[u, v, p], ...]}
// n is the string length; indices are linear vertex indices in [0, 4n).
Json MixedToJson(const MixedStrategy& s);
MixedStrategy MixedFromJson(const Json& j, int n);
Json CorrelatedToJson(const CorrelatedDistribution& mu);
CorrelatedDistribution CorrelatedFromJson(const Json& j, int n);

// {"type": "profile", "n": n, "a": [[index, p], ...], "b": [...]}
Json ProfileToJson(const Profile& profile);
Profile ProfileFromJson(const Json& j, int n);

// {"type": "bayesian_profile", "T": T, "n": n, "profiles": [profile, ...]}
Json BayesianProfilesToJson(const std::vector<Profile>& profiles);
std::vector<Profile> BayesianProfilesFromJson(const Json& j, int n, int num_types);

// {"player": "A", "value": v, "witness": {"kind": ..., ...}, "type": t?}
Json RegretToJson(const RegretReport& report);

// {"messages": [{"sender", "kind", "payload", "bits"}], "total_bits": k}
Json TranscriptToJson(const Transcript& t);

// {"u": vertex, "v": vertex, "type": int|null, "transcript": ...}
Json RecoveryToJson(const RecoveredPair& r);
Json RecoveryToJson(const BayesianRecovery& r);

}  // namespace twocycle

#endif  // TWOCYCLE_SERIALIZATION_H_
