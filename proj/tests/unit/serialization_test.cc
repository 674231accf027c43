#include <gtest/gtest.h>

#include "test_util.h"
#include "twocycle/errors.h"
#include "twocycle/generators.h"
#include "twocycle/recovery.h"
#include "twocycle/serialization.h"

namespace twocycle {
namespace {

using testing::Example;
using testing::V;

TEST(Serialization, VertexRoundTrip) {
  for (int k = 0; k < 20; ++k) {
    const Vertex v = Vertex::FromIndex(k);
    EXPECT_EQ(VertexFromJson(VertexToJson(v), 5), v);
  }
  EXPECT_EQ(VertexToJson(V(3, "01")).dump(), R"({"i":3,"z":"01"})");
  EXPECT_THROW(VertexFromJson(Json{{"i", 6}, {"z", "0"}}, 5), InvalidInput);
  EXPECT_THROW(VertexFromJson(Json{{"i", 2}, {"z", "10"}}, 5), InvalidInput);
  EXPECT_THROW(VertexFromJson(Json{{"i", 2}}, 5), InvalidInput);
}

TEST(Serialization, GameRoundTrip) {
  const auto g = Example();
  const Json j = GameToJson(g);
  EXPECT_EQ(j.dump(), R"({"n":5,"x":"11001","y":"10011","promise":true})");
  const auto back = GameFromJson(j);
  EXPECT_EQ(back.x(), g.x());
  EXPECT_EQ(back.y(), g.y());
  EXPECT_TRUE(back.promise());
  EXPECT_TRUE(GameFromJson(Json{{"n", 3}, {"x", "100"}, {"y", "000"}}).promise());
}

TEST(Serialization, MalformedGames) {
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n":5,"x":"11001"})")), InvalidInput);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n":4,"x":"11001","y":"10011"})")),
               InvalidInput);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n":5,"x":"11a01","y":"10011"})")),
               InvalidInput);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n":"5","x":"11001","y":"10011"})")),
               InvalidInput);
  EXPECT_THROW(GameFromJson(Json::array()), InvalidInput);
}

TEST(Serialization, MixedRoundTrip) {
  Rng rng(3);
  const auto s = RandomMixed(20, 7, rng);
  const auto back = MixedFromJson(MixedToJson(s), 5);
  EXPECT_EQ(testing::Values(back), testing::Values(s));
  EXPECT_THROW(MixedFromJson(MixedToJson(s), 6), InvalidInput);
  EXPECT_THROW(MixedFromJson(Json::parse(R"({"type":"mixed","n":5,"entries":[[20,1.0]]})"), 5),
               InvalidInput);
  EXPECT_THROW(MixedFromJson(Json::parse(R"({"type":"mixed","n":5,"entries":[[0,0.5]]})"), 5),
               InvalidInput);
  EXPECT_THROW(MixedFromJson(Json::parse(R"({"type":"profile","n":5,"entries":[]})"), 5),
               InvalidInput);
}

TEST(Serialization, CorrelatedRoundTrip) {
  Rng rng(8);
  const auto mu = RandomCorrelated(20, 30, rng);
  const auto back = CorrelatedFromJson(CorrelatedToJson(mu), 5);
  EXPECT_EQ(back.support_size(), mu.support_size());
  mu.ForEach([&](int u, int v, double p) { EXPECT_EQ(back.at(u, v), p); });
  EXPECT_THROW(
      CorrelatedFromJson(Json::parse(R"({"type":"correlated","n":5,"entries":[[0,1]]})"), 5),
      InvalidInput);
  EXPECT_THROW(
      CorrelatedFromJson(Json::parse(R"({"type":"correlated","n":5,"entries":[[0,1,-1.0],[0,2,2.0]]})"), 5),
      InvalidInput);
}

TEST(Serialization, ProfileAndBayesianRoundTrip) {
  const auto g = Example();
  const Profile p = PureNashProfile(g);
  const Profile back = ProfileFromJson(ProfileToJson(p), 5);
  EXPECT_EQ(testing::Values(back.a), testing::Values(p.a));
  EXPECT_EQ(testing::Values(back.b), testing::Values(p.b));

  const std::vector<Profile> ps{p, p, p};
  const auto bp = BayesianProfilesFromJson(BayesianProfilesToJson(ps), 5, 3);
  EXPECT_EQ(bp.size(), 3u);
  EXPECT_THROW(BayesianProfilesFromJson(BayesianProfilesToJson(ps), 5, 2), InvalidInput);
}

TEST(Serialization, RecoveryDocument) {
  const auto g = Example();
  const Profile p = PureNashProfile(g);
  const auto r = RecoverFromNash(PartyViewA(g.x()), p.a, PartyViewB(g.y()), p.b, 0.0);
  const Json j = RecoveryToJson(r);
  EXPECT_EQ(j["u"], VertexToJson(V(1, "1")));
  EXPECT_EQ(j["v"], VertexToJson(V(2, "0")));
  EXPECT_TRUE(j["type"].is_null());
  EXPECT_EQ(j["transcript"]["total_bits"], 1);
  EXPECT_EQ(j["transcript"]["messages"][0]["kind"], "flag");
  EXPECT_EQ(j["transcript"]["messages"][0]["encoded"], "0");
}

TEST(Serialization, RegretWitness) {
  const auto g = Example();
  const auto mu = CorrelatedDistribution::PointMass(20, testing::Idx(3, "0"), testing::Idx(3, "0"));
  const Json j = RegretToJson(CeRegret(g, mu));
  EXPECT_EQ(j["value"], 1.0);
  EXPECT_EQ(j["witness"]["kind"], "swap");
  EXPECT_FALSE(j.contains("type"));
}

}  // namespace
}  // namespace twocycle
