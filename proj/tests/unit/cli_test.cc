#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result Cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" TWOCYCLE_CLI "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Spit(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("twocycle_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    Spit(dir_ / "example.json", R"({"n":5,"x":"11001","y":"10011","promise":true})");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesFile) {
  const auto r = Cli("gen --n 5 --seed 7 --disputed 2 --out " + P("inst.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(Slurp(P("inst.json")));
  EXPECT_EQ(j["n"], 5);
  const std::string x = j["x"];
  const std::string y = j["y"];
  EXPECT_EQ(x[1], '1');
  EXPECT_EQ(y[1], '0');
}

TEST_F(CliTest, VerifyPointMass) {
  ASSERT_EQ(Cli("trivial --kind pure-ce --game " + P("example.json") + " --out " + P("pm.json")).code, 0);
  EXPECT_EQ(Cli("verify --game " + P("example.json") + " --dist " + P("pm.json") +
                " --kind ce --epsilon 0").code,
            0);
  ASSERT_EQ(Cli("trivial --kind uniform --game " + P("example.json") + " --out " + P("uni.json")).code, 0);
  EXPECT_EQ(Cli("verify --game " + P("example.json") + " --dist " + P("uni.json") +
                " --kind ce --epsilon 0").code,
            1);
  const auto r = Cli("verify --game " + P("example.json") + " --dist " + P("uni.json") +
                     " --kind ce --epsilon 0.0075");
  EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, RecoverNashFromFiles) {
  Spit(P("profile.json"), R"({"type":"profile","n":5,"a":[[1,1.0]],"b":[[4,1.0]]})");
  const auto r = Cli("recover --game " + P("example.json") + " --kind nash --dist " + P("profile.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["result"]["transcript"]["total_bits"].get<int>(), 1 + 3);
  EXPECT_EQ(j["result"]["v"]["i"], 2);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("--help").code, 0);
  Spit(P("bad.json"), "{not json");
  EXPECT_EQ(Cli("build --game " + P("bad.json")).code, 2);
  EXPECT_EQ(Cli("build --game " + P("missing.json")).code, 2);
  EXPECT_EQ(Cli("gen --n 5 --zero-prefix 5").code, 2);
  EXPECT_EQ(Cli("sweep --kind nash --n-range 9..3").code, 2);
  EXPECT_EQ(Cli("gen --n 5", "TWO_CYCLE_LOG=loud").code, 2);
  EXPECT_EQ(Cli("gen --n 5", "TWO_CYCLE_LOG=debug").code, 0);
}

TEST_F(CliTest, OutputsAreByteIdentical) {
  const std::string cmds[] = {
      "gen --n 40 --seed 3",
      "recover --kind correlated --family noisy --n 20 --seed 11",
      "bayesian --n 12 --T 4 --seed 2",
      "sweep --kind nash --n-range 3..12 --trials 3 --seed 5",
      "trivial --kind ace --n 16 --seed 1",
  };
  for (const auto& c : cmds) {
    const auto a = Cli(c);
    const auto b = Cli(c);
    EXPECT_EQ(a.code, 0) << c;
    EXPECT_FALSE(a.out.empty()) << c;
    EXPECT_EQ(a.out, b.out) << c;
  }
}

TEST_F(CliTest, SweepRowReproducible) {
  const auto sweep = Cli("sweep --kind correlated --family perturbed --n-range 5..6 --trials 2 --seed 10 --format json");
  ASSERT_EQ(sweep.code, 0);
  const auto rows = nlohmann::json::parse(sweep.out);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    const auto one = Cli("recover --kind correlated --family perturbed --n " +
                         std::to_string(row["n"].get<int>()) + " --seed " +
                         std::to_string(row["seed"].get<std::uint64_t>()));
    ASSERT_EQ(one.code, 0);
    const auto rec = nlohmann::json::parse(one.out)["record"];
    EXPECT_EQ(rec["regret"], row["regret"]);
    EXPECT_EQ(rec["recovered_index"], row["recovered_index"]);
    EXPECT_EQ(rec["bits"], row["bits"]);
  }
}

}  // namespace
