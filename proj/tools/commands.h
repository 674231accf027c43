#ifndef TWOCYCLE_TOOLS_COMMANDS_H_
#define TWOCYCLE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>

namespace twocycle::cli {

// Union of every subcommand's flags; each command reads what it needs.
struct Options {
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::optional<int> disputed;
  std::optional<int> zero_prefix;
  std::optional<int> num_types;
  std::string kind;
  std::string family;
  std::optional<double> epsilon;
  std::optional<double> eta;
  std::string game_path;
  std::string dist_path;
  std::string out_path;
  std::string n_range;
  int trials = 1;
  std::string format = "csv";
  bool timing = false;
};

// Each returns an exit code. InvalidInput and PreconditionViolation escape
// to main, which maps them to exit code 2.
int RunGen(const Options& o);
int RunBuild(const Options& o);
int RunTrivial(const Options& o);
int RunVerify(const Options& o);
int RunRecover(const Options& o);
int RunBayesian(const Options& o);
int RunSweep(const Options& o);

}  // namespace twocycle::cli

#endif  // TWOCYCLE_TOOLS_COMMANDS_H_
