#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.h"
#include "io.h"
#include "twocycle/errors.h"

namespace {

using twocycle::cli::Options;

// TWO_CYCLE_LOG in {quiet, info, debug}; default quiet.
bool SetUpLogging() {
  auto logger = spdlog::stderr_color_mt("twocycle");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("TWO_CYCLE_LOG");
  const std::string level = env ? env : "quiet";
  if (level == "quiet") {
    spdlog::set_level(spdlog::level::warn);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    std::cerr << "TWO_CYCLE_LOG must be quiet, info or debug\n";
    return false;
  }
  return true;
}

void AddInstanceFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "string length per type")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  if (!SetUpLogging()) return twocycle::cli::kInvalid;

  CLI::App app{"2-cycle game toolkit: instances, equilibria, verifiers, recovery protocols"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a promise instance");
  AddInstanceFlags(gen, o);
  gen->add_option("--disputed", o.disputed, "layer of the disputed index");
  gen->add_option("--zero-prefix", o.zero_prefix, "force x_i = y_i = 0 for i <= value");
  gen->add_option("--T", o.num_types, "number of types (Bayesian instance)");
  gen->add_option("--out", o.out_path, "output file (default stdout)");

  auto* build = app.add_subcommand("build", "game JSON plus a structural report");
  build->add_option("--game", o.game_path)->required();
  build->add_option("--out", o.out_path);

  auto* trivial = app.add_subcommand("trivial", "explicit equilibrium constructions");
  trivial->add_option("--kind", o.kind,
                      "ace | ane | wsne | cce | uniform | perturbed | pure-ce | pure-ne | cycle")
      ->required();
  trivial->add_option("--game", o.game_path, "game file (else generated from --n/--seed)");
  AddInstanceFlags(trivial, o);
  trivial->add_option("--eta", o.eta, "mixing weight for perturbed");
  trivial->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "measure the regret of a distribution");
  verify->add_option("--game", o.game_path)->required();
  verify->add_option("--dist", o.dist_path)->required();
  verify->add_option("--kind", o.kind, "ce | rce | cce | ne | wsne | bne")->required();
  verify->add_option("--epsilon", o.epsilon, "accept when regret <= epsilon (default 0)");
  verify->add_option("--out", o.out_path);

  auto* recover = app.add_subcommand("recover", "run the recovery protocol");
  recover->add_option("--kind", o.kind, "correlated | nash | wsne")->required();
  recover->add_option("--game", o.game_path);
  recover->add_option("--dist", o.dist_path);
  recover->add_option("--epsilon", o.epsilon, "vouched regret (default: measured)");
  AddInstanceFlags(recover, o);
  recover->add_option("--family", o.family, "point | perturbed | noisy | cycle");
  recover->add_option("--eta", o.eta);
  recover->add_option("--out", o.out_path);

  auto* bayesian = app.add_subcommand("bayesian", "build a Bayesian game and recover");
  AddInstanceFlags(bayesian, o);
  bayesian->add_option("--T", o.num_types, "number of types");
  bayesian->add_option("--game", o.game_path);
  bayesian->add_option("--dist", o.dist_path);
  bayesian->add_option("--epsilon", o.epsilon);
  bayesian->add_option("--out", o.out_path);

  auto* sweep = app.add_subcommand("sweep", "seeded batch of recovery runs");
  sweep->add_option("--kind", o.kind, "correlated | nash | wsne | bayesian")->required();
  sweep->add_option("--family", o.family);
  sweep->add_option("--n-range", o.n_range, "A..B")->required();
  sweep->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", o.seed, "first seed; trial k uses seed + k");
  sweep->add_option("--T", o.num_types);
  sweep->add_option("--eta", o.eta);
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--timing", o.timing, "add wall time (breaks byte-identical output)");
  sweep->add_option("--out", o.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? twocycle::cli::kOk : twocycle::cli::kInvalid;
  }

  try {
    if (*gen) return twocycle::cli::RunGen(o);
    if (*build) return twocycle::cli::RunBuild(o);
    if (*trivial) return twocycle::cli::RunTrivial(o);
    if (*verify) return twocycle::cli::RunVerify(o);
    if (*recover) return twocycle::cli::RunRecover(o);
    if (*bayesian) return twocycle::cli::RunBayesian(o);
    if (*sweep) return twocycle::cli::RunSweep(o);
  } catch (const twocycle::InvalidInput& e) {
    spdlog::error("invalid input: {}", e.what());
    return twocycle::cli::kInvalid;
  } catch (const twocycle::PreconditionViolation& e) {
    spdlog::error("precondition violated: {}", e.what());
    return twocycle::cli::kInvalid;
  } catch (const twocycle::ProtocolFailure& e) {
    spdlog::error("protocol failure: {}", e.what());
    return twocycle::cli::kFailed;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return twocycle::cli::kInvalid;
  }
  return twocycle::cli::kInvalid;
}
