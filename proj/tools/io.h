#ifndef TWOCYCLE_TOOLS_IO_H_
#define TWOCYCLE_TOOLS_IO_H_

#include <string>

#include "twocycle/serialization.h"

namespace twocycle::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInvalid = 2;

// Throws InvalidInput when the file is missing or not JSON.
Json ReadJsonFile(const std::string& path);
// Pretty JSON to `path`, or stdout when empty.
void WriteJson(const Json& j, const std::string& path);
void WriteText(const std::string& text, const std::string& path);

// Bayesian game file: {"type": "bayesian_game", "T", "n", "x", "y"} with n
// the per-type length.
bool IsBayesianGame(const Json& j);

// "3..12" -> {3, 12}.
std::pair<int, int> ParseRange(const std::string& text);

// Round-trippable decimal form of a double.
std::string FormatDouble(double v);

}  // namespace twocycle::cli

#endif  // TWOCYCLE_TOOLS_IO_H_
