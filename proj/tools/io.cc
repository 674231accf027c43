#include "io.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "twocycle/errors.h"

namespace twocycle::cli {

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void WriteText(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

void WriteJson(const Json& j, const std::string& path) {
  WriteText(j.dump(2) + "\n", path);
}

bool IsBayesianGame(const Json& j) {
  return j.is_object() && j.value("type", "") == "bayesian_game";
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      std::size_t used = 0;
      lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const std::string rest = text.substr(dots + 2);
      hi = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("range must look like A..B, got \"" + text + "\"");
  }
  if (lo > hi) throw InvalidInput("empty range " + text);
  return {lo, hi};
}

std::string FormatDouble(double v) { return fmt::format("{}", v); }

}  // namespace twocycle::cli
