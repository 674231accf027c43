#ifndef TWOCYCLE_TESTS_TEST_UTIL_H_
#define TWOCYCLE_TESTS_TEST_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

#include "oracle.h"
#include "twocycle/distributions.h"
#include "twocycle/game.h"
#include "twocycle/vertex.h"

namespace twocycle::testing {

// The running example: x = 11001, y = 10011, i* = 2.
inline TwoCycleGame Example() {
  return TwoCycleGame(BitVector("11001"), BitVector("10011"), true);
}

inline Vertex V(int i, std::string_view z) { return Vertex{i, *ParseTag(z)}; }
inline int Idx(int i, std::string_view z) { return V(i, z).index(); }

inline oracle::DenseWinLoseGame DenseOf(const TwoCycleGame& g) {
  return oracle::TwoCycleFromStrings(g.x().str(), g.y().str());
}

inline std::vector<double> Values(const MixedStrategy& s) {
  return {s.values().begin(), s.values().end()};
}

}  // namespace twocycle::testing

#endif  // TWOCYCLE_TESTS_TEST_UTIL_H_
