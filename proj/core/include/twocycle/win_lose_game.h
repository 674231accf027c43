#ifndef TWOCYCLE_WIN_LOSE_GAME_H_
#define TWOCYCLE_WIN_LOSE_GAME_H_

#include <cstdint>
#include <span>
#include <vector>

#include "twocycle/game.h"

namespace twocycle {

// A two-player win-lose game on N x N actions, stored sparsely as the
// sets of winning responses:
//   a_winners(v) = { u : u_A(u, v) = 1 }
//   b_winners(u) = { v : u_B(u, v) = 1 }
// All regret computations consume this form. For the 2-cycle game each
// set has exactly one element.
class WinLoseGame {
 public:
  explicit WinLoseGame(const TwoCycleGame& game);

  // Row-major N*N tables of 0/1 utilities, entry [u * N + v].
  static WinLoseGame FromTables(int num_actions,
                                std::span<const std::uint8_t> utility_a,
                                std::span<const std::uint8_t> utility_b);

  int num_actions() const { return num_actions_; }

  std::span<const int> a_winners(int v) const {
    return {a_winners_.data() + a_offsets_[v],
            a_winners_.data() + a_offsets_[v + 1]};
  }
  std::span<const int> b_winners(int u) const {
    return {b_winners_.data() + b_offsets_[u],
            b_winners_.data() + b_offsets_[u + 1]};
  }

  int utility_a(int u, int v) const;
  int utility_b(int u, int v) const;

 private:
  WinLoseGame() = default;

  int num_actions_ = 0;
  std::vector<int> a_offsets_;
  std::vector<int> a_winners_;
  std::vector<int> b_offsets_;
  std::vector<int> b_winners_;
};

}  // namespace twocycle

#endif  // TWOCYCLE_WIN_LOSE_GAME_H_
