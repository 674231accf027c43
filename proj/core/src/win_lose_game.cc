#include "twocycle/win_lose_game.h"

#include <algorithm>

#include "twocycle/errors.h"

namespace twocycle {

WinLoseGame::WinLoseGame(const TwoCycleGame& game)
    : num_actions_(game.num_actions()) {
  const int n = num_actions_;
  a_offsets_.resize(n + 1);
  b_offsets_.resize(n + 1);
  a_winners_.resize(n);
  b_winners_.resize(n);
  for (int i = 0; i < n; ++i) {
    a_offsets_[i] = i;
    b_offsets_[i] = i;
    a_winners_[i] = game.graph_a().out(i);
    b_winners_[i] = game.graph_b().out(i);
  }
  a_offsets_[n] = n;
  b_offsets_[n] = n;
}

WinLoseGame WinLoseGame::FromTables(int num_actions,
                                    std::span<const std::uint8_t> utility_a,
                                    std::span<const std::uint8_t> utility_b) {
  const auto n = static_cast<std::size_t>(num_actions);
  if (num_actions < 1 || utility_a.size() != n * n || utility_b.size() != n * n) {
    throw InvalidInput("utility tables must be N x N");
  }
  WinLoseGame g;
  g.num_actions_ = num_actions;
  g.a_offsets_.push_back(0);
  for (int v = 0; v < num_actions; ++v) {
    for (int u = 0; u < num_actions; ++u) {
      if (utility_a[u * n + v]) g.a_winners_.push_back(u);
    }
    g.a_offsets_.push_back(static_cast<int>(g.a_winners_.size()));
  }
  g.b_offsets_.push_back(0);
  for (int u = 0; u < num_actions; ++u) {
    for (int v = 0; v < num_actions; ++v) {
      if (utility_b[u * n + v]) g.b_winners_.push_back(v);
    }
    g.b_offsets_.push_back(static_cast<int>(g.b_winners_.size()));
  }
  return g;
}

int WinLoseGame::utility_a(int u, int v) const {
  const auto w = a_winners(v);
  return std::find(w.begin(), w.end(), u) != w.end() ? 1 : 0;
}

int WinLoseGame::utility_b(int u, int v) const {
  const auto w = b_winners(u);
  return std::find(w.begin(), w.end(), v) != w.end() ? 1 : 0;
}

}  // namespace twocycle
