#ifndef TWOCYCLE_GAME_H_
#define TWOCYCLE_GAME_H_

#include <optional>
#include <utility>
#include <vector>

#include "twocycle/bits.h"
#include "twocycle/graph.h"
#include "twocycle/vertex.h"

namespace twocycle {

struct KeyVertices {
  int disputed_index = 0;  // i*
  Vertex u_star;           // (i*-1, x_{i*-1})
  Vertex v0_star;          // (i*, 0)
  Vertex v1_star;          // (i*, 1)
  Vertex v01_star;         // (i*, 01)
  Vertex v11_star;         // (i*, 11)
};

// The win-lose N x N game (N = 4n) built from two n-bit strings. A wins at
// (u, v) iff (v, u) is an edge of G_A; B wins at (u, v) iff (u, v) is an
// edge of G_B.
//
// With `promise` the strings must have exactly one disputed index;
// otherwise at most one (the no-promise variant used by the Bayesian game).
// The edge sets are identical in both variants. Immutable once built.
class TwoCycleGame {
 public:
  // Throws InvalidInput on length mismatch, n < 3, or a broken promise.
  TwoCycleGame(BitVector x, BitVector y, bool promise);

  int n() const { return x_.size(); }
  int num_actions() const { return 4 * n(); }
  const BitVector& x() const { return x_; }
  const BitVector& y() const { return y_; }
  bool promise() const { return promise_; }
  const PlayerGraph& graph_a() const { return graph_a_; }
  const PlayerGraph& graph_b() const { return graph_b_; }

  // The unique u with utility_a(u, v) = 1.
  Vertex out_neighbor_a(const Vertex& v) const { return graph_a_.out(v); }
  // The unique v' with utility_b(u, v') = 1.
  Vertex out_neighbor_b(const Vertex& u) const { return graph_b_.out(u); }

  int utility_a(const Vertex& u, const Vertex& v) const {
    return graph_a_.out(v.index()) == u.index() ? 1 : 0;
  }
  int utility_b(const Vertex& u, const Vertex& v) const {
    return graph_b_.out(u.index()) == v.index() ? 1 : 0;
  }

  std::vector<Vertex> in_neighbors_a(const Vertex& v) const;
  std::vector<Vertex> in_neighbors_b(const Vertex& v) const;
  std::vector<Vertex> forward_in_neighbors_a(const Vertex& v) const;

  // Empty or a single index.
  const std::vector<int>& disputed() const { return disputed_; }
  bool has_disputed_index() const { return !disputed_.empty(); }

  // Throws InvalidInput when the game has no disputed index.
  KeyVertices key_vertices() const;

  // All (u, v) with (v, u) in E_A and (u, v) in E_B, ascending in u.
  std::vector<std::pair<Vertex, Vertex>> two_cycles() const;

 private:
  BitVector x_;
  BitVector y_;
  bool promise_;
  std::vector<int> disputed_;
  PlayerGraph graph_a_;
  PlayerGraph graph_b_;
};

// L_i = {(i,0),(i,1)}.
std::vector<Vertex> Layer(int i);
// L_i^m = {(i,01),(i,11),(i,0)}.
std::vector<Vertex> MidwayLayer(int i);

// T sub-games over consecutive n-bit blocks of two k-bit strings, k = T * n,
// under the uniform prior on the diagonal {(t,t)}. Exactly one sub-game
// holds the single disputed index of the full strings.
class BayesianTwoCycleGame {
 public:
  // Throws InvalidInput when T < 2, k is not divisible by T, n < 3, or the
  // full strings do not have exactly one disputed index.
  BayesianTwoCycleGame(const BitVector& x, const BitVector& y, int num_types);

  int num_types() const { return static_cast<int>(sub_games_.size()); }
  int n() const { return sub_games_.front().n(); }
  int num_actions() const { return 4 * n(); }
  const BitVector& x() const { return x_; }
  const BitVector& y() const { return y_; }

  // Types are 1-based, t in [1, T].
  const TwoCycleGame& sub_game(int t) const { return sub_games_[t - 1]; }
  const std::vector<TwoCycleGame>& sub_games() const { return sub_games_; }

  // The type whose sub-game has the disputed index, and hence a pure Nash
  // equilibrium.
  int equilibrium_type() const { return equilibrium_type_; }

 private:
  BitVector x_;
  BitVector y_;
  std::vector<TwoCycleGame> sub_games_;
  int equilibrium_type_ = 0;
};

}  // namespace twocycle

#endif  // TWOCYCLE_GAME_H_
