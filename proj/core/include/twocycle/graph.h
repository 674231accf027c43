#ifndef TWOCYCLE_GRAPH_H_
#define TWOCYCLE_GRAPH_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "twocycle/bits.h"
#include "twocycle/vertex.h"

namespace twocycle {

// Largest in-degree any vertex reaches in either player's graph.
inline constexpr int kMaxInDegree = 3;

// One player's directed graph on V = [n] x {0,1,01,11}. Every vertex has
// exactly one out-edge; in-neighbour lists are the exact inverse of the
// successor table. Built from that player's string alone.
class PlayerGraph {
 public:
  int n() const { return n_; }
  int num_vertices() const { return static_cast<int>(out_.size()); }

  // Successor by linear index / by vertex.
  int out(int index) const { return out_[index]; }
  Vertex out(const Vertex& v) const { return Vertex::FromIndex(out_[v.index()]); }

  // In-neighbours in ascending linear-index order.
  std::span<const int> in(int index) const {
    return {in_[index].data(), in_count_[index]};
  }
  int in_degree(int index) const { return in_count_[index]; }

  // True when the out-edge leaving `source_index` is a back-edge
  // ((i,0),(i-1,x_{i-1})). Always false in B's graph.
  bool is_back_edge(int source_index) const { return back_edge_[source_index]; }

  // In-neighbours reached over non-back-edges (N_A^f).
  std::vector<int> forward_in(int index) const;

 private:
  friend PlayerGraph BuildGraphA(const BitVector& x);
  friend PlayerGraph BuildGraphB(const BitVector& y);

  explicit PlayerGraph(int n);
  void AddEdge(const Vertex& from, const Vertex& to, bool back_edge);
  void Finalize();

  int n_ = 0;
  std::vector<int> out_;
  std::vector<std::array<int, kMaxInDegree>> in_;
  std::vector<std::uint8_t> in_count_;
  std::vector<std::uint8_t> back_edge_;
};

// G_A from x:
//   ((i,1),(i+1, x_{i+1} ? 11 : 0))
//   ((i,0),(i+1, x_{i+1} ? 01 : 0))    when x_i = 0
//   ((i,0),(i-1, x_{i-1}))             when x_i = 1   (back-edge)
//   ((i,01),(i,1)), ((i,11),(i,1))
PlayerGraph BuildGraphA(const BitVector& x);

// G_B from y: same first and last clauses with y, and ((i,0),(i+1, y_{i+1} ?
// 01 : 0)) for every i. No back-edges.
PlayerGraph BuildGraphB(const BitVector& y);

}  // namespace twocycle

#endif  // TWOCYCLE_GRAPH_H_
