#include "twocycle/graph.h"

#include <algorithm>
#include <cassert>

namespace twocycle {

PlayerGraph::PlayerGraph(int n)
    : n_(n),
      out_(static_cast<std::size_t>(kTagsPerLayer * n), -1),
      in_(static_cast<std::size_t>(kTagsPerLayer * n)),
      in_count_(static_cast<std::size_t>(kTagsPerLayer * n), 0),
      back_edge_(static_cast<std::size_t>(kTagsPerLayer * n), 0) {}

void PlayerGraph::AddEdge(const Vertex& from, const Vertex& to, bool back_edge) {
  const int s = from.index();
  const int t = to.index();
  assert(out_[s] == -1);
  assert(in_count_[t] < kMaxInDegree);
  out_[s] = t;
  back_edge_[s] = back_edge ? 1 : 0;
  in_[t][in_count_[t]++] = s;
}

void PlayerGraph::Finalize() {
  for (int v = 0; v < num_vertices(); ++v) {
    assert(out_[v] >= 0);
    std::sort(in_[v].begin(), in_[v].begin() + in_count_[v]);
  }
}

std::vector<int> PlayerGraph::forward_in(int index) const {
  std::vector<int> result;
  for (int s : in(index)) {
    if (!back_edge_[s]) result.push_back(s);
  }
  return result;
}

PlayerGraph BuildGraphA(const BitVector& x) {
  const int n = x.size();
  PlayerGraph g(n);
  for (int i = 1; i <= n; ++i) {
    const int next = WrapIndex(i + 1, n);
    const int prev = WrapIndex(i - 1, n);
    g.AddEdge({i, Tag::kOne}, {next, x[next] == 0 ? Tag::kZero : Tag::kOneOne},
              false);
    if (x[i] == 0) {
      g.AddEdge({i, Tag::kZero},
                {next, x[next] == 0 ? Tag::kZero : Tag::kZeroOne}, false);
    } else {
      g.AddEdge({i, Tag::kZero}, {prev, BitTag(x[prev])}, true);
    }
    g.AddEdge({i, Tag::kZeroOne}, {i, Tag::kOne}, false);
    g.AddEdge({i, Tag::kOneOne}, {i, Tag::kOne}, false);
  }
  g.Finalize();
  return g;
}

PlayerGraph BuildGraphB(const BitVector& y) {
  const int n = y.size();
  PlayerGraph g(n);
  for (int i = 1; i <= n; ++i) {
    const int next = WrapIndex(i + 1, n);
    g.AddEdge({i, Tag::kOne}, {next, y[next] == 0 ? Tag::kZero : Tag::kOneOne},
              false);
    g.AddEdge({i, Tag::kZero},
              {next, y[next] == 0 ? Tag::kZero : Tag::kZeroOne}, false);
    g.AddEdge({i, Tag::kZeroOne}, {i, Tag::kOne}, false);
    g.AddEdge({i, Tag::kOneOne}, {i, Tag::kOne}, false);
  }
  g.Finalize();
  return g;
}

}  // namespace twocycle
