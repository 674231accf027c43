#include "twocycle/game.h"

#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

std::vector<Vertex> ToVertices(std::span<const int> indices) {
  std::vector<Vertex> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(Vertex::FromIndex(i));
  return out;
}

std::vector<int> ValidatedDisputed(const BitVector& x, const BitVector& y,
                                   bool promise) {
  std::vector<int> disputed = DisputedIndices(x, y);
  if (x.size() < kMinStringLength) throw InvalidInput("n must be at least 3");
  if (promise && disputed.size() != 1) {
    throw InvalidInput("promise instance needs exactly one disputed index, got " +
                       std::to_string(disputed.size()));
  }
  if (!promise && disputed.size() > 1) {
    throw InvalidInput("no-promise instance allows at most one disputed index, got " +
                       std::to_string(disputed.size()));
  }
  return disputed;
}

}  // namespace

TwoCycleGame::TwoCycleGame(BitVector x, BitVector y, bool promise)
    : x_(std::move(x)),
      y_(std::move(y)),
      promise_(promise),
      disputed_(ValidatedDisputed(x_, y_, promise)),
      graph_a_(BuildGraphA(x_)),
      graph_b_(BuildGraphB(y_)) {}

std::vector<Vertex> TwoCycleGame::in_neighbors_a(const Vertex& v) const {
  return ToVertices(graph_a_.in(v.index()));
}

std::vector<Vertex> TwoCycleGame::in_neighbors_b(const Vertex& v) const {
  return ToVertices(graph_b_.in(v.index()));
}

std::vector<Vertex> TwoCycleGame::forward_in_neighbors_a(const Vertex& v) const {
  return ToVertices(graph_a_.forward_in(v.index()));
}

KeyVertices TwoCycleGame::key_vertices() const {
  if (disputed_.empty()) {
    throw InvalidInput("game has no disputed index");
  }
  const int i = disputed_.front();
  const int prev = WrapIndex(i - 1, n());
  return KeyVertices{
      .disputed_index = i,
      .u_star = {prev, BitTag(x_[prev])},
      .v0_star = {i, Tag::kZero},
      .v1_star = {i, Tag::kOne},
      .v01_star = {i, Tag::kZeroOne},
      .v11_star = {i, Tag::kOneOne},
  };
}

std::vector<std::pair<Vertex, Vertex>> TwoCycleGame::two_cycles() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int u = 0; u < num_actions(); ++u) {
    const int v = graph_b_.out(u);
    if (graph_a_.out(v) == u) {
      out.emplace_back(Vertex::FromIndex(u), Vertex::FromIndex(v));
    }
  }
  return out;
}

std::vector<Vertex> Layer(int i) { return {{i, Tag::kZero}, {i, Tag::kOne}}; }

std::vector<Vertex> MidwayLayer(int i) {
  return {{i, Tag::kZeroOne}, {i, Tag::kOneOne}, {i, Tag::kZero}};
}

BayesianTwoCycleGame::BayesianTwoCycleGame(const BitVector& x,
                                           const BitVector& y, int num_types)
    : x_(x), y_(y) {
  if (num_types < 2) throw InvalidInput("Bayesian game needs T >= 2 types");
  if (x.size() != y.size()) throw InvalidInput("strings differ in length");
  const int k = x.size();
  if (k % num_types != 0) {
    throw InvalidInput("string length " + std::to_string(k) +
                       " is not divisible by T = " + std::to_string(num_types));
  }
  const int n = k / num_types;
  if (n < kMinStringLength) throw InvalidInput("sub-game length n must be >= 3");
  const auto disputed = DisputedIndices(x, y);
  if (disputed.size() != 1) {
    throw InvalidInput("Bayesian game needs exactly one disputed index, got " +
                       std::to_string(disputed.size()));
  }
  sub_games_.reserve(num_types);
  for (int t = 1; t <= num_types; ++t) {
    const int first = n * (t - 1) + 1;
    sub_games_.emplace_back(x.slice(first, n), y.slice(first, n), false);
  }
  equilibrium_type_ = (disputed.front() - 1) / n + 1;
}

}  // namespace twocycle
