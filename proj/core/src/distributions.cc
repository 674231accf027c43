#include "twocycle/distributions.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "twocycle/errors.h"

namespace twocycle {
namespace {

void CheckProbability(double p) {
  if (!std::isfinite(p) || p < 0.0) {
    throw InvalidInput("probability entries must be finite and non-negative");
  }
}

void CheckMass(double total) {
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw InvalidInput("distribution mass is " + std::to_string(total) +
                       ", expected 1");
  }
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw InvalidInput("mixed strategy over no actions");
  double total = 0.0;
  for (double p : p_) {
    CheckProbability(p);
    total += p;
  }
  CheckMass(total);
}

MixedStrategy MixedStrategy::PointMass(int num_actions, int action) {
  std::vector<double> p(num_actions, 0.0);
  p.at(action) = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

double MixedStrategy::Mass(std::span<const int> actions) const {
  double total = 0.0;
  for (int a : actions) total += p_[a];
  return total;
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (InSupport(i)) out.push_back(i);
  }
  return out;
}

CorrelatedDistribution CorrelatedDistribution::FromEntries(
    int num_actions, std::vector<CorrelatedEntry> entries) {
  if (num_actions < 1) throw InvalidInput("distribution over no actions");
  for (const auto& e : entries) {
    if (e.u < 0 || e.u >= num_actions || e.v < 0 || e.v >= num_actions) {
      throw InvalidInput("action pair (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") out of range");
    }
    CheckProbability(e.p);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<CorrelatedEntry> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().p += e.p;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.p == 0.0; });

  CorrelatedDistribution mu;
  mu.num_actions_ = num_actions;
  mu.BuildIndex(std::move(merged));
  CheckMass(mu.total_mass_);
  return mu;
}

CorrelatedDistribution CorrelatedDistribution::FromDense(
    int num_actions, std::span<const double> table) {
  const auto n = static_cast<std::size_t>(num_actions);
  if (num_actions < 1 || table.size() != n * n) {
    throw InvalidInput("dense table must be N x N");
  }
  std::vector<CorrelatedEntry> entries;
  for (int u = 0; u < num_actions; ++u) {
    for (int v = 0; v < num_actions; ++v) {
      const double p = table[u * n + v];
      if (p != 0.0) entries.push_back({u, v, p});
    }
  }
  return FromEntries(num_actions, std::move(entries));
}

CorrelatedDistribution CorrelatedDistribution::Product(const MixedStrategy& a,
                                                       const MixedStrategy& b) {
  if (a.size() != b.size()) throw InvalidInput("strategies differ in size");
  std::vector<CorrelatedEntry> entries;
  for (int u = 0; u < a.size(); ++u) {
    if (a[u] == 0.0) continue;
    for (int v = 0; v < b.size(); ++v) {
      if (b[v] != 0.0) entries.push_back({u, v, a[u] * b[v]});
    }
  }
  return FromEntries(a.size(), std::move(entries));
}

CorrelatedDistribution CorrelatedDistribution::Uniform(int num_actions) {
  const auto n = static_cast<std::size_t>(num_actions);
  std::vector<double> table(n * n, 1.0 / static_cast<double>(n * n));
  return FromDense(num_actions, table);
}

CorrelatedDistribution CorrelatedDistribution::PointMass(int num_actions, int u,
                                                         int v) {
  return FromEntries(num_actions, {{u, v, 1.0}});
}

void CorrelatedDistribution::BuildIndex(std::vector<CorrelatedEntry> sorted) {
  const int n = num_actions_;
  support_size_ = sorted.size();
  row_totals_.assign(n, 0.0);
  column_totals_.assign(n, 0.0);
  total_mass_ = 0.0;
  for (const auto& e : sorted) {
    row_totals_[e.u] += e.p;
    column_totals_[e.v] += e.p;
    total_mass_ += e.p;
  }

  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (support_size_ * 4 > nn) {
    dense_.assign(nn, 0.0);
    for (const auto& e : sorted) dense_[e.u * static_cast<std::size_t>(n) + e.v] = e.p;
    return;
  }

  row_offsets_.assign(n + 1, 0);
  for (const auto& e : sorted) ++row_offsets_[e.u + 1];
  for (int i = 0; i < n; ++i) row_offsets_[i + 1] += row_offsets_[i];
  row_columns_.reserve(sorted.size());
  row_values_.reserve(sorted.size());
  for (const auto& e : sorted) {
    row_columns_.push_back(e.v);
    row_values_.push_back(e.p);
  }

  column_offsets_.assign(n + 1, 0);
  for (const auto& e : sorted) ++column_offsets_[e.v + 1];
  for (int i = 0; i < n; ++i) column_offsets_[i + 1] += column_offsets_[i];
  column_rows_.resize(sorted.size());
  column_values_.resize(sorted.size());
  std::vector<int> cursor(column_offsets_.begin(), column_offsets_.end() - 1);
  // Entries are sorted by (u, v), so rows come out ascending within a column.
  for (const auto& e : sorted) {
    const int slot = cursor[e.v]++;
    column_rows_[slot] = e.u;
    column_values_[slot] = e.p;
  }
}

double CorrelatedDistribution::at(int u, int v) const {
  if (is_dense()) return dense_[u * static_cast<std::size_t>(num_actions_) + v];
  const auto first = row_columns_.begin() + row_offsets_[u];
  const auto last = row_columns_.begin() + row_offsets_[u + 1];
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return 0.0;
  return row_values_[it - row_columns_.begin()];
}

double CorrelatedDistribution::RowMass(int u, std::span<const int> columns) const {
  double total = 0.0;
  for (int v : columns) total += at(u, v);
  return total;
}

double CorrelatedDistribution::ColumnMass(std::span<const int> rows, int v) const {
  double total = 0.0;
  for (int u : rows) total += at(u, v);
  return total;
}

void CorrelatedDistribution::ForEachInRow(
    int u, const std::function<void(int, double)>& fn) const {
  if (is_dense()) {
    const double* row = dense_.data() + u * static_cast<std::size_t>(num_actions_);
    for (int v = 0; v < num_actions_; ++v) {
      if (row[v] != 0.0) fn(v, row[v]);
    }
    return;
  }
  for (int k = row_offsets_[u]; k < row_offsets_[u + 1]; ++k) {
    fn(row_columns_[k], row_values_[k]);
  }
}

void CorrelatedDistribution::ForEachInColumn(
    int v, const std::function<void(int, double)>& fn) const {
  if (is_dense()) {
    for (int u = 0; u < num_actions_; ++u) {
      const double p = dense_[u * static_cast<std::size_t>(num_actions_) + v];
      if (p != 0.0) fn(u, p);
    }
    return;
  }
  for (int k = column_offsets_[v]; k < column_offsets_[v + 1]; ++k) {
    fn(column_rows_[k], column_values_[k]);
  }
}

void CorrelatedDistribution::ForEach(
    const std::function<void(int, int, double)>& fn) const {
  for (int u = 0; u < num_actions_; ++u) {
    ForEachInRow(u, [&](int v, double p) { fn(u, v, p); });
  }
}

std::vector<CorrelatedEntry> CorrelatedDistribution::Entries() const {
  std::vector<CorrelatedEntry> out;
  out.reserve(support_size_);
  ForEach([&](int u, int v, double p) { out.push_back({u, v, p}); });
  return out;
}

std::vector<double> CorrelatedDistribution::ToDense() const {
  const auto n = static_cast<std::size_t>(num_actions_);
  if (is_dense()) return dense_;
  std::vector<double> table(n * n, 0.0);
  ForEach([&](int u, int v, double p) { table[u * n + v] = p; });
  return table;
}

}  // namespace twocycle
