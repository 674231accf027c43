#ifndef TWOCYCLE_DISTRIBUTIONS_H_
#define TWOCYCLE_DISTRIBUTIONS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace twocycle {

// Mass check tolerance: |total - 1| <= kMassTolerance.
inline constexpr double kMassTolerance = 1e-9;
// Support membership: an entry is in the support iff it exceeds this.
inline constexpr double kSupportTolerance = 1e-12;
// Agreement between two evaluations of the same quantity.
inline constexpr double kEvalTolerance = 1e-12;

// A distribution over one player's N actions, stored densely.
class MixedStrategy {
 public:
  // Throws InvalidInput on negative or non-finite entries or when the mass is
  // not 1 within kMassTolerance.
  explicit MixedStrategy(std::vector<double> probabilities);

  static MixedStrategy PointMass(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int action) const { return p_[action]; }
  std::span<const double> values() const { return p_; }

  // Sum over a set of actions.
  double Mass(std::span<const int> actions) const;
  bool InSupport(int action) const { return p_[action] > kSupportTolerance; }
  std::vector<int> Support() const;

 private:
  std::vector<double> p_;
};

struct CorrelatedEntry {
  int u = 0;
  int v = 0;
  double p = 0.0;
};

// A distribution mu over action pairs (u, v). Sparse (CSR by row and by
// column) unless the support exceeds N^2 / 4, in which case a dense N x N
// table is used. Immutable.
class CorrelatedDistribution {
 public:
  // Duplicate (u, v) entries are summed and zero entries dropped. Throws
  // InvalidInput on out-of-range indices, negative or non-finite entries,
  // or mass not 1 within kMassTolerance.
  static CorrelatedDistribution FromEntries(int num_actions,
                                            std::vector<CorrelatedEntry> entries);
  // Row-major table, entry [u * N + v].
  static CorrelatedDistribution FromDense(int num_actions,
                                          std::span<const double> table);
  // mu(u, v) = a(u) * b(v).
  static CorrelatedDistribution Product(const MixedStrategy& a,
                                        const MixedStrategy& b);
  static CorrelatedDistribution Uniform(int num_actions);
  static CorrelatedDistribution PointMass(int num_actions, int u, int v);

  int num_actions() const { return num_actions_; }
  bool is_dense() const { return !dense_.empty(); }
  std::size_t support_size() const { return support_size_; }
  double total_mass() const { return total_mass_; }

  double at(int u, int v) const;
  // mu(u, S) and mu(S, v).
  double RowMass(int u, std::span<const int> columns) const;
  double ColumnMass(std::span<const int> rows, int v) const;
  double RowTotal(int u) const { return row_totals_[u]; }
  double ColumnTotal(int v) const { return column_totals_[v]; }

  // Nonzero entries of row u / column v in ascending index order.
  void ForEachInRow(int u, const std::function<void(int v, double p)>& fn) const;
  void ForEachInColumn(int v, const std::function<void(int u, double p)>& fn) const;
  // All nonzero entries in (u, v) order.
  void ForEach(const std::function<void(int u, int v, double p)>& fn) const;

  std::vector<CorrelatedEntry> Entries() const;
  std::vector<double> ToDense() const;

 private:
  CorrelatedDistribution() = default;
  void BuildIndex(std::vector<CorrelatedEntry> sorted_entries);

  int num_actions_ = 0;
  std::size_t support_size_ = 0;
  double total_mass_ = 0.0;
  std::vector<double> row_totals_;
  std::vector<double> column_totals_;

  // Sparse representation.
  std::vector<int> row_offsets_;
  std::vector<int> row_columns_;
  std::vector<double> row_values_;
  std::vector<int> column_offsets_;
  std::vector<int> column_rows_;
  std::vector<double> column_values_;

  // Dense representation.
  std::vector<double> dense_;
};

// A total mapping of one player's actions onto themselves.
using SwitchingRule = std::vector<int>;

}  // namespace twocycle

#endif  // TWOCYCLE_DISTRIBUTIONS_H_
