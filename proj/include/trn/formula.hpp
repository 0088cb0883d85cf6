#pragma once

#include <vector>

#include "trn/bigcount.hpp"
#include "trn/exact.hpp"
#include "trn/tournament.hpp"

namespace trn {

/// Triangular table of Stirling numbers of the second kind,
/// stir(m,k) = number of set partitions of an m-set into exactly k blocks.
/// Grows on demand; rows are exact big integers.
class StirlingTable {
 public:
  explicit StirlingTable(int max_m = 0) { ensure(max_m); }
  void ensure(int max_m);
  int max_m() const { return int(rows_.size()) - 1; }

  /// S(m,k); k > m yields 0 by convention. Requires m <= max_m().
  const BigCount& at(int m, int k) const;

 private:
  std::vector<std::vector<BigCount>> rows_;  // rows_[m][k], k = 0..m
  static const BigCount zero_;
};

/// fact(i) = i!, exact, grown on demand.
class FactorialTable {
 public:
  explicit FactorialTable(int max_i = 0) { ensure(max_i); }
  void ensure(int max_i);
  int max_i() const { return int(fact_.size()) - 1; }
  const BigCount& at(int i) const { return fact_.at(std::size_t(i)); }

 private:
  std::vector<BigCount> fact_;
};

// The free evaluators below share process-wide cached tables, built under a
// lock up to the largest requested index and immutable afterwards. All are
// pure and safe to call concurrently. No floating point anywhere here.

/// S(m,k). Rejects negative arguments; returns 0 for k > m.
BigCount stirling2(int m, int k);

/// i!, exact.
BigCount factorial(int i);

/// k!^3/k, the number of ways to join three k-path covers, one per part of
/// a triangular tournament, into a single Hamilton cycle. Computed as
/// k! * k! * (k-1)! so no division ever happens. Requires k >= 1.
BigCount joining_factor(int k);

/// Number of ordered set partitions (Fubini number) f(m) = sum_k S(m,k) k!.
BigCount ordered_bell(int m);

/// Exact Hamilton cycle count of the triangular composition of the three
/// parts, computed from their k-path-cover profiles:
///   sum over k of P(T1,k) P(T2,k) P(T3,k) * k!^3/k.
/// Agrees with the subset-DP count of the composed tournament.
BigCount hamilton_count_triangular(const Tournament& t1, const Tournament& t2,
                                   const Tournament& t3,
                                   int cap = kDefaultCoverCap);

/// sum over k of S(m1,k) S(m2,k) S(m3,k) * k!^3/k. Lower bound for the
/// Hamilton cycle count of any triangular composition with these part
/// sizes; tight when all three parts are transitive.
BigCount lower_bound(int m1, int m2, int m3);

/// Hamilton cycle count of the composition of three transitive m-vertex
/// parts: sum over k of S(m,k)^3 k!^3/k. Equals lower_bound(m, m, m).
BigCount transitive_triangular_count(int m);

/// m!^3/m: Hamilton cycles of a triangular composition with equal part
/// size m that use cross arcs only. Equals the k = m term of the bound.
BigCount internal_free_count(int m);

}  // namespace trn
