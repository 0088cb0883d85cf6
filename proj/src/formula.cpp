#include "trn/formula.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace trn {

const BigCount StirlingTable::zero_ = 0;

void StirlingTable::ensure(int max_m) {
  if (max_m < 0) throw std::invalid_argument("table size must be >= 0");
  if (rows_.empty()) rows_.push_back({BigCount(1)});  // S(0,0) = 1
  for (int m = int(rows_.size()); m <= max_m; ++m) {
    std::vector<BigCount> row(std::size_t(m) + 1);
    row[0] = 0;
    const auto& above = rows_[std::size_t(m) - 1];
    for (int k = 1; k < m; ++k) row[std::size_t(k)] = k * above[std::size_t(k)] + above[std::size_t(k) - 1];
    row[std::size_t(m)] = 1;
    rows_.push_back(std::move(row));
  }
}

const BigCount& StirlingTable::at(int m, int k) const {
  if (m < 0 || k < 0) throw std::invalid_argument("stirling arguments must be >= 0");
  if (m > max_m()) throw std::out_of_range("stirling table too small");
  if (k > m) return zero_;
  return rows_[std::size_t(m)][std::size_t(k)];
}

void FactorialTable::ensure(int max_i) {
  if (max_i < 0) throw std::invalid_argument("table size must be >= 0");
  if (fact_.empty()) fact_.push_back(BigCount(1));
  for (int i = int(fact_.size()); i <= max_i; ++i)
    fact_.push_back(i * fact_.back());
}

namespace {

// Process-wide caches behind the free evaluators. Growth happens under the
// lock; each evaluator computes its whole result while holding it.
struct Tables {
  std::mutex mu;
  StirlingTable stirling;
  FactorialTable factorials;
};

Tables& tables() {
  static Tables t;
  return t;
}

}  // namespace

BigCount stirling2(int m, int k) {
  if (m < 0 || k < 0)
    throw std::invalid_argument("stirling arguments must be >= 0");
  if (k > m) return 0;
  auto& t = tables();
  std::scoped_lock lock(t.mu);
  t.stirling.ensure(m);
  return t.stirling.at(m, k);
}

BigCount factorial(int i) {
  if (i < 0) throw std::invalid_argument("factorial argument must be >= 0");
  auto& t = tables();
  std::scoped_lock lock(t.mu);
  t.factorials.ensure(i);
  return t.factorials.at(i);
}

BigCount joining_factor(int k) {
  if (k < 1) throw std::invalid_argument("joining factor needs k >= 1");
  auto& t = tables();
  std::scoped_lock lock(t.mu);
  t.factorials.ensure(k);
  const BigCount& fk = t.factorials.at(k);
  return fk * fk * t.factorials.at(k - 1);
}

BigCount ordered_bell(int m) {
  if (m < 1) throw std::invalid_argument("ordered bell needs m >= 1");
  auto& t = tables();
  std::scoped_lock lock(t.mu);
  t.stirling.ensure(m);
  t.factorials.ensure(m);
  BigCount sum = 0;
  for (int k = 1; k <= m; ++k)
    sum += t.stirling.at(m, k) * t.factorials.at(k);
  return sum;
}

BigCount hamilton_count_triangular(const Tournament& t1, const Tournament& t2,
                                   const Tournament& t3, int cap) {
  const auto p1 = path_cover_profile(t1, cap);
  const auto p2 = path_cover_profile(t2, cap);
  const auto p3 = path_cover_profile(t3, cap);
  const int k_max = std::min({t1.n(), t2.n(), t3.n()});
  BigCount sum = 0;
  for (int k = 1; k <= k_max; ++k)
    sum += p1.at(k) * p2.at(k) * p3.at(k) * joining_factor(k);
  return sum;
}

BigCount lower_bound(int m1, int m2, int m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1)
    throw std::invalid_argument("part sizes must be >= 1");
  const int k_max = std::min({m1, m2, m3});
  const int m_max = std::max({m1, m2, m3});
  auto& t = tables();
  std::scoped_lock lock(t.mu);
  t.stirling.ensure(m_max);
  t.factorials.ensure(k_max);
  BigCount sum = 0;
  for (int k = 1; k <= k_max; ++k) {
    const BigCount& fk = t.factorials.at(k);
    sum += t.stirling.at(m1, k) * t.stirling.at(m2, k) * t.stirling.at(m3, k) *
           fk * fk * t.factorials.at(k - 1);
  }
  return sum;
}

BigCount transitive_triangular_count(int m) {
  if (m < 1) throw std::invalid_argument("part size must be >= 1");
  return lower_bound(m, m, m);
}

BigCount internal_free_count(int m) {
  if (m < 1) throw std::invalid_argument("part size must be >= 1");
  return joining_factor(m);  // m!^3/m = m! * m! * (m-1)!
}

}  // namespace trn
