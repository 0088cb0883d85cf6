#include "trn/exact.hpp"

#include <algorithm>
#include <numeric>

#include "exact_kernels.hpp"

namespace trn {

namespace {

void check_cap(const Tournament& t, int cap, const char* op) {
  if (t.n() > cap) throw cap_exceeded(t.n(), cap, op);
  if (t.n() > detail::kKernelMaxVertices)
    throw std::invalid_argument("subset DP is limited to " +
                                std::to_string(detail::kKernelMaxVertices) +
                                " vertices");
}

// Parallel kernels engage once a layer has enough cells to amortize the
// fork; below that the serial path is faster and results are identical
// either way.
bool worth_threads(const Tournament& t) { return t.n() >= 14; }

}  // namespace

cap_exceeded::cap_exceeded(int n_, int cap_, const std::string& what_op)
    : std::runtime_error("n=" + std::to_string(n_) +
                         " exceeds the configured cap " + std::to_string(cap_) +
                         " for " + what_op),
      n(n_),
      cap(cap_) {}

BigCount count_hamilton_paths(const Tournament& t, int cap) {
  check_cap(t, cap, "hamilton path counting");
  return detail::kernel_count_paths<BigCount>(t, worth_threads(t));
}

BigCount count_hamilton_cycles(const Tournament& t, int cap) {
  check_cap(t, cap, "hamilton cycle counting");
  return detail::kernel_count_cycles<BigCount>(t, worth_threads(t));
}

BigCount count_k_path_covers(const Tournament& t, int k, int cap) {
  if (k < 1 || k > t.n())
    throw std::invalid_argument("k must be between 1 and n");
  check_cap(t, cap, "path cover counting");
  auto counts = detail::kernel_cover_counts<BigCount>(t, k, worth_threads(t));
  return std::move(counts.back());
}

PathCoverProfile path_cover_profile(const Tournament& t, int cap) {
  check_cap(t, cap, "path cover counting");
  PathCoverProfile profile;
  profile.m = t.n();
  profile.counts =
      detail::kernel_cover_counts<BigCount>(t, t.n(), worth_threads(t));
  return profile;
}

HamiltonPath find_hamilton_path(const Tournament& t) {
  HamiltonPath p;
  p.order.reserve(std::size_t(t.n()));
  for (int v = 0; v < t.n(); ++v) {
    std::size_t pos = p.order.size();
    for (std::size_t i = 0; i < p.order.size(); ++i)
      if (t.arc(v, p.order[i])) {  // first current vertex that v beats
        pos = i;
        break;
      }
    p.order.insert(p.order.begin() + std::ptrdiff_t(pos), v);
  }
  return p;
}

bool validate_hamilton_path(const Tournament& t, const HamiltonPath& p) {
  if (int(p.order.size()) != t.n()) return false;
  std::vector<char> seen(std::size_t(t.n()), 0);
  for (int v : p.order) {
    if (v < 0 || v >= t.n() || seen[std::size_t(v)]) return false;
    seen[std::size_t(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.order.size(); ++i)
    if (!t.arc(p.order[i], p.order[i + 1])) return false;
  return true;
}

BigCount brute_force_cycles(const Tournament& t) {
  const int n = t.n();
  if (n > 10)
    throw std::invalid_argument("brute-force cycle count is limited to n <= 10");
  if (n < 3) return 0;
  std::vector<int> rest(std::size_t(n) - 1);
  std::iota(rest.begin(), rest.end(), 1);
  BigCount count = 0;
  do {  // vertex 0 fixed first, so each cyclic order appears once
    bool ok = t.arc(0, rest.front()) && t.arc(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
      ok = t.arc(rest[i], rest[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

namespace {

// Orderings of `block` that form a directed path.
BigCount path_orderings(const Tournament& t, std::vector<int> block) {
  std::sort(block.begin(), block.end());
  BigCount count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < block.size(); ++i)
      ok = t.arc(block[i], block[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(block.begin(), block.end()));
  return count;
}

void sweep_partitions(const Tournament& t, int next, int k,
                      std::vector<std::vector<int>>& blocks, BigCount& total) {
  const int n = t.n();
  if (next == n) {
    if (int(blocks.size()) != k) return;
    BigCount prod = 1;
    for (const auto& b : blocks) {
      prod *= path_orderings(t, b);
      if (prod == 0) break;
    }
    total += prod;
    return;
  }
  // prune: remaining vertices cannot raise the block count to k
  if (int(blocks.size()) + (n - next) < k) return;
  // indices, not a range-for: the recursive call may push/pop a block and
  // reallocate the vector
  for (std::size_t bi = 0, existing = blocks.size(); bi < existing; ++bi) {
    blocks[bi].push_back(next);
    sweep_partitions(t, next + 1, k, blocks, total);
    blocks[bi].pop_back();
  }
  if (int(blocks.size()) < k) {
    blocks.push_back({next});
    sweep_partitions(t, next + 1, k, blocks, total);
    blocks.pop_back();
  }
}

}  // namespace

BigCount brute_force_path_covers(const Tournament& t, int k) {
  if (t.n() > 8)
    throw std::invalid_argument(
        "brute-force path cover count is limited to n <= 8");
  if (k < 1 || k > t.n())
    throw std::invalid_argument("k must be between 1 and n");
  BigCount total = 0;
  std::vector<std::vector<int>> blocks;
  sweep_partitions(t, 0, k, blocks, total);
  return total;
}

}  // namespace trn
