#pragma once

// Subset-DP kernels shared by the public counters, the Monte Carlo driver
// and the benchmark. Count is either BigCount or uint64_t (the 64-bit
// flavor is only safe up to n = 20, where n! still fits).
//
// State: dp[S*n + v] = number of directed paths with vertex set S ending at
// v. The recurrence pulls from the previous popcount layer,
//     dp[S][v] = sum over u in (S \ v) with arc u->v of dp[S\v][u],
// so every cell of a layer is written by exactly one task and each cell's
// sum has a fixed operand order. Results are therefore independent of
// thread count, and the layer loop is what the OpenMP pragmas parallelize.

#include <bit>
#include <cstdint>
#include <vector>

#include "trn/tournament.hpp"

namespace trn::detail {

inline constexpr int kKernelMaxVertices = 30;  // subset indices are 32-bit

/// All subsets of {0..n-1} with exactly c bits, ascending (Gosper's hack).
inline std::vector<std::uint32_t> subsets_of_size(int n, int c) {
  std::vector<std::uint32_t> out;
  if (c == 0 || c > n) return out;
  std::uint32_t s = (std::uint32_t(1) << c) - 1;
  const std::uint32_t limit = std::uint32_t(1) << n;
  while (s < limit) {
    out.push_back(s);
    std::uint32_t low = s & (0u - s);
    std::uint32_t ripple = s + low;
    s = ripple | (((s ^ ripple) >> 2) / low);
  }
  return out;
}

/// Fills dp (resized to n*2^n) with the path counts described above.
/// start < 0 admits every vertex as a path start; start >= 0 restricts to
/// paths beginning there (only subsets containing it get nonzero cells).
template <class Count>
void fill_path_table(const Tournament& t, int start, std::vector<Count>& dp,
                     bool parallel) {
  const int n = t.n();
  dp.assign(std::size_t(n) << n, Count(0));
  std::vector<std::uint64_t> in_mask(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in_mask[std::size_t(v)] = t.in_mask64(v);

  if (start >= 0)
    dp[(std::size_t(1) << start) * std::size_t(n) + std::size_t(start)] = 1;
  else
    for (int v = 0; v < n; ++v)
      dp[(std::size_t(1) << v) * std::size_t(n) + std::size_t(v)] = 1;

  for (int c = 2; c <= n; ++c) {
    const auto layer = subsets_of_size(n, c);
    const std::int64_t layer_size = std::int64_t(layer.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t idx = 0; idx < layer_size; ++idx) {
      const std::uint32_t s = layer[std::size_t(idx)];
      if (start >= 0 && !((s >> start) & 1u)) continue;
      for (std::uint32_t vb = s; vb != 0; vb &= vb - 1) {
        const int v = std::countr_zero(vb);
        const std::uint32_t prev = s & ~(std::uint32_t(1) << v);
        const std::size_t prev_base = std::size_t(prev) * std::size_t(n);
        Count acc(0);
        for (std::uint64_t ub = prev & in_mask[std::size_t(v)]; ub != 0;
             ub &= ub - 1)
          acc += dp[prev_base + std::size_t(std::countr_zero(ub))];
        dp[std::size_t(s) * std::size_t(n) + std::size_t(v)] = std::move(acc);
      }
    }
  }
}

template <class Count>
Count kernel_count_paths(const Tournament& t, bool parallel) {
  const int n = t.n();
  std::vector<Count> dp;
  fill_path_table<Count>(t, -1, dp, parallel);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  Count total(0);
  for (int v = 0; v < n; ++v)
    total += dp[std::size_t(full) * std::size_t(n) + std::size_t(v)];
  return total;
}

template <class Count>
Count kernel_count_cycles(const Tournament& t, bool parallel) {
  const int n = t.n();
  if (n < 3) return Count(0);
  std::vector<Count> dp;
  fill_path_table<Count>(t, 0, dp, parallel);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  const std::uint64_t closers = t.in_mask64(0);  // v with arc v->0
  Count total(0);
  for (int v = 1; v < n; ++v)
    if ((closers >> v) & 1u)
      total += dp[std::size_t(full) * std::size_t(n) + std::size_t(v)];
  return total;
}

/// P(T,k) for k = 1..k_max. hp[A] (Hamilton paths of the subtournament on
/// A) comes from one shared path table; the partition sweep peels, at each
/// step, the block containing the lowest uncovered vertex, so every
/// unordered partition into paths arises exactly once:
///     pc_j[S] = sum over A subset of S with min(S) in A of
///               hp[A] * pc_{j-1}[S \ A].
template <class Count>
std::vector<Count> kernel_cover_counts(const Tournament& t, int k_max,
                                       bool parallel) {
  const int n = t.n();
  const std::size_t nsub = std::size_t(1) << n;
  std::vector<Count> hp(nsub, Count(0));
  {
    std::vector<Count> dp;
    fill_path_table<Count>(t, -1, dp, parallel);
    const std::int64_t subsets = std::int64_t(nsub);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t s = 1; s < subsets; ++s) {
      Count acc(0);
      for (std::uint32_t vb = std::uint32_t(s); vb != 0; vb &= vb - 1)
        acc += dp[std::size_t(s) * std::size_t(n) +
                  std::size_t(std::countr_zero(vb))];
      hp[std::size_t(s)] = std::move(acc);
    }
  }  // path table freed before the 3^n sweep

  std::vector<Count> result(static_cast<std::size_t>(k_max));
  std::vector<Count> prev(nsub, Count(0)), cur(nsub, Count(0));
  prev[0] = 1;  // zero parts cover exactly the empty set
  const std::uint32_t full = std::uint32_t(nsub - 1);
  for (int j = 1; j <= k_max; ++j) {
    const std::int64_t subsets = std::int64_t(nsub);
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (std::int64_t si = 1; si < subsets; ++si) {
      const std::uint32_t s = std::uint32_t(si);
      if (std::popcount(s) < j) {
        cur[std::size_t(s)] = 0;
        continue;
      }
      const std::uint32_t low = s & (0u - s);
      const std::uint32_t rest = s ^ low;
      Count acc(0);
      // submasks b of rest, descending; the peeled block is b | low
      std::uint32_t b = rest;
      while (true) {
        const std::uint32_t block = b | low;
        const Count& tail = prev[std::size_t(s ^ block)];
        if (tail != 0) acc += hp[std::size_t(block)] * tail;
        if (b == 0) break;
        b = (b - 1) & rest;
      }
      cur[std::size_t(s)] = std::move(acc);
    }
    cur[0] = 0;
    result[std::size_t(j) - 1] = cur[std::size_t(full)];
    std::swap(prev, cur);
  }
  return result;
}

}  // namespace trn::detail
