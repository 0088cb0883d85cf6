// Serial reference counters: push-style subset DP in plain ascending-subset
// loops. Structurally independent of the layered pull kernels, which makes
// the two implementations meaningful cross-checks; the benchmark measures
// one against the other.

#include <bit>
#include <cstdint>

#include "trn/exact.hpp"

namespace trn::reference {

namespace {

void check_cap(const Tournament& t, int cap, const char* op) {
  if (t.n() > cap) throw cap_exceeded(t.n(), cap, op);
  if (t.n() > 30)
    throw std::invalid_argument("subset DP is limited to 30 vertices");
}

// dp[S*n + v] = paths with vertex set S ending at v, extended one vertex at
// a time. S \ {v} < S numerically, so a single ascending pass suffices.
std::vector<BigCount> path_table(const Tournament& t, int start) {
  const int n = t.n();
  const std::size_t nsub = std::size_t(1) << n;
  std::vector<BigCount> dp(nsub * std::size_t(n), BigCount(0));
  if (start >= 0)
    dp[(std::size_t(1) << start) * std::size_t(n) + std::size_t(start)] = 1;
  else
    for (int v = 0; v < n; ++v)
      dp[(std::size_t(1) << v) * std::size_t(n) + std::size_t(v)] = 1;
  for (std::uint32_t s = 1; s < nsub; ++s)
    for (int v = 0; v < n; ++v) {
      const BigCount& d = dp[std::size_t(s) * std::size_t(n) + std::size_t(v)];
      if (d == 0 || !((s >> v) & 1u)) continue;
      std::uint64_t ext = t.out_mask64(v) & ~std::uint64_t(s);
      for (; ext != 0; ext &= ext - 1) {
        const int u = std::countr_zero(ext);
        const std::uint32_t s2 = s | (std::uint32_t(1) << u);
        dp[std::size_t(s2) * std::size_t(n) + std::size_t(u)] += d;
      }
    }
  return dp;
}

}  // namespace

BigCount count_hamilton_paths(const Tournament& t, int cap) {
  check_cap(t, cap, "hamilton path counting");
  const int n = t.n();
  auto dp = path_table(t, -1);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  BigCount total = 0;
  for (int v = 0; v < n; ++v)
    total += dp[std::size_t(full) * std::size_t(n) + std::size_t(v)];
  return total;
}

BigCount count_hamilton_cycles(const Tournament& t, int cap) {
  check_cap(t, cap, "hamilton cycle counting");
  const int n = t.n();
  if (n < 3) return 0;
  auto dp = path_table(t, 0);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  BigCount total = 0;
  for (int v = 1; v < n; ++v)
    if (t.arc(v, 0))
      total += dp[std::size_t(full) * std::size_t(n) + std::size_t(v)];
  return total;
}

PathCoverProfile path_cover_profile(const Tournament& t, int cap) {
  check_cap(t, cap, "path cover counting");
  const int n = t.n();
  const std::size_t nsub = std::size_t(1) << n;

  std::vector<BigCount> hp(nsub, BigCount(0));
  {
    auto dp = path_table(t, -1);
    for (std::uint32_t s = 1; s < nsub; ++s) {
      BigCount acc = 0;
      for (std::uint32_t vb = s; vb != 0; vb &= vb - 1)
        acc += dp[std::size_t(s) * std::size_t(n) +
                  std::size_t(std::countr_zero(vb))];
      hp[std::size_t(s)] = std::move(acc);
    }
  }

  PathCoverProfile profile;
  profile.m = n;
  profile.counts.resize(std::size_t(n));
  std::vector<BigCount> prev(nsub, BigCount(0)), cur(nsub);
  prev[0] = 1;
  for (int j = 1; j <= n; ++j) {
    for (std::uint32_t s = 0; s < nsub; ++s) {
      if (s == 0 || std::popcount(s) < j) {
        cur[std::size_t(s)] = 0;
        continue;
      }
      const std::uint32_t low = s & (0u - s);
      const std::uint32_t rest = s ^ low;
      BigCount acc = 0;
      // submasks of rest in ascending order this time
      std::uint32_t b = 0;
      while (true) {
        acc += hp[std::size_t(b | low)] * prev[std::size_t(rest ^ b)];
        if (b == rest) break;
        b = (b - rest) & rest;
      }
      cur[std::size_t(s)] = std::move(acc);
    }
    profile.counts[std::size_t(j) - 1] = cur[nsub - 1];
    std::swap(prev, cur);
  }
  return profile;
}

}  // namespace trn::reference
