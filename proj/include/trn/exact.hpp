#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trn/bigcount.hpp"
#include "trn/tournament.hpp"

namespace trn {

/// Default instance-size caps for the exponential counters. Counts outgrow
/// 64 bits well below these sizes (n!/2^(n-1) passes 2^63 near n = 23);
/// memory for the subset tables is the binding constraint, so both caps are
/// configuration values rather than hard limits.
inline constexpr int kDefaultPathCycleCap = 24;
inline constexpr int kDefaultCoverCap = 20;

/// Instance larger than the configured cap. Message names the cap.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(int n, int cap, const std::string& what_op);
  int n;
  int cap;
};

/// Ordered vertex sequence visiting every vertex once, consecutive pairs
/// joined by forward arcs.
struct HamiltonPath {
  std::vector<int> order;
};

/// counts(k) = P(T,k), the number of k-path covers of T, for k = 1..m.
struct PathCoverProfile {
  int m = 0;
  std::vector<BigCount> counts;  // counts[k-1] = P(T,k)

  const BigCount& at(int k) const { return counts.at(std::size_t(k) - 1); }
};

/// Exact number of spanning directed paths, by subset DP over
/// (vertex set, endpoint) states.
BigCount count_hamilton_paths(const Tournament& t,
                              int cap = kDefaultPathCycleCap);

/// Exact number of spanning directed cycles. Vertex 0 is anchored as the
/// cycle's starting point, so each cycle is counted exactly once without any
/// division; direction is fixed by the orientation.
BigCount count_hamilton_cycles(const Tournament& t,
                               int cap = kDefaultPathCycleCap);

/// Exact number of sets of k vertex-disjoint directed paths (single
/// vertices allowed) covering all n vertices. One subset-DP pass yields the
/// Hamilton-path count of every induced subtournament; a partition sweep
/// that always peels the block holding the lowest uncovered vertex then
/// assembles covers, generating each unordered partition exactly once.
BigCount count_k_path_covers(const Tournament& t, int k,
                             int cap = kDefaultCoverCap);

/// P(T,k) for every k in one pass; shares the Hamilton-path table across
/// all k.
PathCoverProfile path_cover_profile(const Tournament& t,
                                    int cap = kDefaultCoverCap);

/// A Hamilton path, built by insertion: each new vertex goes in front of
/// the first current-path vertex it beats, or at the end. Total on valid
/// tournaments — every tournament has one.
HamiltonPath find_hamilton_path(const Tournament& t);

/// Checks length, the permutation property and every consecutive arc.
bool validate_hamilton_path(const Tournament& t, const HamiltonPath& p);

/// Cycle count by enumerating all cyclic orders with vertex 0 fixed first.
/// Independent of the DP path; restricted to n <= 10.
BigCount brute_force_cycles(const Tournament& t);

/// k-path-cover count by enumerating all set partitions into k blocks and
/// all orderings within each block. Independent of the DP path; n <= 8.
BigCount brute_force_path_covers(const Tournament& t, int k);

/// Serial reference implementations of the counters above. Same contracts,
/// straightforward single-threaded loops with a push-style recurrence;
/// kept as the comparison baseline for the parallel kernels and exercised
/// against them in the tests and the benchmark.
namespace reference {

BigCount count_hamilton_paths(const Tournament& t,
                              int cap = kDefaultPathCycleCap);
BigCount count_hamilton_cycles(const Tournament& t,
                               int cap = kDefaultPathCycleCap);
PathCoverProfile path_cover_profile(const Tournament& t,
                                    int cap = kDefaultCoverCap);

}  // namespace reference

}  // namespace trn
