// trn_bench — timing comparison between the serial reference counters and
// the parallel kernels, on seeded random tournaments. Also recomputes every
// result both ways and fails (exit 1) on any disagreement, so a benchmark
// run doubles as a consistency check.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "trn/bigcount.hpp"
#include "trn/exact.hpp"
#include "trn/tournament.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct Row {
  const char* kernel;
  int n;
  double serial_s;
  double parallel_s;
  bool equal;
};

template <class Serial, class Parallel, class Equal>
Row time_pair(const char* kernel, const trn::Tournament& t, Serial serial,
              Parallel parallel, Equal equal) {
  auto start = std::chrono::steady_clock::now();
  const auto serial_result = serial(t);
  const double serial_s = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const auto parallel_result = parallel(t);
  const double parallel_s = seconds_since(start);

  return {kernel, t.n(), serial_s, parallel_s,
          equal(serial_result, parallel_result)};
}

const auto kCountsEqual = [](const trn::BigCount& a, const trn::BigCount& b) {
  return a == b;
};

const auto kProfilesEqual = [](const trn::PathCoverProfile& a,
                               const trn::PathCoverProfile& b) {
  return a.m == b.m && a.counts == b.counts;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial-reference vs parallel-kernel timing comparison"};
  int paths_max_n = 18;
  int covers_max_n = 14;
  std::uint64_t seed = 2026;
  app.add_option("--paths-max-n", paths_max_n,
                 "largest n for the path/cycle counters (default 18)")
      ->check(CLI::Range(4, 24));
  app.add_option("--covers-max-n", covers_max_n,
                 "largest n for the cover profile (default 14)")
      ->check(CLI::Range(4, 20));
  app.add_option("--seed", seed, "seed for the random instances");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-8s %4s %12s %12s %9s %6s\n", "kernel", "n", "serial[s]",
              "parallel[s]", "speedup", "equal");

  std::vector<Row> rows;
  for (int n = 12; n <= paths_max_n; n += 2) {
    const trn::Tournament t = trn::make_random(n, seed + std::uint64_t(n));
    rows.push_back(time_pair(
        "paths", t,
        [](const trn::Tournament& x) {
          return trn::reference::count_hamilton_paths(x);
        },
        [](const trn::Tournament& x) { return trn::count_hamilton_paths(x); },
        kCountsEqual));
    rows.push_back(time_pair(
        "cycles", t,
        [](const trn::Tournament& x) {
          return trn::reference::count_hamilton_cycles(x);
        },
        [](const trn::Tournament& x) { return trn::count_hamilton_cycles(x); },
        kCountsEqual));
  }
  for (int n = 10; n <= covers_max_n; n += 2) {
    const trn::Tournament t = trn::make_random(n, seed ^ std::uint64_t(n));
    rows.push_back(time_pair(
        "covers", t,
        [](const trn::Tournament& x) {
          return trn::reference::path_cover_profile(x);
        },
        [](const trn::Tournament& x) { return trn::path_cover_profile(x); },
        kProfilesEqual));
  }

  bool all_equal = true;
  for (const Row& r : rows) {
    const double speedup = r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0;
    std::printf("%-8s %4d %12.4f %12.4f %8.2fx %6s\n", r.kernel, r.n,
                r.serial_s, r.parallel_s, speedup, r.equal ? "yes" : "NO");
    all_equal = all_equal && r.equal;
  }
  if (!all_equal) {
    std::fprintf(stderr, "MISMATCH between serial and parallel results\n");
    return 1;
  }
  return 0;
}
