#pragma once

#include <cstdint>
#include <string>

namespace trn {

/// Which classical expectation a Monte Carlo run is checked against.
enum class McKind {
  szele_paths,   // Hamilton paths of a random tournament vs n!/2^(n-1)
  szele_cycles,  // Hamilton cycles of a random tournament vs (n-1)!/2^n
  wormald,       // cycles of a triangular composition of three random
                 // equal parts vs 2(n-1)!/2^n
};

const char* to_string(McKind kind);
McKind mc_kind_from_string(const std::string& name);

/// Sample statistics of one experiment against its exact expectation.
/// std_error = sqrt(variance / samples); z_score = (mean - theoretical) /
/// std_error. Counting inside each sample is exact, so the tournament draw
/// is the only source of randomness.
struct ExperimentReport {
  int n = 0;
  long long samples = 0;
  double mean = 0;
  double variance = 0;
  double std_error = 0;
  double theoretical = 0;
  double z_score = 0;
  std::uint64_t seed = 0;
};

/// Runs `samples` independent draws. Sample i uses seeds derived as a fixed
/// function of (seed, i), and aggregation follows sample index, so the
/// report is byte-identical regardless of thread count. n is capped at 20
/// (counts per sample must fit the fast 64-bit kernels); wormald requires
/// 3 | n and cycles require n >= 3.
ExperimentReport run_montecarlo(McKind kind, int n, long long samples,
                                std::uint64_t seed);

}  // namespace trn
