#include "trn/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "exact_kernels.hpp"
#include "trn/formula.hpp"
#include "trn/rng.hpp"
#include "trn/tournament.hpp"

namespace trn {

namespace {

// Hard size limit for the 64-bit per-sample counters: n! fits in uint64
// through n = 20.
constexpr int kMcCap = 20;

std::uint64_t sample_count(McKind kind, int n, std::uint64_t master,
                           std::uint64_t index) {
  switch (kind) {
    case McKind::szele_paths: {
      Tournament t = make_random(n, derive_seed(master, index));
      return detail::kernel_count_paths<std::uint64_t>(t, false);
    }
    case McKind::szele_cycles: {
      Tournament t = make_random(n, derive_seed(master, index));
      return detail::kernel_count_cycles<std::uint64_t>(t, false);
    }
    case McKind::wormald: {
      const int m = n / 3;
      Tournament t1 = make_random(m, derive_seed(master, 3 * index));
      Tournament t2 = make_random(m, derive_seed(master, 3 * index + 1));
      Tournament t3 = make_random(m, derive_seed(master, 3 * index + 2));
      return detail::kernel_count_cycles<std::uint64_t>(
          compose_c3(t1, t2, t3).composed(), false);
    }
  }
  throw std::invalid_argument("unknown experiment kind");
}

double theoretical_expectation(McKind kind, int n) {
  // Exact rational n!/2^(n-1) etc., evaluated through one big-int division
  // by a power of two held in the exponent.
  switch (kind) {
    case McKind::szele_paths:
      return std::ldexp(factorial(n).convert_to<double>(), -(n - 1));
    case McKind::szele_cycles:
      return std::ldexp(factorial(n - 1).convert_to<double>(), -n);
    case McKind::wormald:
      return std::ldexp(factorial(n - 1).convert_to<double>(), -(n - 1));
  }
  throw std::invalid_argument("unknown experiment kind");
}

}  // namespace

const char* to_string(McKind kind) {
  switch (kind) {
    case McKind::szele_paths: return "szele-paths";
    case McKind::szele_cycles: return "szele-cycles";
    case McKind::wormald: return "wormald";
  }
  return "?";
}

McKind mc_kind_from_string(const std::string& name) {
  if (name == "szele-paths") return McKind::szele_paths;
  if (name == "szele-cycles") return McKind::szele_cycles;
  if (name == "wormald") return McKind::wormald;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

ExperimentReport run_montecarlo(McKind kind, int n, long long samples,
                                std::uint64_t seed) {
  if (samples < 2)
    throw std::invalid_argument("need at least 2 samples");
  if (n > kMcCap)
    throw cap_exceeded(n, kMcCap, "exact per-sample counting");
  if (kind == McKind::szele_paths) {
    if (n < 1) throw std::invalid_argument("paths need n >= 1");
  } else if (kind == McKind::szele_cycles) {
    if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  } else {
    if (n < 3 || n % 3 != 0)
      throw std::invalid_argument("triangular experiment needs 3 | n, n >= 3");
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < samples; ++i)
    counts[std::size_t(i)] = sample_count(kind, n, seed, std::uint64_t(i));

  // Aggregate in sample order: identical output for any thread count.
  double mean = 0;
  for (long long i = 0; i < samples; ++i)
    mean += double(counts[std::size_t(i)]);
  mean /= double(samples);
  double ss = 0;
  for (long long i = 0; i < samples; ++i) {
    const double d = double(counts[std::size_t(i)]) - mean;
    ss += d * d;
  }

  ExperimentReport r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  r.mean = mean;
  r.variance = ss / double(samples - 1);
  r.std_error = std::sqrt(r.variance / double(samples));
  r.theoretical = theoretical_expectation(kind, n);
  r.z_score = r.std_error > 0
                  ? (r.mean - r.theoretical) / r.std_error
                  : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace trn
