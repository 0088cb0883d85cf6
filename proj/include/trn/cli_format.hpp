#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trn/bigcount.hpp"
#include "trn/convergence.hpp"
#include "trn/exact.hpp"
#include "trn/montecarlo.hpp"

// Rendered output of the CLI subcommands. The field names and column
// headers below are frozen contracts (plotting scripts depend on them):
//
//   counts        {"n":..,"count":"<decimal>"}
//   covers        {"n":..,"counts":["<decimal>",...]}   (k = 1..n in order)
//   triangular    {"m1":..,"m2":..,"m3":..,"n":..,"mode":..,"seed":..,
//                  "count":..,"lower_bound":..,"difference":..,"equal":..,
//                  "brute_force_checked":..,"brute_force_agrees":..}
//   montecarlo    {"kind":..,"n":..,"samples":..,"seed":..,"mean":..,
//                  "variance":..,"std_error":..,"theoretical":..,
//                  "z_score":..}
//   convergence   CSV "m,exact_log,asymptotic_log,ratio"
//
// Counts are decimal strings, never floats. CSV log columns carry 15
// significant digits.

namespace trn {

std::string format_count_json(int n, const BigCount& count);
std::string format_covers_json(const PathCoverProfile& profile);

struct TriangularResult {
  int m1 = 0, m2 = 0, m3 = 0;
  std::string mode;                       // "transitive" or "random"
  std::optional<std::uint64_t> seed;      // present for random mode
  BigCount count;
  BigCount bound;
  bool brute_force_checked = false;
  bool brute_force_agrees = false;
};
std::string format_triangular_json(const TriangularResult& r);

std::string format_report_json(McKind kind, const ExperimentReport& report);

std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string format_convergence_json(const std::vector<ConvergenceRow>& rows);

}  // namespace trn
