#pragma once

#include <string>
#include <vector>

namespace trn {

/// Exact/asymptotic pairs the convergence tables can measure.
enum class ConvergenceTarget {
  wilf,           // ordered Bell f(m) vs m!/(2 (log 2)^(m+1)); sizes are m
  corollary,      // transitive triangular count at part size m vs the
                  // (n-1)!/(3 log 2)^n form with n = 3m; sizes are m
  integral,       // same exact sum vs the normal-integral approximation
  internal_free,  // (n/3)!^3/(n/3) vs its closed asymptotic; sizes are n,
                  // each divisible by 3
};

const char* to_string(ConvergenceTarget target);
ConvergenceTarget convergence_target_from_string(const std::string& name);

/// One measured point: logs of both sides and their plain-scale ratio
/// exp(asymptotic_log - exact_log).
struct ConvergenceRow {
  int m = 0;  // part size, or n for internal_free
  double exact_log = 0;
  double asymptotic_log = 0;
  double ratio = 0;
};

/// Evaluates the target at each listed size. The exact side is always a big
/// integer logged exactly; tolerances live with the callers.
std::vector<ConvergenceRow> convergence_table(ConvergenceTarget target,
                                              const std::vector<int>& sizes);

}  // namespace trn
