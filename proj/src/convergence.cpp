#include "trn/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "trn/asymptotics.hpp"
#include "trn/formula.hpp"
#include "trn/logvalue.hpp"

namespace trn {

const char* to_string(ConvergenceTarget target) {
  switch (target) {
    case ConvergenceTarget::wilf: return "wilf";
    case ConvergenceTarget::corollary: return "corollary";
    case ConvergenceTarget::integral: return "integral";
    case ConvergenceTarget::internal_free: return "internal-free";
  }
  return "?";
}

ConvergenceTarget convergence_target_from_string(const std::string& name) {
  if (name == "wilf") return ConvergenceTarget::wilf;
  if (name == "corollary") return ConvergenceTarget::corollary;
  if (name == "integral") return ConvergenceTarget::integral;
  if (name == "internal-free") return ConvergenceTarget::internal_free;
  throw std::invalid_argument("unknown convergence target: " + name);
}

std::vector<ConvergenceRow> convergence_table(ConvergenceTarget target,
                                              const std::vector<int>& sizes) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(sizes.size());
  for (int m : sizes) {
    ConvergenceRow row;
    row.m = m;
    switch (target) {
      case ConvergenceTarget::wilf:
        row.exact_log = ln_of(ordered_bell(m)).ln();
        row.asymptotic_log = wilf_f_asymptotic(m).ln();
        break;
      case ConvergenceTarget::corollary:
        row.exact_log = ln_of(transitive_triangular_count(m)).ln();
        row.asymptotic_log = corollary_asymptotic(3 * m).ln();
        break;
      case ConvergenceTarget::integral:
        row.exact_log = ln_of(transitive_triangular_count(m)).ln();
        row.asymptotic_log = integral_approx_sum(m).ln();
        break;
      case ConvergenceTarget::internal_free:
        if (m < 3 || m % 3 != 0)
          throw std::invalid_argument(
              "internal-free sizes are n values divisible by 3");
        row.exact_log = ln_of(internal_free_count(m / 3)).ln();
        row.asymptotic_log = internal_free_asymptotic(m).ln();
        break;
    }
    row.ratio = std::exp(row.asymptotic_log - row.exact_log);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace trn
