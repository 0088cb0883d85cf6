#pragma once

#include "trn/logvalue.hpp"

namespace trn {

/// Mean and deviation scale of the ordered-set-partition block-count
/// distribution: p(m,k) = S(m,k) k! / f(m) is asymptotically normal with
/// mean mu*m and variance sigma^2*m.
struct NormalParams {
  double mu;     // 1 / (2 log 2)
  double sigma;  // sqrt(1 - log 2) / (2 log 2)

  static NormalParams bender();
  double variance() const { return sigma * sigma; }
};

/// log of (n/3e)^n, the classical target count for explicit constructions.
LogValue moser_bound(int n);

/// log of sqrt(8 pi^3 n / 3) * (n/3e)^n, the asymptotic form of the
/// cross-arcs-only cycle count (n/3)!^3 / (n/3). Requires 3 | n.
LogValue internal_free_asymptotic(int n);

/// log of m! / (2 (log 2)^(m+1)), the asymptotic form of the ordered Bell
/// number f(m).
LogValue wilf_f_asymptotic(int m);

/// Normal density with mean mu*m and variance sigma^2*m at k.
double bender_pmf(int m, double k);

/// log of f(m)^3 * sqrt(3) sqrt(2) sqrt(pi) / (3 mu sigma^2 (2 pi)^(3/2) m^2),
/// the normal-integral approximation of sum_k S(m,k)^3 k!^3/k. By default
/// f(m) is the exact ordered Bell value (logged from the big integer), which
/// isolates the integral step; with use_wilf_f the asymptotic f substitutes,
/// reproducing the full approximation chain. Requires m >= 2.
LogValue integral_approx_sum(int m, bool use_wilf_f = false);

/// log of (1/(1 - log 2)) * (n-1)! / (3 log 2)^n, the asymptotic Hamilton
/// cycle count of the all-transitive triangular composition on n vertices.
/// Requires 3 | n.
LogValue corollary_asymptotic(int n);

/// Expected Hamilton paths in a random n-vertex tournament: n! / 2^(n-1).
/// Exact expectation, evaluated in log space.
LogValue szele_expected_paths(int n);

/// Expected Hamilton cycles in a random n-vertex tournament: (n-1)! / 2^n.
/// Requires n >= 3.
LogValue szele_expected_cycles(int n);

/// Expected Hamilton cycles of a triangular composition of three random
/// parts: 2 (n-1)! / 2^n. Requires n >= 3 and 3 | n.
LogValue wormald_expected_cycles(int n);

}  // namespace trn
