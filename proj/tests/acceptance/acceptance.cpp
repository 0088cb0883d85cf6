// Acceptance gate for the toolkit. Ten checks cover the composition
// identity, its Stirling-sum lower bound, the closed forms, the oracle
// equivalences, the asymptotics, the sampling experiments, and the
// always-a-path construction. The program prints one PASS/FAIL line per
// check.
//
// Check 9 deserves a note: its third clause compares the triangular
// sampler's mean at n = 9 against the large-n reference value 2(n-1)!/2^n.
// The exact expectation of that experiment at n = 9 is 11736/64 = 183.375
// (derived term by term from the composition identity), which differs from
// the reference 157.5 by hundreds of standard errors at 10^4 samples, so
// the clause as stated can never pass at this size. It is reported FAIL
// (expected), and the two finite-size statements that are actually testable
// are verified instead: the sampler agrees with 183.375, and the exact
// mean-to-reference ratio decreases strictly toward 1 as n grows. The exit
// status is 0 exactly when every check lands the way this file documents
// (nine green, that one clause red, its substitutes green).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trn/asymptotics.hpp"
#include "trn/exact.hpp"
#include "trn/formula.hpp"
#include "trn/logvalue.hpp"
#include "trn/montecarlo.hpp"
#include "trn/rng.hpp"
#include "trn/tournament.hpp"

namespace {

using trn::BigCount;
using Rat = boost::multiprecision::cpp_rational;

std::vector<trn::Tournament> all_tournaments(int m) {
  const int pairs = m * (m - 1) / 2;
  std::vector<trn::Tournament> out;
  out.reserve(std::size_t(1) << pairs);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs); ++bits)
    out.push_back(trn::from_pair_bits(m, bits));
  return out;
}

// ---- checks 1 and 2: one sweep over every triple of parts of size <= 3 ----

struct SweepOutcome {
  bool identity_ok = true;
  bool bound_ok = true;
  long long instances = 0;
};

SweepOutcome run_sweep() {
  SweepOutcome o;
  std::vector<std::vector<trn::Tournament>> pool(4);
  for (int m = 1; m <= 3; ++m) pool[std::size_t(m)] = all_tournaments(m);
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 1; m2 <= 3; ++m2)
      for (int m3 = 1; m3 <= 3; ++m3) {
        const BigCount lb = trn::lower_bound(m1, m2, m3);
        for (const auto& t1 : pool[std::size_t(m1)])
          for (const auto& t2 : pool[std::size_t(m2)])
            for (const auto& t3 : pool[std::size_t(m3)]) {
              ++o.instances;
              const BigCount h = trn::hamilton_count_triangular(t1, t2, t3);
              const BigCount dp = trn::count_hamilton_cycles(
                  trn::compose_c3(t1, t2, t3).composed());
              if (h != dp) o.identity_ok = false;
              if (h < lb) o.bound_ok = false;
              const bool all_transitive = trn::is_transitive(t1) &&
                                          trn::is_transitive(t2) &&
                                          trn::is_transitive(t3);
              if ((h == lb) != all_transitive) o.bound_ok = false;
            }
      }
  return o;
}

// ---- check 3: closed form for all-transitive parts vs direct counts ----

bool check_transitive_formula() {
  bool ok = trn::transitive_triangular_count(2) == 5 &&
            trn::transitive_triangular_count(3) == 181;
  for (int m : {2, 3}) {
    const trn::Tournament composed =
        trn::compose_c3(trn::make_transitive(m), trn::make_transitive(m),
                        trn::make_transitive(m))
            .composed();
    const BigCount closed = trn::transitive_triangular_count(m);
    ok = ok && closed == trn::count_hamilton_cycles(composed);
    ok = ok && closed == trn::brute_force_cycles(composed);
  }
  return ok;
}

// ---- check 4: cover profile of a transitive tournament ----

bool check_transitive_covers() {
  for (int m = 1; m <= 10; ++m) {
    const trn::PathCoverProfile profile =
        trn::path_cover_profile(trn::make_transitive(m));
    for (int k = 1; k <= m; ++k)
      if (profile.at(k) != trn::stirling2(m, k)) return false;
  }
  return true;
}

// ---- check 5: DP counters vs independent enumeration oracles ----

struct OracleOutcome {
  bool ok = true;
  long long exhaustive = 0;
  long long random_cases = 0;
};

OracleOutcome check_oracles() {
  OracleOutcome o;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_tournaments(n)) {
      ++o.exhaustive;
      if (trn::count_hamilton_cycles(t) != trn::brute_force_cycles(t))
        o.ok = false;
      const trn::PathCoverProfile profile = trn::path_cover_profile(t);
      for (int k = 1; k <= n; ++k)
        if (profile.at(k) != trn::brute_force_path_covers(t, k)) o.ok = false;
    }
  for (int i = 0; i < 200; ++i) {
    ++o.random_cases;
    const int n = 6 + i % 4;
    const trn::Tournament t =
        trn::make_random(n, trn::derive_seed(0x05AC1E5, std::uint64_t(i)));
    if (trn::count_hamilton_cycles(t) != trn::brute_force_cycles(t))
      o.ok = false;
  }
  return o;
}

// ---- check 6: relative error of the ordered-set-partition closed form ----

// The closed form approximates f(m) by m! / (2 ln(2)^(m+1)). Its relative
// errors at m = 10, 20, 30, 40 sit between 1e-11 and 1e-40 — far below what
// a double log-space ratio can resolve — so the strict-decrease clause is
// certified in exact rational interval arithmetic instead: enclose ln 2 by
// a partial sum of 2*atanh(1/3) plus a geometric tail bound, and propagate
// the interval through the (monotone in ln 2) error expression.

struct Interval {
  Rat lo, hi;
};

Interval ln2_interval() {
  constexpr int terms = 100;
  Rat sum = 0;
  Rat power(1, 3);  // (1/3)^(2k+1)
  const Rat ratio(1, 9);
  for (int k = 0; k <= terms; ++k) {
    sum += power / (2 * k + 1);
    power *= ratio;
  }
  // power is now (1/3)^(2*terms+3); the dropped tail is bounded by a
  // geometric series with ratio 1/9, hence the 9/8 factor
  const Rat tail = power / (2 * terms + 3) * Rat(9, 8);
  return {2 * sum, 2 * (sum + tail)};
}

// relative error f(m) * 2 * L^(m+1) / m! - 1; strictly increasing in L > 0
Rat closed_form_error(int m, const Rat& log_two) {
  Rat power = 1;
  for (int i = 0; i <= m; ++i) power *= log_two;
  return Rat(trn::ordered_bell(m)) * 2 * power / Rat(trn::factorial(m)) - 1;
}

bool check_ordered_bell_asymptotic() {
  const double r40 =
      trn::wilf_f_asymptotic(40).ratio_to(trn::ln_of(trn::ordered_bell(40)));
  bool ok = std::fabs(r40 - 1) < 1e-6;

  const Interval log_two = ln2_interval();
  Rat prev_abs_lo;
  bool first = true;
  for (int m : {10, 20, 30, 40}) {
    const Rat e_lo = closed_form_error(m, log_two.lo);
    const Rat e_hi = closed_form_error(m, log_two.hi);
    // |error| is only certified when the enclosure has one sign
    Rat abs_lo, abs_hi;
    if (e_hi < 0) {
      abs_lo = -e_hi;
      abs_hi = -e_lo;
    } else if (e_lo > 0) {
      abs_lo = e_lo;
      abs_hi = e_hi;
    } else {
      ok = false;
      continue;
    }
    if (!first && !(abs_hi < prev_abs_lo)) ok = false;
    prev_abs_lo = abs_lo;
    first = false;
  }
  return ok;
}

// ---- check 7: closed asymptotic vs the exact all-transitive count ----

bool check_corollary_convergence(double out_dev[3]) {
  bool ok = true;
  int i = 0;
  for (int n : {150, 450, 900}) {
    const double ratio = trn::corollary_asymptotic(n).ratio_to(
        trn::ln_of(trn::transitive_triangular_count(n / 3)));
    out_dev[i++] = std::fabs(ratio - 1);
  }
  ok = ok && out_dev[2] < 0.05;
  ok = ok && out_dev[1] < out_dev[0] && out_dev[2] < out_dev[1];
  return ok;
}

// ---- check 8: cross-arcs-only count vs its asymptotic and the target ----

bool check_internal_free() {
  const double ratio = trn::internal_free_asymptotic(300).ratio_to(
      trn::ln_of(trn::internal_free_count(100)));
  bool ok = std::fabs(ratio - 1) < 0.01;
  for (int n = 3; n <= 300; n += 3)
    ok = ok &&
         trn::ln_of(trn::internal_free_count(n / 3)).ln() >
             trn::moser_bound(n).ln();
  return ok;
}

// ---- check 9: sampling experiments vs classical expectations ----

BigCount binomial(int a, int b) {
  return trn::factorial(a) / (trn::factorial(b) * trn::factorial(a - b));
}

// number of ways to split m labeled vertices into k nonempty ordered
// sequences: C(m-1, k-1) * m! / k!
BigCount sequence_partitions(int m, int k) {
  return binomial(m - 1, k - 1) * trn::factorial(m) / trn::factorial(k);
}

// Exact expectation of the triangular experiment with three independent
// uniform parts of size m. Averaging the composition identity term by term:
// each k-path cover fixes m - k arcs, so E P(T,k) = L(m,k) / 2^(m-k) with
// L(m,k) the sequence-partition count, and independence gives
//   E H = sum_k (L(m,k))^3 (k!^3/k) / 8^(m-k).
Rat exact_triangular_mean(int m) {
  BigCount numerator = 0;
  for (int k = 1; k <= m; ++k) {
    const BigCount l = sequence_partitions(m, k);
    const BigCount scale = BigCount(1) << (3 * (k - 1));
    numerator += l * l * l * trn::joining_factor(k) * scale;
  }
  const BigCount denominator = BigCount(1) << (3 * (m - 1));
  return Rat(numerator) / Rat(denominator);
}

Rat reference_expectation(int m) {  // 2 (3m-1)! / 2^(3m)
  const BigCount numerator = 2 * trn::factorial(3 * m - 1);
  const BigCount denominator = BigCount(1) << (3 * m);
  return Rat(numerator) / Rat(denominator);
}

struct SamplingOutcome {
  trn::ExperimentReport paths, cycles, triangular;
  bool paths_ok = false, cycles_ok = false;
  bool triangular_as_written = false;  // documented: stays false
  double finite_mean = 0, finite_z = 0;
  bool finite_ok = false;
  std::vector<double> ratios;  // exact mean / reference at n = 9,15,21,27
  bool ratio_ok = false;
};

SamplingOutcome check_sampling() {
  SamplingOutcome o;
  const std::uint64_t seed = 2026;
  const long long samples = 10000;
  o.paths = trn::run_montecarlo(trn::McKind::szele_paths, 7, samples, seed);
  o.cycles = trn::run_montecarlo(trn::McKind::szele_cycles, 6, samples, seed);
  o.triangular = trn::run_montecarlo(trn::McKind::wormald, 9, samples, seed);
  o.paths_ok = std::fabs(o.paths.z_score) < 3;
  o.cycles_ok = std::fabs(o.cycles.z_score) < 3;
  o.triangular_as_written = std::fabs(o.triangular.z_score) < 3;

  const Rat finite = exact_triangular_mean(3);
  o.finite_mean = finite.convert_to<double>();
  o.finite_z = (o.triangular.mean - o.finite_mean) / o.triangular.std_error;
  o.finite_ok = std::fabs(o.finite_z) < 3;

  o.ratio_ok = true;
  Rat prev;
  bool first = true;
  for (int m : {3, 5, 7, 9}) {
    const Rat ratio = exact_triangular_mean(m) / reference_expectation(m);
    o.ratios.push_back(ratio.convert_to<double>());
    if (!(ratio > 1)) o.ratio_ok = false;
    if (!first && !(ratio < prev)) o.ratio_ok = false;
    prev = ratio;
    first = false;
  }
  return o;
}

// ---- check 10: every tournament yields a checkable Hamilton path ----

bool check_path_construction() {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_tournaments(n)) {
      if (!trn::validate_hamilton_path(t, trn::find_hamilton_path(t)))
        return false;
      if (trn::path_cover_profile(t).at(1) % 2 == 0) return false;
    }
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + int(trn::derive_seed(0xAC10, std::uint64_t(i)) % 16);
    const trn::Tournament t =
        trn::make_random(n, trn::derive_seed(0xAC10 + 1, std::uint64_t(i)));
    if (!trn::validate_hamilton_path(t, trn::find_hamilton_path(t)))
      return false;
  }
  return true;
}

// ---- reporting ----

struct Line {
  bool pass = false;
  bool expect_pass = true;
  bool details_ok = true;  // sub-statements landed as documented
};

void print_line(int index, const Line& line, const std::string& text) {
  const char* tag = line.pass ? "PASS" : "FAIL";
  const char* qualifier = "";
  if (!line.expect_pass) qualifier = line.pass ? " (unexpected)" : " (expected)";
  std::printf("[%2d] %s%s  %s\n", index, tag, qualifier, text.c_str());
}

}  // namespace

int main() {
  std::printf("acceptance checks: exact and asymptotic Hamilton-cycle counting\n");

  std::vector<Line> lines(11);  // 1-based
  auto guard = [](Line& line, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      line.pass = false;
      line.details_ok = false;
      std::printf("      exception: %s\n", e.what());
    }
  };

  // 1 & 2
  SweepOutcome sweep;
  guard(lines[1], [&] {
    sweep = run_sweep();
    lines[1].pass = sweep.identity_ok;
    lines[2].pass = sweep.bound_ok;
  });
  print_line(1, lines[1],
             "composition identity: cover-profile formula equals the subset-DP "
             "cycle count on all " +
                 std::to_string(sweep.instances) +
                 " triples with part sizes up to 3");
  print_line(2, lines[2],
             "Stirling-sum lower bound holds on the same sweep, with equality "
             "exactly in the all-transitive cases");

  // 3
  guard(lines[3],
        [&] { lines[3].pass = check_transitive_formula(); });
  print_line(3, lines[3],
             "all-transitive closed form gives 5 (part size 2) and 181 (part "
             "size 3), both confirmed by direct enumeration");

  // 4
  guard(lines[4], [&] { lines[4].pass = check_transitive_covers(); });
  print_line(4, lines[4],
             "k-path-cover counts of transitive tournaments equal Stirling "
             "numbers S(m,k) for every m <= 10");

  // 5
  OracleOutcome oracles;
  guard(lines[5], [&] {
    oracles = check_oracles();
    lines[5].pass = oracles.ok;
  });
  print_line(5, lines[5],
             "DP counters match independent enumeration on all " +
                 std::to_string(oracles.exhaustive) +
                 " tournaments with n <= 5 (cycles and all cover sizes) and " +
                 std::to_string(oracles.random_cases) +
                 " random tournaments with 6 <= n <= 9");

  // 6
  guard(lines[6], [&] { lines[6].pass = check_ordered_bell_asymptotic(); });
  print_line(6, lines[6],
             "ordered-set-partition closed form: relative error below 1e-6 at "
             "m = 40 and |error| strictly decreasing over m = 10,20,30,40 "
             "(exact rational-interval certificate)");

  // 7
  double corollary_dev[3] = {0, 0, 0};
  guard(lines[7],
        [&] { lines[7].pass = check_corollary_convergence(corollary_dev); });
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "closed asymptotic vs exact all-transitive count: |ratio-1| "
                  "= %.3g / %.3g / %.3g at n = 150/450/900, monotone and "
                  "below 0.05",
                  corollary_dev[0], corollary_dev[1], corollary_dev[2]);
    print_line(7, lines[7], buf);
  }

  // 8
  guard(lines[8], [&] { lines[8].pass = check_internal_free(); });
  print_line(8, lines[8],
             "cross-arcs-only cycle count: asymptotic within 1% at n = 300, "
             "and exact count above the (n/3e)^n target for every 3 | n up "
             "to 300");

  // 9
  SamplingOutcome mc;
  guard(lines[9], [&] {
    mc = check_sampling();
    lines[9].pass =
        mc.paths_ok && mc.cycles_ok && mc.triangular_as_written;
    lines[9].expect_pass = false;  // the triangular clause cannot pass at n = 9
    lines[9].details_ok = mc.paths_ok && mc.cycles_ok &&
                          !mc.triangular_as_written && mc.finite_ok &&
                          mc.ratio_ok;
  });
  print_line(9, lines[9],
             "sampling means within 3 SE of the classical values: paths and "
             "cycles clauses hold; the triangular clause compares a size-9 "
             "run against the large-n reference and cannot hold there");
  if (mc.ratios.size() == 4) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "      paths  n=7:  mean %.4f vs 78.75,  z = %+.3f  (within band)",
                  mc.paths.mean, mc.paths.z_score);
    std::printf("%s\n", buf);
    std::snprintf(buf, sizeof buf,
                  "      cycles n=6:  mean %.4f vs 1.875,  z = %+.3f  (within band)",
                  mc.cycles.mean, mc.cycles.z_score);
    std::printf("%s\n", buf);
    std::snprintf(buf, sizeof buf,
                  "      triangular n=9: mean %.4f vs reference 157.5, z = %+.1f "
                  "(outside band, as documented)",
                  mc.triangular.mean, mc.triangular.z_score);
    std::printf("%s\n", buf);
    std::snprintf(buf, sizeof buf,
                  "      same run vs the exact size-9 expectation %.3f: z = %+.3f "
                  "(within band)",
                  mc.finite_mean, mc.finite_z);
    std::printf("%s\n", buf);
    std::printf(
        "      exact mean / reference at n = 9,15,21,27: %.5f > %.5f > %.5f > "
        "%.5f"
        " (falls strictly toward 1)\n",
        mc.ratios[0], mc.ratios[1], mc.ratios[2], mc.ratios[3]);
  }

  // 10
  guard(lines[10], [&] { lines[10].pass = check_path_construction(); });
  print_line(10, lines[10],
             "insertion-built Hamilton paths validate on every tournament "
             "with n <= 5 and 500 random ones with n <= 16; one-path cover "
             "counts are all odd");

  bool as_documented = true;
  int green = 0;
  for (int i = 1; i <= 10; ++i) {
    if (lines[std::size_t(i)].pass) ++green;
    if (lines[std::size_t(i)].pass != lines[std::size_t(i)].expect_pass ||
        !lines[std::size_t(i)].details_ok)
      as_documented = false;
  }
  std::printf(
      "summary: %d of 10 checks green; check 9 is red by design at this "
      "size, with its finite-size substitutes verified. outcomes %s the "
      "documented expectations.\n",
      green, as_documented ? "match" : "DO NOT match");
  return as_documented ? 0 : 1;
}
