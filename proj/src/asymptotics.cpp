#include "trn/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trn/formula.hpp"

namespace trn {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

void require_triple(int n, const char* op) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument(std::string(op) +
                                " needs n divisible by 3, n >= 3");
}

}  // namespace

NormalParams NormalParams::bender() {
  return {1.0 / (2.0 * kLn2), std::sqrt(1.0 - kLn2) / (2.0 * kLn2)};
}

LogValue moser_bound(int n) {
  if (n < 1) throw std::invalid_argument("moser bound needs n >= 1");
  return LogValue::from_ln(n * (std::log(double(n)) - std::log(3.0) - 1.0));
}

LogValue internal_free_asymptotic(int n) {
  require_triple(n, "internal-free asymptotic");
  const double envelope = 0.5 * std::log(8.0 * kPi * kPi * kPi * n / 3.0);
  return LogValue::from_ln(envelope + moser_bound(n).ln());
}

LogValue wilf_f_asymptotic(int m) {
  if (m < 1) throw std::invalid_argument("wilf asymptotic needs m >= 1");
  return LogValue::from_ln(std::lgamma(double(m) + 1.0) - std::log(2.0) -
                           (m + 1) * std::log(kLn2));
}

double bender_pmf(int m, double k) {
  if (m < 1) throw std::invalid_argument("bender pmf needs m >= 1");
  const NormalParams p = NormalParams::bender();
  const double mean = p.mu * m;
  const double var = p.variance() * m;
  const double d = k - mean;
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

LogValue integral_approx_sum(int m, bool use_wilf_f) {
  if (m < 2) throw std::invalid_argument("integral approximation needs m >= 2");
  const double f_ln =
      use_wilf_f ? wilf_f_asymptotic(m).ln() : ln_of(ordered_bell(m)).ln();
  const NormalParams p = NormalParams::bender();
  const double const_ln = 0.5 * (std::log(3.0) + std::log(2.0) + std::log(kPi)) -
                          std::log(3.0) - std::log(p.mu) -
                          2.0 * std::log(p.sigma) - 1.5 * std::log(2.0 * kPi) -
                          2.0 * std::log(double(m));
  return LogValue::from_ln(3.0 * f_ln + const_ln);
}

LogValue corollary_asymptotic(int n) {
  require_triple(n, "corollary asymptotic");
  return LogValue::from_ln(-std::log(1.0 - kLn2) + std::lgamma(double(n)) -
                           n * std::log(3.0 * kLn2));
}

LogValue szele_expected_paths(int n) {
  if (n < 1) throw std::invalid_argument("path expectation needs n >= 1");
  return LogValue::from_ln(std::lgamma(double(n) + 1.0) - (n - 1) * kLn2);
}

LogValue szele_expected_cycles(int n) {
  if (n < 3) throw std::invalid_argument("cycle expectation needs n >= 3");
  return LogValue::from_ln(std::lgamma(double(n)) - n * kLn2);
}

LogValue wormald_expected_cycles(int n) {
  require_triple(n, "triangular cycle expectation");
  return LogValue::from_ln(kLn2 + std::lgamma(double(n)) - n * kLn2);
}

}  // namespace trn
