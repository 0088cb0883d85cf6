#include "trn/logvalue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trn {

LogValue LogValue::from_value(double positive_value) {
  if (!(positive_value > 0))
    throw std::invalid_argument("LogValue requires a positive value");
  return LogValue(std::log(positive_value));
}

double LogValue::ratio_to(const LogValue& other) const {
  return std::exp(ln_ - other.ln_);
}

LogValue ln_of(const BigCount& x) {
  if (x <= 0) throw std::invalid_argument("ln_of requires a positive integer");
  const unsigned bits = boost::multiprecision::msb(x);  // index of top bit
  if (bits <= 900)  // comfortably below double's 2^1024 ceiling
    return LogValue::from_ln(std::log(x.convert_to<double>()));
  const unsigned shift = bits - 500;
  const BigCount top = x >> shift;
  return LogValue::from_ln(std::log(top.convert_to<double>()) +
                           double(shift) * std::numbers::ln2);
}

}  // namespace trn
