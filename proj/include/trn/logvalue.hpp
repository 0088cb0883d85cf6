#pragma once

#include "trn/bigcount.hpp"

namespace trn {

/// A positive real held as its natural logarithm. Magnitudes here routinely
/// pass 10^2000, so exponentiation is deferred; comparisons and ratios are
/// done on the log scale.
class LogValue {
 public:
  static LogValue from_ln(double ln_value) { return LogValue(ln_value); }
  static LogValue from_value(double positive_value);

  double ln() const { return ln_; }

  /// exp(this - other), the plain-scale ratio of the two represented values.
  double ratio_to(const LogValue& other) const;

 private:
  explicit LogValue(double ln_value) : ln_(ln_value) {}
  double ln_;
};

/// Natural log of a positive big integer, from its bit length and top bits.
/// Relative error is at the 1e-15 level, comfortably inside the 1e-12
/// budget the downstream comparisons assume.
LogValue ln_of(const BigCount& x);

}  // namespace trn
