#pragma once

#include "hyperid/real.hpp"

namespace hyperid {

/// Working precision and budgets for one evaluation.
struct PrecisionContext {
  int digits = 30;
  int guard_digits = 10;
  long max_terms = 1'000'000;
  /// Minimum accepted distance from gamma poles; 0 means exact poles only.
  double pole_margin = 0.0;

  /// Throws ConfigError unless digits >= 10, guard_digits >= 5, max_terms >= 1000.
  void validate() const;

  int working_digits() const noexcept { return digits + guard_digits; }
  /// 10^-digits: the accuracy promised for reported values.
  Real target_epsilon() const { return pow10(-digits); }
  /// 10^-(digits+guard): the resolution of internal arithmetic.
  Real working_epsilon() const { return pow10(-working_digits()); }
};

/// Enters the working precision of `ctx` on the calling thread.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(const PrecisionContext& ctx) : guard_(ctx.working_digits()) {}

 private:
  PrecisionGuard guard_;
};

}  // namespace hyperid
