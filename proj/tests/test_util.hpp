#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"

#include <cmath>

namespace hyperid::testing {

inline PrecisionContext context(int digits = 30) {
  PrecisionContext ctx;
  ctx.digits = digits;
  return ctx;
}

/// |x - y| / |y| (absolute when y = 0), as a double.
inline double rel_err(const Complex& x, const Complex& y) {
  Real d = abs(x - y);
  Real s = abs(y);
  return s.is_zero() ? d.to_double() : (d / s).to_double();
}

inline Complex c(double re, double im = 0) { return Complex(Real(re), Real(im)); }

}  // namespace hyperid::testing
