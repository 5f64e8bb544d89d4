#pragma once

#include "hyperid/real.hpp"

#include <string>
#include <string_view>

namespace hyperid {

/// Extended-precision complex scalar. Every parameter of every series
/// (a, b, ..., z, q) is carried as a Complex.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(int v) : re(v), im(0) {}
  Complex(long v) : re(v), im(0) {}
  Complex(double v) : re(v), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const mpq_class& v) : re(v), im(0) {}

  /// Accepts "RE", "RE+IMi", "RE-IMi", "IMi"; parts may be "p/q" fractions.
  static Complex parse(std::string_view text);

  bool is_real() const noexcept { return im.is_zero(); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  /// True iff the value is exactly an integer m <= 0.
  bool is_nonpositive_integer() const noexcept {
    return im.is_zero() && re.is_integer() && re.sign() <= 0;
  }
  bool is_positive_integer() const noexcept {
    return im.is_zero() && re.is_integer() && re.sign() > 0;
  }

  std::string to_string(int digits) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& x);
Complex operator+(const Complex& x, const Complex& y);
Complex operator-(const Complex& x, const Complex& y);
Complex operator*(const Complex& x, const Complex& y);
Complex operator/(const Complex& x, const Complex& y);
Complex operator*(const Complex& x, const Real& y);
Complex operator/(const Complex& x, const Real& y);
bool operator==(const Complex& x, const Complex& y);
inline bool operator!=(const Complex& x, const Complex& y) { return !(x == y); }

Complex conj(const Complex& x);
Real abs(const Complex& x);
Real norm(const Complex& x);  // |x|^2
Real arg(const Complex& x);
Complex exp(const Complex& x);
/// Principal branch, arg in (-pi, pi].
Complex log(const Complex& x);
/// Principal branch square root (Re >= 0, branch cut on the negative axis).
Complex sqrt(const Complex& x);
Complex sin(const Complex& x);
Complex pow(const Complex& x, long n);
Complex pow(const Complex& x, const Complex& y);

/// Distance from x to the nearest integer m <= 0.
Real distance_to_nonpositive_integer(const Complex& x);

}  // namespace hyperid
