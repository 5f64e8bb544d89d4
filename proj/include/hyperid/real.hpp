#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperid {

/// Binary precision used for every Real created on the calling thread.
mpfr_prec_t working_bits() noexcept;

/// Number of bits needed to carry `decimal_digits` significant decimal digits.
mpfr_prec_t bits_for_digits(int decimal_digits) noexcept;

/// Sets the calling thread's working precision for the guard's lifetime.
/// Guards nest; the previous precision is restored on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int decimal_digits);
  ~PrecisionGuard();

  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Extended-precision real backed by MPFR. New values take the thread's
/// working precision; copies keep the precision of their source.
class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(long long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(const mpq_class& v);
  explicit Real(const mpz_class& v);

  /// Parses a decimal or "p/q" literal; throws std::invalid_argument.
  static Real parse(std::string_view text);
  static Real pi();
  static Real ln10();

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Exact conversion; the value must be finite.
  mpq_class to_rational() const;

  /// At most `digits` significant digits, trailing zeros dropped (printf %g style).
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  friend Real operator/(const Real& x, const Real& y);

  friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.value_, y.value_) != 0; }
  friend bool operator!=(const Real& x, const Real& y) { return !(x == y); }
  friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.value_, y.value_) != 0; }
  friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.value_, y.value_) != 0; }
  friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.value_, y.value_) != 0; }
  friend bool operator>=(const Real& x, const Real& y) { return mpfr_greaterequal_p(x.value_, y.value_) != 0; }

 private:
  struct Uninit {};
  explicit Real(Uninit, mpfr_prec_t bits);

  friend Real unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
/// 10^e at working precision.
Real pow10(long e);
Real max(const Real& x, const Real& y);
Real min(const Real& x, const Real& y);

}  // namespace hyperid
