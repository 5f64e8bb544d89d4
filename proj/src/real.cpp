#include "hyperid/real.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperid {
namespace {

thread_local mpfr_prec_t tls_bits = 128;

}  // namespace

mpfr_prec_t working_bits() noexcept { return tls_bits; }

mpfr_prec_t bits_for_digits(int decimal_digits) noexcept {
  // log2(10) ~ 3.3219; a few extra bits absorb the final rounding.
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 4;
}

PrecisionGuard::PrecisionGuard(int decimal_digits) : saved_(tls_bits) {
  if (decimal_digits < 1) throw std::invalid_argument("precision must be positive");
  tls_bits = bits_for_digits(decimal_digits);
}

PrecisionGuard::~PrecisionGuard() { tls_bits = saved_; }

Real::Real(Uninit, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real::Real() : Real(Uninit{}, tls_bits) { mpfr_set_zero(value_, 1); }
Real::Real(int v) : Real(Uninit{}, tls_bits) { mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(long v) : Real(Uninit{}, tls_bits) { mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(long long v) : Real(Uninit{}, tls_bits) { mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN); }
Real::Real(unsigned long v) : Real(Uninit{}, tls_bits) { mpfr_set_ui(value_, v, MPFR_RNDN); }
Real::Real(double v) : Real(Uninit{}, std::max<mpfr_prec_t>(tls_bits, 53)) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}
Real::Real(const mpq_class& v) : Real(Uninit{}, tls_bits) { mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN); }
Real::Real(const mpz_class& v) : Real(Uninit{}, tls_bits) { mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN); }

Real Real::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Real num = parse(s.substr(0, slash));
    Real den = parse(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + s + "'");
    return num / den;
  }
  Real r;
  char* end = nullptr;
  if (mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ln10() { return log(Real(10)); }

Real::Real(const Real& other) : Real(Uninit{}, other.precision()) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(Uninit{}, other.precision()) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

mpq_class Real::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Real::to_string(int digits) const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(digits, 1), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator-(const Real& x) {
  Real r(Real::Uninit{}, std::max(working_bits(), x.precision()));
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& x, const Real& y) {
  Real r(Real::Uninit{}, working_bits());
  mpfr_add(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& x, const Real& y) {
  Real r(Real::Uninit{}, working_bits());
  mpfr_sub(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& x, const Real& y) {
  Real r(Real::Uninit{}, working_bits());
  mpfr_mul(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& x, const Real& y) {
  Real r(Real::Uninit{}, working_bits());
  mpfr_div(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x) {
  Real r(Real::Uninit{}, working_bits());
  fn(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) { return unary(mpfr_sqrt, x); }
Real exp(const Real& x) { return unary(mpfr_exp, x); }
Real log(const Real& x) { return unary(mpfr_log, x); }
Real log10(const Real& x) { return unary(mpfr_log10, x); }
Real sin(const Real& x) { return unary(mpfr_sin, x); }
Real cos(const Real& x) { return unary(mpfr_cos, x); }
Real sinh(const Real& x) { return unary(mpfr_sinh, x); }
Real cosh(const Real& x) { return unary(mpfr_cosh, x); }

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x);
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x);
  mpfr_round(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r;
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& x, const Real& y) { return x < y ? y : x; }
Real min(const Real& x, const Real& y) { return y < x ? y : x; }

}  // namespace hyperid
