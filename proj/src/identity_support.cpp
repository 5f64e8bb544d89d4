#include "identity_support.hpp"

#include "hyperid/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hyperid::detail {
namespace {

int method_rank(Method m) {
  switch (m) {
    case Method::exact:
    case Method::closed_form: return 0;
    case Method::terminating: return 1;
    case Method::direct: return 2;
    case Method::direct_tail: return 3;
    case Method::wynn: return 4;
    case Method::levin: return 5;
  }
  return 5;
}

}  // namespace

SeriesResult closed(const Complex& value) {
  SeriesResult r;
  r.value = value;
  r.err_estimate = abs(value) * pow10(-static_cast<long>(std::ceil(working_bits() / 3.3219)) + 1);
  r.terms_used = 0;
  r.method = Method::closed_form;
  r.convergence = ConvergenceClass::terminating(0);
  return r;
}

SeriesResult scaled(SeriesResult r, const Complex& factor) {
  r.value *= factor;
  r.err_estimate *= abs(factor);
  return r;
}

SeriesResult added(const SeriesResult& x, const SeriesResult& y) {
  SeriesResult r = method_rank(y.method) > method_rank(x.method) ? y : x;
  r.value = x.value + y.value;
  r.err_estimate = x.err_estimate + y.err_estimate;
  r.terms_used = x.terms_used + y.terms_used;
  return r;
}

SeriesResult pfq(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z,
                 const PrecisionContext& ctx) {
  SeriesSpec spec{std::move(uppers), std::move(lowers), z, SeriesKind::unilateral};
  return sum_unilateral(spec, ctx);
}

SeriesResult hseries(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z,
                     const PrecisionContext& ctx) {
  SeriesSpec spec{std::move(uppers), std::move(lowers), z, SeriesKind::bilateral};
  return sum_bilateral(spec, ctx);
}

Complex half(const Complex& x) { return Complex(ldexp(x.re, -1), ldexp(x.im, -1)); }

bool in_first_poles(const Complex& x, long n) {
  if (!x.is_nonpositive_integer()) return false;
  return -x.re.to_long() < n;
}

std::optional<mpq_class> exact_pochhammer(const mpq_class& x, long n) {
  mpq_class p = 1;
  if (n >= 0) {
    for (long j = 0; j < n; ++j) p *= x + j;
    return p;
  }
  for (long j = 1; j <= -n; ++j) p *= x - j;
  if (p == 0) return std::nullopt;
  return mpq_class(1) / p;
}

std::optional<mpq_class> exact_terminating(const std::vector<mpq_class>& uppers,
                                           const std::vector<mpq_class>& lowers, long n) {
  mpq_class term = 1;
  mpq_class sum = 1;
  for (long k = 0; k < n; ++k) {
    mpq_class num = 1;
    for (const auto& a : uppers) num *= a + k;
    mpq_class den = k + 1;
    for (const auto& b : lowers) den *= b + k;
    if (den == 0) return std::nullopt;
    term *= num / den;
    sum += term;
  }
  return sum;
}

std::optional<mpq_class> exact_q_pochhammer(const mpq_class& x, const mpq_class& q, long n) {
  mpq_class p = 1;
  mpq_class xq = x;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) {
      p *= 1 - xq;
      xq *= q;
    }
    return p;
  }
  // (x;q)_{-m} = 1 / (x q^-m; q)_m
  mpq_class shifted = x;
  for (long i = 0; i < -n; ++i) shifted /= q;
  auto d = exact_q_pochhammer(shifted, q, -n);
  if (!d || *d == 0) return std::nullopt;
  return mpq_class(1) / *d;
}

cplx to_cplx(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

double q_margin(cplx x, cplx q, long n) {
  double best = 1e300;
  cplx xq = x;
  for (long i = 0; n < 0 ? std::abs(xq) > 1e-9 && i < 100000 : i < n; ++i) {
    best = std::min(best, std::abs(1.0 - xq));
    xq *= q;
  }
  return best;
}

double q_margin(const std::vector<cplx>& xs, cplx q, long n) {
  double best = 1e300;
  for (const auto& x : xs) best = std::min(best, q_margin(x, q, n));
  return best;
}

}  // namespace hyperid::detail
