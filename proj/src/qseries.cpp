#include "hyperid/qseries.hpp"

#include "hyperid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperid {
namespace {

// term_k = prod (a;q)_k / prod (b;q)_k * ((-1)^k q^(k choose 2))^power * z^k
struct QUnilateral {
  std::vector<Complex> uppers;
  std::vector<Complex> lowers;
  Complex argument;
  long power = 0;
};

bool nearly_one(const Complex& x, const QContext& qc) {
  return abs(x - Complex(1)) <= qc.ctx.target_epsilon();
}

SeriesResult sum_q_unilateral_at(const QUnilateral& s, const QContext& qc, Real& peak) {
  const PrecisionContext& ctx = qc.ctx;
  long terminate = -1;
  for (const auto& a : s.uppers) {
    long m = q_terminating_index(a, qc);
    if (m >= 0 && (terminate < 0 || m < terminate)) terminate = m;
  }
  for (const auto& b : s.lowers) {
    long m = q_terminating_index(b, qc);
    if (m >= 0 && (terminate < 0 || terminate > m)) {
      throw LowerPoleError("lower parameter " + b.to_string(20) + " = q^-" + std::to_string(m));
    }
  }

  Real limit_ratio;
  if (terminate < 0) {
    if (s.power < 0) throw DomainError("q-series diverges: more upper than lower parameters");
    if (s.power == 0) {
      limit_ratio = abs(s.argument);
      if (limit_ratio >= Real(1)) {
        throw DomainError("q-series diverges: |z| = " + limit_ratio.to_string(10) + " >= 1");
      }
    } else {
      limit_ratio = Real(0);
    }
  }

  const Real eps = ctx.working_epsilon();
  Complex qk(1);
  Complex term(1);
  Complex sum(1);
  Real last_ratio(0);
  long k = 0;
  int small = 0;
  peak = Real(1);
  while (terminate >= 0 ? k < terminate : small < 3) {
    if (k + 2 > ctx.max_terms) throw BudgetExceeded("q-series exceeded max_terms");
    Complex num = s.argument;
    for (const auto& a : s.uppers) num *= Complex(1) - a * qk;
    Complex den(1);
    for (const auto& b : s.lowers) den *= Complex(1) - b * qk;
    if (den.is_zero()) throw LowerPoleError("vanishing q-series denominator at k = " + std::to_string(k));
    Complex ratio = num / den;
    if (s.power != 0) ratio *= pow(-qk, s.power);
    term *= ratio;
    sum += term;
    peak = max(peak, abs(term));
    qk *= qc.q;
    ++k;
    if (terminate < 0) {
      last_ratio = abs(ratio);
      small = abs(term) < eps * abs(sum) ? small + 1 : 0;
    }
  }
  if (terminate >= 0) {
    return {sum, Real(0), k + 1, Method::terminating, ConvergenceClass::terminating(terminate)};
  }
  Real rho = max(limit_ratio, last_ratio);
  Real err = rho < Real(1) ? abs(term) * rho / (Real(1) - rho) : abs(term);
  return {sum, err, k + 1, Method::direct, ConvergenceClass::geometric(limit_ratio)};
}

// Reruns with more guard digits when cancellation eats into the guard.
SeriesResult sum_q_unilateral(const QUnilateral& s, const QContext& qc) {
  QContext run = qc;
  while (true) {
    WorkingPrecision wp(run.ctx);
    Real peak;
    SeriesResult r = sum_q_unilateral_at(s, run, peak);
    int extra = cancellation_guard(peak, r.value, run.ctx);
    if (extra == 0 || run.ctx.guard_digits > qc.ctx.guard_digits + 2 * qc.ctx.digits) {
      r.err_estimate += peak * run.ctx.working_epsilon();
      return r;
    }
    run.ctx.guard_digits += extra;
  }
}

}  // namespace

void QContext::validate() const {
  Real m = abs(q);
  if (q.is_zero() || m >= Real(1)) throw DomainError("q must satisfy 0 < |q| < 1, got " + q.to_string(10));
}

long QSeriesSpec::excess() const {
  long r = static_cast<long>(uppers.size()) - (kind == QSeriesKind::phi ? 1 : 0);
  return static_cast<long>(lowers.size()) - r;
}

Complex principal_sqrt(const Complex& a) { return sqrt(a); }

long q_terminating_index(const Complex& x, const QContext& qc) {
  if (x.is_zero()) return -1;
  // x = q^-m  <=>  log x / log q = -m (mod branch); test the nearest m.
  Complex t = log(x) / log(qc.q);
  Real m_real = -round(t.re);
  if (m_real.sign() < 0 || m_real > Real(qc.ctx.max_terms)) return -1;
  long m = m_real.to_long();
  Complex probe = x * pow(qc.q, m);
  return nearly_one(probe, qc) ? m : -1;
}

Complex q_pochhammer(const Complex& x, const QContext& qc, long n) {
  WorkingPrecision wp(qc.ctx);
  if (n == 0 || x.is_zero()) return Complex(1);
  if (n == kInfinite) {
    qc.validate();
    const Real eps = qc.ctx.working_epsilon();
    Complex product(1);
    Complex xq = x;
    long i = 0;
    while (abs(xq) >= eps) {
      if (i >= qc.ctx.max_terms) throw BudgetExceeded("infinite q-product exceeded max_terms");
      product *= Complex(1) - xq;
      xq *= qc.q;
      ++i;
    }
    // prod_{i>=N} (1 - x q^i) = exp(-x q^N / (1 - q)) to first order.
    return product * exp(-xq / (Complex(1) - qc.q));
  }
  if (n > 0) {
    Complex product(1);
    Complex xq = x;
    for (long i = 0; i < n; ++i) {
      product *= Complex(1) - xq;
      xq *= qc.q;
    }
    return product;
  }
  Complex shifted = x * pow(qc.q, n);  // x q^-m
  Complex denom = q_pochhammer(shifted, qc, -n);
  if (denom.is_zero()) {
    throw DivisionByZero("(x;q)_" + std::to_string(n) + " has a vanishing factor");
  }
  return Complex(1) / denom;
}

Complex q_bracket(std::span<const Complex> numers, std::span<const Complex> denoms, const QContext& qc,
                  long n) {
  WorkingPrecision wp(qc.ctx);
  Complex num(1);
  bool num_zero = false;
  for (const auto& x : numers) {
    Complex v = q_pochhammer(x, qc, n);
    if (v.is_zero()) num_zero = true;
    num *= v;
  }
  Complex den(1);
  bool den_zero = false;
  for (const auto& y : denoms) {
    Complex v = q_pochhammer(y, qc, n);
    if (v.is_zero()) den_zero = true;
    den *= v;
  }
  if (num_zero && den_zero) throw IndeterminateError("q-bracket has vanishing numerator and denominator");
  if (den_zero) throw DivisionByZero("q-bracket has a vanishing denominator");
  if (num_zero) return Complex(0);
  return num / den;
}

SeriesResult sum_q_series(const QSeriesSpec& spec, const QContext& qc) {
  qc.validate();
  WorkingPrecision wp(qc.ctx);
  if (spec.kind == QSeriesKind::phi) {
    if (spec.uppers.empty()) throw ConfigError("phi series needs at least one upper parameter");
    QUnilateral s{spec.uppers, spec.lowers, spec.argument, spec.excess()};
    s.lowers.push_back(qc.q);
    return sum_q_unilateral(s, qc);
  }

  // Bilateral: k >= 0 directly, k <= -1 through the reflected unilateral sum.
  if (spec.uppers.size() != spec.lowers.size()) {
    throw ConfigError("psi series needs equal numbers of upper and lower parameters");
  }
  QUnilateral plus{spec.uppers, spec.lowers, spec.argument, spec.excess()};
  if (spec.argument.is_zero()) throw DomainError("psi series at z = 0");
  SeriesResult pos = sum_q_unilateral(plus, qc);

  // T(-(m+1)) = P * prod (q^2/b;q)_m / prod (q^2/a;q)_m * w^m,
  // w = prod b / (prod a * z),  P = w * prod (1 - q/b) / prod (1 - q/a).
  const Complex& q = qc.q;
  Complex w(1);
  Complex prefactor(1);
  QUnilateral minus;
  minus.power = 0;
  for (const auto& b : spec.lowers) {
    w *= b;
    Complex f = Complex(1) - q / b;
    if (nearly_one(q / b, qc)) f = Complex(0);
    prefactor *= f;
    minus.uppers.push_back(q * q / b);
  }
  Complex den(1);
  for (const auto& a : spec.uppers) {
    den *= a;
    Complex f = Complex(1) - q / a;
    if (f.is_zero() || nearly_one(q / a, qc)) {
      throw LowerPoleError("upper parameter " + a.to_string(20) + " = q makes the k < 0 terms infinite");
    }
    prefactor /= f;
    minus.lowers.push_back(q * q / a);
  }
  w /= den * spec.argument;
  minus.argument = w;
  prefactor *= w;

  SeriesResult out = pos;
  out.convergence = ConvergenceClass::geometric(max(pos.convergence.ratio, abs(w)));
  if (prefactor.is_zero()) return out;
  SeriesResult neg = sum_q_unilateral(minus, qc);
  out.value = pos.value + prefactor * neg.value;
  out.err_estimate = pos.err_estimate + abs(prefactor) * neg.err_estimate;
  out.terms_used = pos.terms_used + neg.terms_used;
  if (pos.method == Method::terminating && neg.method == Method::terminating) {
    out.method = Method::terminating;
  } else {
    out.method = Method::direct;
  }
  return out;
}

}  // namespace hyperid
