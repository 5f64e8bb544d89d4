#include "hyperid/gamma.hpp"

#include "hyperid/errors.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <vector>

namespace hyperid {
namespace {

// Bernoulli numbers B_0..B_n by the classical recurrence
// sum_{j=0}^{n} C(n+1, j) B_j = 0, extended on demand.
class BernoulliTable {
 public:
  const mpq_class& stirling(std::size_t k) {
    std::lock_guard lock(mutex_);
    while (coefficients_.size() < k) extend();
    return coefficients_[k - 1];
  }

 private:
  void extend() {
    std::size_t k = coefficients_.size() + 1;
    std::size_t target = 2 * k;
    if (bernoulli_.empty()) bernoulli_.push_back(mpq_class(1));
    while (bernoulli_.size() <= target) {
      std::size_t n = bernoulli_.size();  // computing B_n
      mpq_class sum = 0;
      mpz_class binom = 1;                // C(n+1, j)
      for (std::size_t j = 0; j < n; ++j) {
        sum += binom * bernoulli_[j];
        binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
      }
      mpq_class b = -sum / mpq_class(static_cast<unsigned long>(n + 1));
      b.canonicalize();
      bernoulli_.push_back(b);
    }
    mpq_class c = bernoulli_[target] / mpq_class(static_cast<unsigned long>(target * (target - 1)));
    c.canonicalize();
    coefficients_.push_back(c);
  }

  std::mutex mutex_;
  std::vector<mpq_class> bernoulli_;
  std::deque<mpq_class> coefficients_;  // stable references across growth
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

bool at_pole(const Complex& z, const PrecisionContext& ctx) {
  if (z.is_nonpositive_integer()) return true;
  if (ctx.pole_margin > 0) return distance_to_nonpositive_integer(z) < Real(ctx.pole_margin);
  return false;
}

void require_regular(const Complex& z, const PrecisionContext& ctx) {
  if (at_pole(z, ctx)) throw PoleError("gamma pole at z = " + z.to_string(20));
}

// Real part must exceed this before the asymptotic series is applied.
Real stirling_threshold(const PrecisionContext& ctx) {
  return Real(std::max(12.0, 0.6 * ctx.working_digits()));
}

// Stirling series for log Gamma(w), Re w large.
Complex stirling(const Complex& w, const PrecisionContext& ctx) {
  Complex half_log_2pi(log(Real(2) * Real::pi()) / 2);
  Complex result = (w - Complex(Real(0.5))) * log(w) - w + half_log_2pi;
  Complex inv = Complex(1) / w;
  Complex inv2 = inv * inv;
  Complex power = inv;
  Real eps = ctx.working_epsilon() * max(abs(result), Real(1));
  for (std::size_t k = 1;; ++k) {
    Complex term = power * Real(stirling_coefficient(k));
    result += term;
    if (abs(term) < eps) break;
    if (k > 4 * static_cast<std::size_t>(ctx.working_digits()) + 50) break;
    power *= inv2;
  }
  return result;
}

// log Gamma(z) for Re z >= 1/2: upward shift to the asymptotic region.
Complex log_gamma_right(const Complex& z, const PrecisionContext& ctx) {
  Real threshold = stirling_threshold(ctx);
  long shift = 0;
  if (z.re < threshold) shift = (threshold - z.re).to_long() + 1;
  Complex w = z + Complex(Real(shift));
  Complex result = stirling(w, ctx);
  if (shift == 0) return result;
  if (z.is_real()) {
    Real product(1);
    for (long j = 0; j < shift; ++j) product *= z.re + Real(j);
    return result - Complex(log(product));
  }
  // One log of the product, with the branch fixed so that the result equals
  // the sum of the principal logs of the factors (continuous in z).
  Complex product(1);
  double arg_sum = 0;
  for (long j = 0; j < shift; ++j) {
    Complex factor = z + Complex(Real(j));
    arg_sum += std::atan2(factor.im.to_double(), factor.re.to_double());
    product *= factor;
  }
  Complex log_product = log(product);
  double winding = std::round((arg_sum - log_product.im.to_double()) / (2 * M_PI));
  log_product.im += Real(winding) * Real(2) * Real::pi();
  return result - log_product;
}

// log|Gamma(x)| and sign for real x off the poles.
std::pair<Real, int> log_abs_gamma_real(const Real& x, const PrecisionContext& ctx) {
  if (x >= Real(0.5)) return {log_gamma_right(Complex(x), ctx).re, 1};
  Real s = sin(Real::pi() * x);
  Real reflected = log_gamma_right(Complex(Real(1) - x), ctx).re;
  return {log(Real::pi()) - log(abs(s)) - reflected, s.sign()};
}

bool small_positive_integer(const Complex& z) {
  return z.is_positive_integer() && z.re <= Real(1000);
}

Real factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Real(f);
}

}  // namespace

const mpq_class& stirling_coefficient(std::size_t k) { return bernoulli_table().stirling(k); }

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  require_regular(z, ctx);
  if (z.re >= Real(0.5)) return log_gamma_right(z, ctx);
  Complex pi(Real::pi());
  Complex s = sin(pi * z);
  return log(pi) - log(s) - log_gamma_right(Complex(1) - z, ctx);
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  require_regular(z, ctx);
  if (small_positive_integer(z)) return Complex(factorial(z.re.to_long() - 1));
  if (z.is_real()) {
    auto [lg, sign] = log_abs_gamma_real(z.re, ctx);
    Real v = exp(lg);
    return Complex(sign < 0 ? -v : v);
  }
  return exp(log_gamma(z, ctx));
}

Complex pochhammer(const Complex& x, long n, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  if (n == 0) return Complex(1);
  Complex product(1);
  if (n > 0) {
    for (long j = 0; j < n; ++j) product *= x + Complex(Real(j));
    return product;
  }
  // (x)_{-m} = 1 / ((x-1)(x-2)...(x-m))
  for (long j = 1; j <= -n; ++j) {
    Complex factor = x - Complex(Real(j));
    if (factor.is_zero()) {
      throw DivisionByZero("pochhammer(" + x.to_string(20) + ", " + std::to_string(n) +
                           ") has a zero factor");
    }
    product *= factor;
  }
  return Complex(1) / product;
}

Complex gamma_ratio(std::span<const Complex> numer, std::span<const Complex> denom,
                    const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  bool numer_pole = false;
  bool denom_pole = false;
  for (const auto& z : numer) numer_pole = numer_pole || at_pole(z, ctx);
  for (const auto& z : denom) denom_pole = denom_pole || at_pole(z, ctx);
  if (numer_pole && denom_pole) throw IndeterminateError("gamma poles in numerator and denominator");
  if (numer_pole) throw PoleError("gamma pole in numerator");
  if (denom_pole) return Complex(0);

  bool all_real = true;
  for (const auto& z : numer) all_real = all_real && z.is_real();
  for (const auto& z : denom) all_real = all_real && z.is_real();

  if (all_real) {
    Real log_sum(0);
    int sign = 1;
    for (const auto& z : numer) {
      auto [lg, s] = log_abs_gamma_real(z.re, ctx);
      log_sum += lg;
      sign *= s;
    }
    for (const auto& z : denom) {
      auto [lg, s] = log_abs_gamma_real(z.re, ctx);
      log_sum -= lg;
      sign *= s;
    }
    Real v = exp(log_sum);
    return Complex(sign < 0 ? -v : v);
  }

  Complex log_sum(0);
  for (const auto& z : numer) log_sum += log_gamma(z, ctx);
  for (const auto& z : denom) log_sum -= log_gamma(z, ctx);
  return exp(log_sum);
}

}  // namespace hyperid
