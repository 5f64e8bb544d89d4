#include "hyperid/accel.hpp"

#include "hyperid/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hyperid {

int levin_digits(const PrecisionContext& ctx) { return 2 * ctx.digits + ctx.guard_digits; }

SeriesResult levin_u(const TermStream& terms, const PrecisionContext& ctx) {
  PrecisionGuard guard(levin_digits(ctx));
  const Real tolerance = pow10(-ctx.digits);
  const Real acceptable = pow10(-(ctx.digits / 2));
  const long cap = std::min(kLevinMaxTerms, ctx.max_terms);
  const Real beta(1);

  // After consuming term m, numer[j] / denom[j] hold the order (m - j)
  // transform started at index j; numer[0] / denom[0] is the estimate.
  std::vector<Complex> numer;
  std::vector<Complex> denom;
  numer.reserve(cap);
  denom.reserve(cap);

  Complex partial(0);
  Complex previous;
  Complex best;
  Real best_err;
  long best_terms = 0;
  long since_best = 0;

  for (long m = 0; m < cap; ++m) {
    Complex term = terms();
    if (term.is_zero()) throw AccelerationFailed("zero term at index " + std::to_string(m));
    partial += term;
    Complex omega = term * (beta + Real(m));
    Complex inv_omega = Complex(1) / omega;
    numer.push_back(partial * inv_omega);
    denom.push_back(inv_omega);
    for (long j = m - 1; j >= 0; --j) {
      long k = m - 1 - j;
      Real bn = beta + Real(j);
      Real coeff = bn / (bn + Real(k + 1)) * pow((bn + Real(k)) / (bn + Real(k + 1)), k - 1);
      numer[j] = numer[j + 1] - numer[j] * coeff;
      denom[j] = denom[j + 1] - denom[j] * coeff;
    }
    // A vanishing top-order denominator means a lower order was already
    // exact; fall back to the deepest transform that is still defined.
    std::size_t top = 0;
    while (top < denom.size() && denom[top].is_zero()) ++top;
    if (top == denom.size()) throw AccelerationFailed("vanishing Levin denominator");
    Complex estimate = numer[top] / denom[top];
    if (m >= 2) {
      Real err = abs(estimate - previous);
      if (best_terms == 0 || err < best_err) {
        best = estimate;
        best_err = err;
        best_terms = m + 1;
        since_best = 0;
      } else {
        ++since_best;
      }
      if (err <= tolerance * abs(estimate)) {
        return {estimate, err, m + 1, Method::levin, ConvergenceClass::divergent()};
      }
      if (since_best >= 12) break;
    }
    previous = estimate;
  }
  if (best_terms > 0 && best_err <= acceptable * abs(best)) {
    return {best, best_err, best_terms, Method::levin, ConvergenceClass::divergent()};
  }
  throw AccelerationFailed("Levin estimate stagnated" +
                           (best_terms > 0 ? " at " + best_err.to_string(3) : std::string()));
}

WynnEstimate wynn_epsilon(std::span<const Complex> partials) {
  if (partials.size() < 5) throw NumericalBreakdown("wynn_epsilon needs at least 5 partial sums");
  const Real tiny = ldexp(Real(1), -(working_bits() - 8));

  // prev_col = eps_{k-1}, col = eps_k, both indexed by n.
  std::vector<Complex> prev_col(partials.size() + 1, Complex(0));
  std::vector<Complex> col(partials.begin(), partials.end());
  WynnEstimate out;
  out.value = col.back();
  out.err_estimate = abs(col.back() - col[col.size() - 2]);

  for (int k = 0; col.size() > 1; ++k) {
    std::vector<Complex> next(col.size() - 1);
    for (std::size_t n = 0; n + 1 < col.size(); ++n) {
      Complex diff = col[n + 1] - col[n];
      if (abs(diff) <= tiny * max(abs(col[n]), Real(1))) {
        out.breakdown = true;
        return out;
      }
      next[n] = prev_col[n + 1] + Complex(1) / diff;
    }
    prev_col = std::move(col);
    col = std::move(next);
    // Odd k + 1 columns are auxiliary; even columns carry estimates.
    if ((k + 1) % 2 == 0) {
      out.err_estimate = abs(col.back() - out.value);
      out.value = col.back();
    }
  }
  return out;
}

Real tail_bound_algebraic(long K, const Real& s, const Real& last_term_mag) {
  if (K < 1 || s <= Real(1)) {
    Real inf;
    mpfr_set_inf(inf.get(), 1);
    return inf;
  }
  return last_term_mag * Real(K) / (s - Real(1));
}

}  // namespace hyperid
