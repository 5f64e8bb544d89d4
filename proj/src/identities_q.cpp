#include "hyperid/errors.hpp"
#include "hyperid/identities.hpp"
#include "hyperid/qseries.hpp"
#include "identity_support.hpp"

#include <cmath>

namespace hyperid {

using detail::added;
using detail::closed;
using detail::cplx;
using detail::scaled;

namespace {

const Complex one(1);

Complex root(const Complex& x, RootBranch branch) {
  Complex r = principal_sqrt(x);
  return branch == RootBranch::principal ? r : -r;
}

SeriesResult phi(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z, const QContext& qc) {
  return sum_q_series({std::move(uppers), std::move(lowers), z, QSeriesKind::phi}, qc);
}

SeriesResult psi(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z, const QContext& qc) {
  return sum_q_series({std::move(uppers), std::move(lowers), z, QSeriesKind::psi}, qc);
}

Complex bracket(std::vector<Complex> numers, std::vector<Complex> denoms, const QContext& qc,
                long n = kInfinite) {
  return q_bracket(numers, denoms, qc, n);
}

// Very-well-poised 8phi7(A; b1..b5; q, q).
SeriesResult vwp_8phi7(const Complex& A, const std::vector<Complex>& b, const QContext& qc, RootBranch branch) {
  const Complex& q = qc.q;
  const Complex r = root(A, branch);
  std::vector<Complex> uppers{A, q * r, -q * r};
  std::vector<Complex> lowers{r, -r};
  for (const auto& x : b) {
    uppers.push_back(x);
    lowers.push_back(q * A / x);
  }
  return phi(uppers, lowers, q, qc);
}

struct Split {
  Complex q, a, c, d, e, f;
};

Split split_params(const ParameterSet& p) { return {p["q"], p["a"], p["c"], p["d"], p["e"], p["f"]}; }

}  // namespace

IdentityPair bailey_6psi6(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  QContext qc{p["q"], ctx};
  const Complex &q = qc.q, &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &e = p["e"];
  const Complex r = root(a, branch);
  const Complex qa = q * a;
  IdentityPair out;
  out.lhs = psi({q * r, -q * r, b, c, d, e}, {r, -r, qa / b, qa / c, qa / d, qa / e}, qa * a / (b * c * d * e), qc);
  out.rhs = closed(bracket({q, qa, q / a, qa / (b * c), qa / (b * d), qa / (b * e), qa / (c * d), qa / (c * e),
                            qa / (d * e)},
                           {q / b, q / c, q / d, q / e, qa / b, qa / c, qa / d, qa / e, qa * a / (b * c * d * e)}, qc));
  return out;
}

IdentityPair phi65(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  QContext qc{p["q"], ctx};
  const Complex &q = qc.q, &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  const Complex r = root(a, branch);
  const Complex qa = q * a;
  IdentityPair out;
  out.lhs = phi({a, q * r, -q * r, b, c, d}, {r, -r, qa / b, qa / c, qa / d}, qa / (b * c * d), qc);
  out.rhs = closed(bracket({qa, qa / (b * c), qa / (b * d), qa / (c * d)},
                           {qa / b, qa / c, qa / d, qa / (b * c * d)}, qc));
  return out;
}

IdentityPair jackson_8phi7(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  const long n = p.integer("n");
  // q^-n parameters make the terms up to |q|^-n larger than the sum; carry
  // those digits in the guard from the start.
  PrecisionContext wide = ctx;
  double lq = -std::log10(std::abs(detail::to_cplx(p["q"])));
  wide.guard_digits += static_cast<int>(std::ceil(n * lq)) + 2;
  WorkingPrecision wp(wide);
  QContext qc{p["q"], wide};
  const Complex &q = qc.q, &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  const Complex r = root(a, branch);
  const Complex qa = q * a;
  const Complex qn = pow(q, n);
  const Complex bcd = b * c * d;
  IdentityPair out;
  out.lhs = phi({a, q * r, -q * r, b, c, d, q * qn * a * a / bcd, one / qn},
                {r, -r, qa / b, qa / c, qa / d, bcd / (qn * a), q * qn * a}, q, qc);
  out.rhs = closed(bracket({qa, qa / (b * c), qa / (b * d), qa / (c * d)}, {qa / b, qa / c, qa / d, qa / bcd}, qc, n));
  return out;
}

std::optional<ExactPair> jackson_8phi7_exact(const ParameterSet& p) {
  if (!p.all_real()) return std::nullopt;
  const long n = p.integer("n");
  mpq_class q = p["q"].re.to_rational(), a = p["a"].re.to_rational(), b = p["b"].re.to_rational(),
            c = p["c"].re.to_rational(), d = p["d"].re.to_rational();
  if (a == 1 || q == 0) return std::nullopt;
  mpq_class qn = 1;
  for (long i = 0; i < n; ++i) qn *= q;
  const mpq_class bcd = b * c * d;
  // The +-sqrt(a) pairs collapse to (1 - a q^2k) / (1 - a), so no roots are needed.
  std::vector<mpq_class> ups{a, b, c, d, q * qn * a * a / bcd, 1 / qn};
  std::vector<mpq_class> lows{q, q * a / b, q * a / c, q * a / d, bcd / (qn * a), q * qn * a};
  std::vector<mpq_class> up_pow(ups.size(), 1), low_pow(lows.size(), 1);
  mpq_class num = 1, den = 1, qk = 1, sum = 0;
  for (long k = 0; k <= n; ++k) {
    if (den == 0) return std::nullopt;
    sum += num / den * (1 - a * qk * qk) / (1 - a) * qk;
    for (std::size_t i = 0; i < ups.size(); ++i) num *= 1 - ups[i] * qk;
    for (std::size_t j = 0; j < lows.size(); ++j) den *= 1 - lows[j] * qk;
    qk *= q;
  }
  mpq_class rnum = 1, rden = 1;
  for (const mpq_class& x : std::vector<mpq_class>{q * a, q * a / (b * c), q * a / (b * d), q * a / (c * d)}) {
    rnum *= *detail::exact_q_pochhammer(x, q, n);
  }
  for (const mpq_class& y : std::vector<mpq_class>{q * a / b, q * a / c, q * a / d, q * a / bcd}) {
    rden *= *detail::exact_q_pochhammer(y, q, n);
  }
  if (rden == 0) return std::nullopt;
  return ExactPair{sum, rnum / rden};
}

IdentityPair jackson_nonterminating(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  QContext qc{p["q"], ctx};
  const Complex &q = qc.q, &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &e = p["e"];
  const Complex f = q * a * a / (b * c * d * e);
  const Complex qa = q * a;
  const Complex qb = q * b;
  IdentityPair out;
  out.lhs = vwp_8phi7(a, {b, c, d, e, f}, qc, branch);

  const Complex B = b * b / a;
  Complex first = (b / a) * bracket({qa, c, d, e, f, qb / a, qb / c, qb / d, qb / e, qb / f},
                                    {qa / b, qa / c, qa / d, qa / e, qa / f, b * c / a, b * d / a, b * e / a,
                                     b * f / a, b * b * q / a},
                                    qc);
  // sqrt(b^2/a) taken as b/sqrt(a) with the same branch as the left side.
  const Complex rb = b / root(a, branch);
  SeriesResult inner = phi({B, q * rb, -q * rb, b, b * c / a, b * d / a, b * e / a, b * f / a},
                           {rb, -rb, qb / a, qb / c, qb / d, qb / e, qb / f}, q, qc);
  Complex second = bracket({qa, b / a, qa / (c * d), qa / (c * e), qa / (c * f), qa / (d * e), qa / (d * f), qa / (e * f)},
                           {qa / c, qa / d, qa / e, qa / f, b * c / a, b * d / a, b * e / a, b * f / a}, qc);
  out.rhs = added(scaled(inner, first), closed(second));
  return out;
}

IdentityPair omega_sum(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  auto [q, a, c, d, e, f] = split_params(p);
  QContext qc{q, ctx};
  const Complex A = c * d * e * f / a;
  const Complex r = root(A, branch);
  const Complex z = q * a * a / (c * d * e * f);
  const Complex qa = q * a;
  IdentityPair out;
  // The k >= 0 half has no (q;q)_k; an extra upper q cancels the implicit one.
  out.lhs = phi({q, q * r, -q * r, c * d * e / a, c * d * f / a, c * e * f / a, d * e * f / a},
                {r, -r, q * f, q * e, q * d, q * c}, z, qc);
  Complex pref = bracket({q, qa / c, qa / d, qa / e, qa / f, q * A}, {qa, q * c, q * d, q * e, q * f, z}, qc);
  out.rhs = scaled(vwp_8phi7(a, {z, c, d, e, f}, qc, branch), pref);
  return out;
}

namespace {

Complex theta_prefactor(const Split& s) {
  auto [q, a, c, d, e, f] = s;
  const Complex cdef = c * d * e * f;
  const Complex qa = q * a;
  Complex num = (q * a * a / cdef) * (one - q * q * a / cdef) * (one - one / c) * (one - one / d) *
                (one - one / e) * (one - one / f);
  Complex den = (one - a / cdef) * (one - qa / (c * d * e)) * (one - qa / (c * d * f)) * (one - qa / (c * e * f)) *
                (one - qa / (d * e * f));
  if (den.is_zero()) throw DivisionByZero("reflected-half prefactor denominator vanishes");
  return num / den;
}

SeriesResult theta_raw_sum(const Split& s, const QContext& qc, RootBranch branch) {
  auto [q, a, c, d, e, f] = s;
  const Complex cdef = c * d * e * f;
  const Complex r = root(a / cdef, branch);
  const Complex q2a = q * q * a;
  return phi({q, q * q * r, -q * q * r, q / c, q / d, q / e, q / f},
             {q * r, -q * r, q2a / (d * e * f), q2a / (c * e * f), q2a / (c * d * f), q2a / (c * d * e)},
             q * a * a / cdef, qc);
}

}  // namespace

IdentityPair theta_sum(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  const Split s = split_params(p);
  auto [q, a, c, d, e, f] = s;
  QContext qc{q, ctx};
  const Complex cdef = c * d * e * f;
  const Complex P = theta_prefactor(s);
  IdentityPair out;
  out.lhs = scaled(theta_raw_sum(s, qc, branch), P);

  const Complex q2 = q * q;
  const Complex aa = a * a;
  const Complex A = q2 * aa * a / (cdef * cdef);
  Complex br = bracket({q, q2 * q * a / cdef, q2 * aa / (c * cdef), q2 * aa / (d * cdef), q2 * aa / (e * cdef),
                        q2 * aa / (f * cdef)},
                       {q2 * a / (c * d * e), q2 * a / (c * d * f), q2 * a / (c * e * f), q2 * a / (d * e * f),
                        q * aa / cdef, q * A},
                       qc);
  const Complex qa = q * a;
  SeriesResult series = vwp_8phi7(A, {q * aa / cdef, qa / (c * d * e), qa / (c * d * f), qa / (c * e * f), qa / (d * e * f)},
                                  qc, branch);
  out.rhs = scaled(series, P * br);
  return out;
}

IdentityPair bailey_split(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch) {
  WorkingPrecision wp(ctx);
  const Split s = split_params(p);
  auto [q, a, c, d, e, f] = s;
  QContext qc{q, ctx};
  const Complex cdef = c * d * e * f;
  const Complex qa = q * a;
  IdentityPair out;
  out.lhs = closed(bracket({q, qa / (c * d), qa / (c * e), qa / (c * f), qa / (d * e), qa / (d * f), qa / (e * f),
                            qa / cdef, q * cdef / a},
                           {q * c, q * d, q * e, q * f, qa / (c * d * e), qa / (c * d * f), qa / (c * e * f),
                            qa / (d * e * f), qa * a / cdef},
                           qc));
  SeriesResult omega = omega_sum(p, ctx, branch).lhs;
  out.rhs = added(omega, scaled(theta_raw_sum(s, qc, branch), theta_prefactor(s)));
  return out;
}

namespace detail {

namespace {

std::vector<cplx> cvals(const ParameterSet& p, std::initializer_list<const char*> names) {
  std::vector<cplx> out;
  for (const char* n : names) out.push_back(to_cplx(p[n]));
  return out;
}

}  // namespace

std::vector<cplx> bailey_6psi6_factors(const ParameterSet& p) {
  auto v = cvals(p, {"q", "a", "b", "c", "d", "e"});
  cplx q = v[0], a = v[1], b = v[2], c = v[3], d = v[4], e = v[5];
  cplx r = std::sqrt(a), qa = q * a;
  return {r, -r, q / r, -q / r, qa / b, qa / c, qa / d, qa / e, q / b, q / c, q / d, q / e,
          qa, q / a, qa / (b * c), qa / (b * d), qa / (b * e), qa / (c * d), qa / (c * e), qa / (d * e),
          qa * a / (b * c * d * e)};
}

std::vector<cplx> phi65_factors(const ParameterSet& p) {
  auto v = cvals(p, {"q", "a", "b", "c", "d"});
  cplx q = v[0], a = v[1], b = v[2], c = v[3], d = v[4];
  cplx r = std::sqrt(a), qa = q * a;
  return {r, -r, qa / b, qa / c, qa / d, qa, qa / (b * c), qa / (b * d), qa / (c * d), qa / (b * c * d)};
}

std::vector<cplx> jackson_8phi7_factors(const ParameterSet& p) {
  auto v = cvals(p, {"q", "a", "b", "c", "d"});
  cplx q = v[0], a = v[1], b = v[2], c = v[3], d = v[4];
  const double n = static_cast<double>(p.integer("n"));
  cplx r = std::sqrt(a), qa = q * a, qn = std::pow(q, n);
  return {r, -r, qa / b, qa / c, qa / d, b * c * d / (qn * a), q * qn * a, qa, qa / (b * c), qa / (b * d),
          qa / (c * d), qa / (b * c * d), q};
}

std::vector<cplx> jackson_nt_factors(const ParameterSet& p) {
  auto v = cvals(p, {"q", "a", "b", "c", "d", "e"});
  cplx q = v[0], a = v[1], b = v[2], c = v[3], d = v[4], e = v[5];
  cplx f = q * a * a / (b * c * d * e), qa = q * a, qb = q * b;
  cplx r = std::sqrt(a), rb = b / r;
  return {r, qa / b, qa / c, qa / d, qa / e, qa / f, qa, c, d, e, f, qb / a, qb / c, qb / d, qb / e, qb / f,
          b * c / a, b * d / a, b * e / a, b * f / a, b * b * q / a, rb, b / a, qa / (c * d), qa / (c * e),
          qa / (c * f), qa / (d * e), qa / (d * f), qa / (e * f)};
}

std::vector<cplx> split_factors(const ParameterSet& p) {
  auto v = cvals(p, {"q", "a", "c", "d", "e", "f"});
  cplx q = v[0], a = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
  cplx cdef = c * d * e * f, qa = q * a, q2 = q * q, A = cdef / a, z = qa * a / cdef;
  cplx ra = std::sqrt(a), rA = std::sqrt(A), rt = std::sqrt(a / cdef);
  cplx At = q2 * a * a * a / (cdef * cdef);
  return {rA, -rA, q * f, q * e, q * d, q * c, q * rt, -q * rt, q2 * a / (d * e * f), q2 * a / (c * e * f),
          q2 * a / (c * d * f), q2 * a / (c * d * e), qa / c, qa / d, qa / e, qa / f, q * A, qa, z, ra,
          -ra, A, std::sqrt(At), -std::sqrt(At), q2 * a / cdef, q2 * a * a / (cdef * c), q2 * a * a / (cdef * d),
          q2 * a * a / (cdef * e), q2 * a * a / (cdef * f), q2 * q * a / cdef, q * At, qa / (c * d),
          qa / (c * e), qa / (c * f), qa / (d * e), qa / (d * f), qa / (e * f), qa / cdef};
}

}  // namespace detail

}  // namespace hyperid
