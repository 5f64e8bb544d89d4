#include "hyperid/errors.hpp"
#include "hyperid/gamma.hpp"
#include "hyperid/identities.hpp"
#include "identity_support.hpp"

namespace hyperid {

using detail::added;
using detail::closed;
using detail::pfq;
using detail::scaled;

namespace {

Complex G(std::vector<Complex> numer, std::vector<Complex> denom, const PrecisionContext& ctx) {
  return gamma_ratio(numer, denom, ctx);
}

const Complex one(1);

}  // namespace

IdentityPair saalschuetz(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"];
  const long n = p.integer("n");
  IdentityPair out;
  out.lhs = pfq({a, b, Complex(-n)}, {c, one + a + b - c - Complex(n)}, one, ctx);
  Complex num = pochhammer(c - a, n, ctx) * pochhammer(c - b, n, ctx);
  Complex den = pochhammer(c, n, ctx) * pochhammer(c - a - b, n, ctx);
  if (den.is_zero()) throw DivisionByZero("(c)_n (c-a-b)_n vanishes");
  out.rhs = closed(num / den);
  return out;
}

std::optional<ExactPair> saalschuetz_exact(const ParameterSet& p) {
  if (!p.all_real()) return std::nullopt;
  mpq_class a = p["a"].re.to_rational(), b = p["b"].re.to_rational(), c = p["c"].re.to_rational();
  const long n = p.integer("n");
  auto lhs = detail::exact_terminating({a, b, mpq_class(-n)}, {c, 1 + a + b - c - n}, n);
  auto ca = detail::exact_pochhammer(c - a, n), cb = detail::exact_pochhammer(c - b, n);
  auto cc = detail::exact_pochhammer(c, n), cab = detail::exact_pochhammer(c - a - b, n);
  if (!lhs || !ca || !cb || !cc || !cab || *cc * *cab == 0) return std::nullopt;
  return ExactPair{*lhs, *ca * *cb / (*cc * *cab)};
}

IdentityPair saalschuetz_nonterminating(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  IdentityPair out;
  out.lhs = pfq({a, b, c + d - a - b - one}, {c, d}, one, ctx);
  SeriesResult f = pfq({one, c - a, c - b}, {c - a - b + one, c + d - a - b}, one, ctx);
  Complex first = G({c, d}, {a, b, c + d - a - b}, ctx) / (a + b - c);
  Complex second = G({c, d, c - a - b, d - a - b}, {c - a, c - b, d - a, d - b}, ctx);
  out.rhs = added(scaled(f, first), closed(second));
  return out;
}

IdentityPair dougall_2h2(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  IdentityPair out;
  out.lhs = detail::hseries({a, b}, {c, d}, one, ctx);
  out.rhs = closed(G({one - a, one - b, c, d, c + d - a - b - one}, {c - a, c - b, d - a, d - b}, ctx));
  return out;
}

IdentityPair gauss_2f1(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"];
  IdentityPair out;
  out.lhs = pfq({a, b}, {c}, one, ctx);
  out.rhs = closed(G({c, c - a - b}, {c - a, c - b}, ctx));
  return out;
}

IdentityPair dixon(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"];
  const Complex h = detail::half(a);
  IdentityPair out;
  out.lhs = pfq({a, b, c}, {one + a - b, one + a - c}, one, ctx);
  out.rhs = closed(G({one + h, one + a - b, one + a - c, one + h - b - c},
                     {one + a, one + h - b, one + h - c, one + a - b - c}, ctx));
  return out;
}

SeriesResult phi_sum(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                     const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex s = a + b + c + d - one;
  SeriesResult f = pfq({a, b, s}, {a + b + c, a + b + d}, one, ctx);
  return scaled(f, G({a, b, s}, {a + b + c, a + b + d}, ctx));
}

SeriesResult phi_as_3f2(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                        const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex s = a + b + c + d - one;
  Complex den = d * s;
  if (den.is_zero()) throw DivisionByZero("d (a+b+c+d-1) vanishes");
  SeriesResult f = pfq({one, a + d, b + d}, {one + d, s + one}, one, ctx);
  return scaled(f, one / den);
}

IdentityPair symmetric_theorem(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  IdentityPair out;
  out.lhs = added(phi_sum(a, b, c, d, ctx), phi_sum(c, d, a, b, ctx));
  out.rhs = closed(G({a, b, c, d, a + b + c + d - one}, {a + c, a + d, b + c, b + d}, ctx));
  return out;
}

IdentityPair theorem_special_ca_db(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"];
  const Complex two(2);
  IdentityPair out;
  out.lhs = pfq({a, b, two * a + two * b - one}, {a + two * b, two * a + b}, one, ctx);
  Complex r = G({a, b, a + two * b, two * a + b}, {two * a, two * b, a + b, a + b}, ctx);
  out.rhs = closed(detail::half(r));
  return out;
}

IdentityPair theorem_special_b_neg_n(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &c = p["c"], &d = p["d"];
  const long n = p.integer("n");
  const Complex nn(n);
  IdentityPair out;
  out.lhs = pfq({a, a + c + d - one - nn, -nn}, {a + c - nn, a + d - nn}, one, ctx);
  Complex num = pochhammer(one - c, n, ctx) * pochhammer(one - d, n, ctx);
  Complex den = pochhammer(one - a - c, n, ctx) * pochhammer(one - a - d, n, ctx);
  if (den.is_zero()) throw DivisionByZero("(1-a-c)_n (1-a-d)_n vanishes");
  out.rhs = closed(num / den);
  return out;
}

std::optional<ExactPair> theorem_special_b_neg_n_exact(const ParameterSet& p) {
  if (!p.all_real()) return std::nullopt;
  mpq_class a = p["a"].re.to_rational(), c = p["c"].re.to_rational(), d = p["d"].re.to_rational();
  const long n = p.integer("n");
  auto lhs = detail::exact_terminating({a, a + c + d - 1 - n, mpq_class(-n)}, {a + c - n, a + d - n}, n);
  auto n1 = detail::exact_pochhammer(1 - c, n), n2 = detail::exact_pochhammer(1 - d, n);
  auto d1 = detail::exact_pochhammer(1 - a - c, n), d2 = detail::exact_pochhammer(1 - a - d, n);
  if (!lhs || !n1 || !n2 || !d1 || !d2 || *d1 * *d2 == 0) return std::nullopt;
  return ExactPair{*lhs, *n1 * *n2 / (*d1 * *d2)};
}

IdentityPair phi_as_3f2_identity(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  return {phi_sum(c, d, a, b, ctx), phi_as_3f2(a, b, c, d, ctx)};
}

IdentityPair h22_split_identity(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
  IdentityPair out;
  out.lhs = scaled(added(phi_sum(c, d, a, b, ctx), phi_sum(a, b, c, d, ctx)), c * d);
  out.rhs = detail::hseries({one - a, one - b}, {one + c, one + d}, one, ctx);
  return out;
}

SeriesResult saalschuetz_nt_via_theorem(const ParameterSet& p, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  const Complex &a = p["a"], &b = p["b"], &c0 = p["c"], &d0 = p["d"];
  // c -> d0-a-b, d -> c0-a-b in the symmetric formula with Phi(c,d;a,b) as a 3F2.
  const Complex c = d0 - a - b;
  const Complex d = c0 - a - b;
  const Complex s = a + b + c + d - one;
  Complex total = G({a, b, c, d, s}, {a + c, a + d, b + c, b + d}, ctx);
  SeriesResult other = phi_as_3f2(a, b, c, d, ctx);
  Complex pref = G({a, b, s}, {a + b + c, a + b + d}, ctx);
  SeriesResult r = added(closed(total), scaled(other, Complex(-1)));
  return scaled(r, one / pref);
}

}  // namespace hyperid
