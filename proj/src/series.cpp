#include "hyperid/series.hpp"

#include "hyperid/accel.hpp"
#include "hyperid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperid {
namespace {

// term_{k+1} / term_k = z prod(a_i + k) / ((1 + k) prod(b_j + k))
class RatioRecurrence {
 public:
  explicit RatioRecurrence(const SeriesSpec& spec) : spec_(spec) {}

  Complex operator()(long k) const {
    Real kk(k);
    Complex num = spec_.argument;
    for (const auto& a : spec_.uppers) num *= a + Complex(kk);
    Complex den(kk + Real(1));
    for (const auto& b : spec_.lowers) den *= b + Complex(kk);
    return num / den;
  }

 private:
  const SeriesSpec& spec_;
};

int method_rank(Method m) {
  switch (m) {
    case Method::exact: return 0;
    case Method::closed_form: return 0;
    case Method::terminating: return 1;
    case Method::direct: return 2;
    case Method::direct_tail: return 3;
    case Method::wynn: return 4;
    case Method::levin: return 5;
  }
  return 5;
}

void check_lower_poles(const SeriesSpec& spec, const ConvergenceClass& cls) {
  for (const auto& b : spec.lowers) {
    if (!b.is_nonpositive_integer()) continue;
    long m = -b.re.to_long();
    if (cls.tag == ConvergenceClass::Tag::terminating && cls.terms <= m) continue;
    throw LowerPoleError("lower parameter " + b.to_string(20) + " is a nonpositive integer");
  }
}

SeriesResult sum_terminating(const SeriesSpec& spec, const ConvergenceClass& cls,
                             const PrecisionContext& ctx, Real& peak) {
  if (cls.terms + 1 > ctx.max_terms) throw BudgetExceeded("terminating series longer than max_terms");
  RatioRecurrence ratio(spec);
  Complex term(1);
  Complex sum(1);
  peak = Real(1);
  for (long k = 0; k < cls.terms; ++k) {
    term *= ratio(k);
    sum += term;
    peak = max(peak, abs(term));
  }
  return {sum, Real(0), cls.terms + 1, Method::terminating, cls};
}

SeriesResult sum_geometric(const SeriesSpec& spec, const ConvergenceClass& cls,
                           const PrecisionContext& ctx, Real& peak) {
  RatioRecurrence ratio(spec);
  const Real eps = ctx.working_epsilon();
  Complex term(1);
  Complex sum(1);
  Real last_ratio(0);
  int small = 0;
  long k = 0;
  peak = Real(1);
  while (small < 3) {
    if (k + 2 > ctx.max_terms) throw BudgetExceeded("geometric series exceeded max_terms");
    Complex r = ratio(k);
    term *= r;
    sum += term;
    peak = max(peak, abs(term));
    ++k;
    last_ratio = abs(r);
    small = abs(term) < eps * abs(sum) ? small + 1 : 0;
  }
  Real rho = max(cls.ratio, last_ratio);
  Real err = rho < Real(1) ? abs(term) * rho / (Real(1) - rho) : abs(term);
  return {sum, err, k + 1, Method::direct, cls};
}

// Terms before k ~ max |parameter| are not yet in their asymptotic regime
// and slow the transform down; they are summed directly and the Levin
// transform sees the tail only. Retried with a longer head on failure.
SeriesResult sum_levin(const SeriesSpec& spec, const ConvergenceClass& cls, const PrecisionContext& ctx) {
  double largest = 0;
  for (const auto& x : spec.uppers) largest = std::max(largest, abs(x).to_double());
  for (const auto& x : spec.lowers) largest = std::max(largest, abs(x).to_double());
  long head = static_cast<long>(std::ceil(largest));
  for (int attempt = 0;; ++attempt) {
    PrecisionGuard guard(levin_digits(ctx));
    RatioRecurrence ratio(spec);
    Complex term(1);
    Complex sum(0);
    long k = 0;
    for (; k < head; ++k) {
      sum += term;
      term *= ratio(k);
    }
    TermStream stream = [&, first = true]() mutable -> Complex {
      if (first) {
        first = false;
      } else {
        term *= ratio(k);
        ++k;
      }
      return term;
    };
    try {
      SeriesResult r = levin_u(stream, ctx);
      r.value += sum;
      r.terms_used += head;
      r.convergence = cls;
      return r;
    } catch (const AccelerationFailed&) {
      if (attempt == 2 || head * 2 + 32 > ctx.max_terms / 2) throw;
      head = head * 2 + 32;
    }
  }
}

SeriesResult sum_algebraic(const SeriesSpec& spec, const ConvergenceClass& cls,
                           const PrecisionContext& ctx, Real& peak) {
  const long cap = std::min(ctx.max_terms, kDirectAlgebraicCap);
  const Real& s = cls.exponent;
  const Real tol = ctx.target_epsilon();
  RatioRecurrence ratio(spec);

  Complex term(1);
  Complex sum(1);
  long k = 0;
  peak = Real(1);
  auto advance = [&](long until) {
    for (; k < until; ++k) {
      term *= ratio(k);
      sum += term;
      peak = max(peak, abs(term));
    }
  };

  advance(std::min<long>(64, cap - 1));
  // term_k ~ C k^-s: estimate C, then the K with C K^(1-s)/(s-1) < tol |S|.
  Real mag = abs(term);
  Real scale = abs(sum);
  long needed = cap + 1;
  if (!mag.is_zero() && !scale.is_zero()) {
    Real c = mag * pow(Real(k), s);
    Real log_k = (log(c) - log((s - Real(1)) * tol * scale)) / (s - Real(1));
    double estimate = std::exp(log_k.to_double());
    if (std::isfinite(estimate) && estimate < static_cast<double>(cap)) {
      needed = std::max<long>(k, static_cast<long>(std::ceil(estimate)));
    }
  }
  if (needed <= cap) {
    advance(needed);
    while (true) {
      Real bound = tail_bound_algebraic(k, s, abs(term));
      if (bound <= tol * abs(sum)) {
        return {sum, bound, k + 1, Method::direct_tail, cls};
      }
      if (k + 16 >= cap) break;
      advance(k + 16);
    }
  }
  peak = Real(0);
  return sum_levin(spec, cls, ctx);
}

SeriesResult dispatch(const SeriesSpec& spec, const ConvergenceClass& cls, const PrecisionContext& ctx,
                      Real& peak) {
  switch (cls.tag) {
    case ConvergenceClass::Tag::terminating: return sum_terminating(spec, cls, ctx, peak);
    case ConvergenceClass::Tag::geometric: return sum_geometric(spec, cls, ctx, peak);
    case ConvergenceClass::Tag::algebraic: return sum_algebraic(spec, cls, ctx, peak);
    case ConvergenceClass::Tag::divergent: break;
  }
  throw DivergentError("series diverges (|z| > 1, or |z| = 1 with Re(sum lowers + 1 - sum uppers) <= 1)");
}

}  // namespace

int cancellation_guard(const Real& peak, const Complex& value, const PrecisionContext& ctx) {
  if (peak.is_zero()) return 0;
  Real size = abs(value);
  Real room = pow10(ctx.guard_digits - 3);
  if (!size.is_zero() && peak <= size * room) return 0;
  double lost = size.is_zero() ? 2.0 * ctx.digits : log10(peak / size).to_double();
  lost = std::min(lost, 2.0 * ctx.digits);
  return std::max(1, static_cast<int>(std::ceil(lost)) + 3 - ctx.guard_digits);
}

void SeriesSpec::validate() const {
  if (kind == SeriesKind::unilateral && uppers.empty()) {
    throw ConfigError("unilateral series needs at least one upper parameter");
  }
  if (kind == SeriesKind::bilateral && uppers.size() != lowers.size()) {
    throw ConfigError("bilateral series needs equal numbers of upper and lower parameters");
  }
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::terminating: return "terminating";
    case Method::direct: return "direct";
    case Method::direct_tail: return "direct+tail";
    case Method::levin: return "levin";
    case Method::wynn: return "wynn";
    case Method::closed_form: return "closed-form";
    case Method::exact: return "exact";
  }
  return "unknown";
}

ConvergenceClass ConvergenceClass::terminating(long n) {
  ConvergenceClass c;
  c.tag = Tag::terminating;
  c.terms = n;
  return c;
}

ConvergenceClass ConvergenceClass::geometric(Real rho) {
  ConvergenceClass c;
  c.tag = Tag::geometric;
  c.ratio = std::move(rho);
  return c;
}

ConvergenceClass ConvergenceClass::algebraic(Real s) {
  ConvergenceClass c;
  c.tag = Tag::algebraic;
  c.exponent = std::move(s);
  return c;
}

ConvergenceClass ConvergenceClass::divergent() { return ConvergenceClass{}; }

std::string ConvergenceClass::describe() const {
  switch (tag) {
    case Tag::terminating: return "terminating(" + std::to_string(terms) + ")";
    case Tag::geometric: return "geometric(" + ratio.to_string(6) + ")";
    case Tag::algebraic: return "algebraic(" + exponent.to_string(6) + ")";
    case Tag::divergent: return "divergent";
  }
  return "divergent";
}

SeriesSpec cancel_common_pairs(const SeriesSpec& spec) {
  SeriesSpec out;
  out.argument = spec.argument;
  out.kind = spec.kind;
  out.lowers = spec.lowers;
  for (const auto& a : spec.uppers) {
    auto it = std::find(out.lowers.begin(), out.lowers.end(), a);
    if (it != out.lowers.end()) {
      out.lowers.erase(it);
    } else {
      out.uppers.push_back(a);
    }
  }
  return out;
}

SeriesSpec positive_tail(const SeriesSpec& spec) {
  SeriesSpec out;
  out.uppers = spec.uppers;
  out.uppers.push_back(Complex(1));  // cancels the k! of the unilateral form
  out.lowers = spec.lowers;
  out.argument = spec.argument;
  return out;
}

ReflectedTail reflect_negative_tail(const SeriesSpec& spec) {
  if (spec.argument.is_zero()) throw DomainError("bilateral series at z = 0");
  ReflectedTail out;
  Complex num(1);
  Complex den = spec.argument;
  for (const auto& b : spec.lowers) {
    num *= Complex(1) - b;
    out.spec.uppers.push_back(Complex(2) - b);
  }
  out.spec.uppers.push_back(Complex(1));
  for (const auto& a : spec.uppers) {
    Complex f = Complex(1) - a;
    if (f.is_zero()) throw LowerPoleError("upper parameter 1 makes the k < 0 terms infinite");
    den *= f;
    out.spec.lowers.push_back(Complex(2) - a);
  }
  out.spec.argument = Complex(1) / spec.argument;
  out.prefactor = num / den;
  return out;
}

ConvergenceClass classify(const SeriesSpec& input) {
  using Tag = ConvergenceClass::Tag;
  SeriesSpec spec = cancel_common_pairs(input);

  if (spec.kind == SeriesKind::bilateral) {
    if (spec.uppers.size() != spec.lowers.size()) return ConvergenceClass::divergent();
    ConvergenceClass plus = classify(positive_tail(spec));
    ConvergenceClass minus;
    try {
      ReflectedTail tail = reflect_negative_tail(spec);
      minus = tail.prefactor.is_zero() ? ConvergenceClass::terminating(0) : classify(tail.spec);
    } catch (const Error&) {
      return ConvergenceClass::divergent();
    }
    if (plus.tag == Tag::divergent || minus.tag == Tag::divergent) return ConvergenceClass::divergent();
    if (plus.tag == Tag::terminating && minus.tag == Tag::terminating) {
      return ConvergenceClass::terminating(plus.terms + minus.terms);
    }
    if (plus.tag == Tag::algebraic || minus.tag == Tag::algebraic) {
      if (plus.tag == Tag::algebraic && minus.tag == Tag::algebraic) {
        return ConvergenceClass::algebraic(min(plus.exponent, minus.exponent));
      }
      return plus.tag == Tag::algebraic ? plus : minus;
    }
    if (plus.tag == Tag::terminating) return minus;
    if (minus.tag == Tag::terminating) return plus;
    return ConvergenceClass::geometric(max(plus.ratio, minus.ratio));
  }

  if (spec.argument.is_zero()) return ConvergenceClass::terminating(0);
  bool found = false;
  long n = 0;
  for (const auto& a : spec.uppers) {
    if (!a.is_nonpositive_integer()) continue;
    long m = -a.re.to_long();
    if (!found || m < n) n = m;
    found = true;
  }
  if (found) return ConvergenceClass::terminating(n);

  const std::size_t p = spec.uppers.size();
  const std::size_t q = spec.lowers.size();
  if (p <= q) return ConvergenceClass::geometric(Real(0));
  if (p > q + 1) return ConvergenceClass::divergent();
  Real modulus = abs(spec.argument);
  if (modulus < Real(1)) return ConvergenceClass::geometric(modulus);
  if (modulus > Real(1)) return ConvergenceClass::divergent();
  Real s(1);
  for (const auto& b : spec.lowers) s += b.re;
  for (const auto& a : spec.uppers) s -= a.re;
  if (s <= Real(1)) return ConvergenceClass::divergent();
  return ConvergenceClass::algebraic(s);
}

SeriesResult sum_unilateral(const SeriesSpec& input, const PrecisionContext& ctx) {
  if (input.kind != SeriesKind::unilateral) throw ConfigError("sum_unilateral needs a unilateral spec");
  input.validate();
  PrecisionContext run = ctx;
  while (true) {
    WorkingPrecision wp(run);
    SeriesSpec spec = cancel_common_pairs(input);
    ConvergenceClass cls = classify(spec);
    check_lower_poles(spec, cls);
    Real peak;
    SeriesResult r = dispatch(spec, cls, run, peak);
    // Terms much larger than the sum: rerun with enough guard digits to
    // absorb the cancellation, at most once past 2*digits.
    int extra = cancellation_guard(peak, r.value, run);
    if (extra == 0 || run.guard_digits > ctx.guard_digits + 2 * ctx.digits) {
      r.err_estimate += peak * run.working_epsilon();
      return r;
    }
    run.guard_digits += extra;
  }
}

SeriesResult sum_bilateral(const SeriesSpec& input, const PrecisionContext& ctx) {
  if (input.kind != SeriesKind::bilateral) throw ConfigError("sum_bilateral needs a bilateral spec");
  input.validate();
  WorkingPrecision wp(ctx);
  SeriesSpec spec = cancel_common_pairs(input);
  ConvergenceClass cls = classify(spec);
  if (cls.tag == ConvergenceClass::Tag::divergent) {
    reflect_negative_tail(spec);  // surfaces LowerPoleError for an upper equal to 1
    if (abs(spec.argument) != Real(1)) throw DivergentError("bilateral series needs |z| = 1");
    throw NotConvergent("bilateral series needs Re(sum b - sum a) > 1");
  }

  SeriesResult plus = sum_unilateral(positive_tail(spec), ctx);
  ReflectedTail tail = reflect_negative_tail(spec);
  SeriesResult out = plus;
  out.convergence = cls;
  if (tail.prefactor.is_zero()) return out;

  SeriesResult minus = sum_unilateral(tail.spec, ctx);
  out.value = plus.value + tail.prefactor * minus.value;
  out.err_estimate = plus.err_estimate + abs(tail.prefactor) * minus.err_estimate;
  out.terms_used = plus.terms_used + minus.terms_used;
  if (method_rank(minus.method) > method_rank(plus.method)) out.method = minus.method;
  return out;
}

}  // namespace hyperid
