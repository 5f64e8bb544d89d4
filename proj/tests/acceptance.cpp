// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "hyperid/accel.hpp"
#include "hyperid/bruteforce.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/gamma.hpp"
#include "hyperid/harness.hpp"
#include "hyperid/identities.hpp"
#include "hyperid/qseries.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

PrecisionContext context(int digits) {
  PrecisionContext ctx;
  ctx.digits = digits;
  return ctx;
}

double rel_err(const Complex& x, const Complex& y) {
  Real d = abs(x - y), s = abs(y);
  return s.is_zero() ? d.to_double() : (d / s).to_double();
}

dcomplex d(const Complex& x) { return {x.re.to_double(), x.im.to_double()}; }

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(3);
  out << x;
  return out.str();
}

SuiteReport suite(const std::vector<std::string>& ids, int samples, std::uint64_t seed, int digits) {
  SuiteConfig cfg;
  cfg.identities = ids;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.digits = digits;
  return run_suite(cfg);
}

// All samples pass and every rel_err stays below `bound`.
void require_suite(Check& check, const SuiteReport& r, double bound) {
  for (const auto& x : r.results) {
    if (!x.pass) check.require(false, x.id + "#" + std::to_string(x.index) + " failed " + x.diagnostic);
    else if (!(x.rel_err < bound)) check.require(false, x.id + "#" + std::to_string(x.index) + " rel_err " + fmt(x.rel_err));
  }
}

Check criterion1() {
  Check check;
  auto t0 = Clock::now();
  auto ctx = context(40);
  ParameterSet p;
  for (const char* n : {"a", "b", "c", "d"}) p.set(n, Complex(Real(0.5)));
  auto pair = symmetric_theorem(p, ctx);
  auto phi = phi_sum(Complex(Real(0.5)), Complex(Real(0.5)), Complex(Real(0.5)), Complex(Real(0.5)), ctx);
  WorkingPrecision wp(ctx);
  Real pi = Real::pi();
  Complex pi2(pi * pi);
  double el = rel_err(pair.lhs.value, pi2), er = rel_err(pair.rhs.value, pi2);
  check.require(el < 1e-25, "lhs rel_err " + fmt(el));
  check.require(er < 1e-25, "rhs rel_err " + fmt(er));
  double ep = rel_err(phi.value, pi2 / Real(2));
  check.require(ep < 1e-25, "Phi rel_err " + fmt(ep));
  check.require(phi.method == Method::levin, std::string("Phi method ") + std::string(to_string(phi.method)));
  check.require(phi.terms_used <= 200, "Phi used " + std::to_string(phi.terms_used) + " terms");
  double t = seconds(t0);
  check.require(t < 1.0, "runtime " + fmt(t) + " s");
  return check;
}

Check criterion2() {
  Check check;
  auto t0 = Clock::now();
  require_suite(check, suite({"theorem-1"}, 50, 2, 40), 1e-20);
  // phi_sum against its 3F2 form on samples with Re(c) >= 5.
  auto ctx = context(40);
  const auto& entry = find_case("phi-as-3f2");
  for (long i = 0; i < 50; ++i) {
    auto p = sample_parameters(entry, 2, i);
    if (p["c"].re < Real(5)) continue;
    auto pair = phi_as_3f2_identity(p, ctx);
    auto r = compare(entry.id, pair, ctx);
    double combined = 100 * (r.lhs_err_estimate + r.rhs_err_estimate);
    check.require(r.abs_err <= std::max(combined, std::pow(10.0, 8 - ctx.digits) * std::abs(d(pair.rhs.value))),
                  "phi-as-3f2#" + std::to_string(i) + " abs_err " + fmt(r.abs_err));
  }
  double t = seconds(t0);
  check.require(t < 60.0, "runtime " + fmt(t) + " s");
  return check;
}

Check criterion3() {
  Check check;
  require_suite(check, suite({"h22-split"}, 20, 3, 30), 1e-15);
  auto ctx = context(30);
  const auto& entry = find_case("saalschuetz-nt");
  for (long i = 0; i < 20; ++i) {
    auto p = sample_parameters(entry, 3, i);
    auto direct = saalschuetz_nonterminating(p, ctx);
    auto via = saalschuetz_nt_via_theorem(p, ctx);
    WorkingPrecision wp(ctx);
    double e = rel_err(via.value, direct.lhs.value);
    check.require(e < 1e-15, "substitution #" + std::to_string(i) + " rel_err " + fmt(e));
  }
  return check;
}

Check criterion4() {
  Check check;
  auto r = suite({"saalschuetz", "gauss-2f1", "dixon", "dougall-2h2", "saalschuetz-nt"}, 20, 4, 30);
  require_suite(check, r, 1e-15);
  for (const auto& x : r.results) {
    if (x.id != "saalschuetz") continue;
    auto p = sample_parameters(find_case("saalschuetz"), 4, x.index);
    check.require(p.integer("n") <= 30, "saalschuetz n > 30");
    if (p.all_real()) check.require(x.exact && x.rel_err == 0, "saalschuetz#" + std::to_string(x.index) + " not exact");
  }
  auto ctx = context(30);
  const auto& entry = find_case("dougall-2h2");
  for (long i = 0; i < 20; ++i) {
    auto p = sample_parameters(entry, 4, i);
    WorkingPrecision wp(ctx);
    const Complex one(1);
    SeriesSpec spec{{p["a"], p["b"]}, {p["c"], p["d"]}, one, SeriesKind::bilateral};
    Real s = (p["c"] + p["d"] - p["a"] - p["b"]).re;
    check.require(Real(15) <= s && s <= Real(30), "dougall exponent out of [15,30]");
    long pos = sum_unilateral(positive_tail(spec), ctx).terms_used;
    long neg = sum_unilateral(reflect_negative_tail(spec).spec, ctx).terms_used;
    check.require(pos <= 10'000 && neg <= 10'000,
                  "dougall#" + std::to_string(i) + " used " + std::to_string(pos) + "/" + std::to_string(neg));
  }
  return check;
}

Check criterion5() {
  Check check;
  auto t0 = Clock::now();
  const std::vector<std::string> ids{"bailey-6psi6", "phi65", "jackson-8phi7", "jackson-nt", "omega", "theta",
                                     "bailey-split"};
  auto r = suite(ids, 20, 5, 30);
  require_suite(check, r, 1e-20);
  for (const auto& x : r.results) {
    auto p = sample_parameters(find_case(x.id), 5, x.index);
    double q = std::abs(d(p["q"]));
    check.require(q > 0.1 && q < 0.8, x.id + " q out of range");
    if (x.id == "jackson-8phi7") {
      check.require(p.integer("n") <= 15, "jackson-8phi7 n > 15");
      if (p.all_real()) check.require(x.exact && x.rel_err == 0, "jackson-8phi7#" + std::to_string(x.index) + " not exact");
    }
  }
  double t = seconds(t0);
  check.require(t < 120.0, "runtime " + fmt(t) + " s");
  return check;
}

Check criterion6() {
  Check check;
  auto ctx = context(30);
  const Complex one(1), two(2);
  auto agree = [&](const Complex& x, const Complex& y, const std::string& what) {
    double e = rel_err(x, y);
    check.require(e < 1e-15, what + " rel_err " + fmt(e));
  };
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(find_case("theorem-1-b-neg-n"), 6, i);
    const long n = p.integer("n");
    ParameterSet s;
    s.set("a", p["a"]).set("b", p["a"] + p["c"] + p["d"] - one - Complex(n)).set("c", p["a"] + p["c"] - Complex(n));
    s.set_integer("n", n);
    auto x = theorem_special_b_neg_n(p, ctx);
    auto y = saalschuetz(s, ctx);
    WorkingPrecision wp(ctx);
    agree(x.lhs.value, y.lhs.value, "b-neg-n lhs #" + std::to_string(i));
    agree(x.rhs.value, y.rhs.value, "b-neg-n rhs #" + std::to_string(i));
  }
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(find_case("phi65"), 6, i);
    ParameterSet b = p;
    b.set("e", p["a"]);
    auto x = bailey_6psi6(b, ctx);
    auto y = phi65(p, ctx);
    WorkingPrecision wp(ctx);
    agree(x.lhs.value, y.lhs.value, "bailey(e=a) lhs #" + std::to_string(i));
    agree(x.rhs.value, y.rhs.value, "bailey(e=a) rhs #" + std::to_string(i));
  }
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(find_case("theorem-1-ca-db"), 6, i);
    const Complex &a = p["a"], &b = p["b"];
    ParameterSet t;
    t.set("a", a).set("b", b).set("c", a).set("d", b);
    ParameterSet x;
    x.set("a", two * a + two * b - one).set("b", b).set("c", a);
    auto special = theorem_special_ca_db(p, ctx);
    auto theorem = symmetric_theorem(t, ctx);
    auto dix = dixon(x, ctx);
    WorkingPrecision wp(ctx);
    std::vector<Complex> num{a, b, two * a + two * b - one}, den{two * a + b, a + two * b};
    Complex twice_pref = two * gamma_ratio(num, den, ctx);
    agree(special.lhs.value, theorem.lhs.value / twice_pref, "ca-db vs theorem lhs #" + std::to_string(i));
    agree(special.rhs.value, theorem.rhs.value / twice_pref, "ca-db vs theorem rhs #" + std::to_string(i));
    agree(special.lhs.value, dix.lhs.value, "ca-db vs dixon lhs #" + std::to_string(i));
    agree(special.rhs.value, dix.rhs.value, "ca-db vs dixon rhs #" + std::to_string(i));
  }
  return check;
}

Check criterion7() {
  Check check;
  const int digits = 30;
  auto ctx = context(digits);
  {
    WorkingPrecision wp(ctx);
    std::mt19937_64 gen(7007);
    std::uniform_int_distribution<long> u(-10L << 20, 10L << 20);
    const double tol = std::pow(10.0, 2 - digits);
    const Complex one(1), pi(Real::pi());
    double worst_rec = 0, worst_ref = 0;
    for (int i = 0; i < 1000; ++i) {
      Complex z(ldexp(Real(u(gen)), -20), ldexp(Real(u(gen)), -20));
      Complex g = gamma(z, ctx);
      worst_rec = std::max(worst_rec, rel_err(z * g, gamma(z + one, ctx)));
      worst_ref = std::max(worst_ref, rel_err(g * gamma(one - z, ctx) * sin(pi * z) / pi, one));
    }
    check.require(worst_rec < tol, "gamma recurrence " + fmt(worst_rec));
    check.require(worst_ref < tol, "gamma reflection " + fmt(worst_ref));

    std::uniform_int_distribution<int> idx(-8, 8);
    std::uniform_real_distribution<double> ux(-3, 3);
    QContext qc{Complex(Real(0.375), Real(0.25)), ctx};
    double worst_p = 0, worst_qp = 0;
    for (int i = 0; i < 300; ++i) {
      Complex x(Real(ux(gen)), Real(ux(gen)));
      int n = idx(gen), m = idx(gen);
      worst_p = std::max(worst_p, rel_err(pochhammer(x, n + m, ctx),
                                          pochhammer(x, n, ctx) * pochhammer(x + Complex(n), m, ctx)));
      worst_qp = std::max(worst_qp, rel_err(q_pochhammer(x, qc, n + m),
                                            q_pochhammer(x, qc, n) * q_pochhammer(x * pow(qc.q, n), qc, m)));
    }
    check.require(worst_p < tol, "pochhammer functional equation " + fmt(worst_p));
    check.require(worst_qp < tol, "q-pochhammer functional equation " + fmt(worst_qp));
  }
  {
    auto c20 = context(20);
    auto r = levin_u([k = 1L]() mutable {
                       Real x(k++);
                       return Complex(Real(1) / (x * x));
                     },
                     c20);
    PrecisionGuard g(40);
    Real pi = Real::pi();
    double e = rel_err(r.value, Complex(pi * pi / Real(6)));
    check.require(e < 1e-20, "Levin zeta(2) rel_err " + fmt(e));
    check.require(r.terms_used <= 60, "Levin used " + std::to_string(r.terms_used) + " terms");
  }
  const long K = 10'000;
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(find_case("dougall-2h2"), 7, i);
    auto pair = dougall_2h2(p, ctx);
    auto brute = brute_bilateral({d(p["a"]), d(p["b"])}, {d(p["c"]), d(p["d"])}, 1.0, K);
    double err = std::abs(brute.value - d(pair.lhs.value));
    check.require(err <= brute.tail_bound + brute.rounding, "2H2 brute #" + std::to_string(i) + " off by " + fmt(err));
  }
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(find_case("bailey-6psi6"), 7, i);
    auto pair = bailey_6psi6(p, ctx);
    WorkingPrecision wp(ctx);
    const Complex &q = p["q"], &a = p["a"], &b = p["b"], &c = p["c"], &dd = p["d"], &e = p["e"];
    const Complex r = principal_sqrt(a), qa = q * a;
    auto brute = brute_q_bilateral({d(q * r), d(-q * r), d(b), d(c), d(dd), d(e)},
                                   {d(r), d(-r), d(qa / b), d(qa / c), d(qa / dd), d(qa / e)},
                                   d(qa * a / (b * c * dd * e)), d(q), K);
    double err = std::abs(brute.value - d(pair.lhs.value));
    check.require(err <= brute.tail_bound + brute.rounding, "6psi6 brute #" + std::to_string(i) + " off by " + fmt(err));
  }
  return check;
}

int cli_status(const std::string& args, std::string& out) {
  std::string cmd = std::string(HYPERID_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[1024];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int raw = pclose(pipe);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Check criterion8() {
  Check check;
  auto ctx = context(30);
  IdentityCase fixture = find_case("gauss-2f1");
  auto inner = fixture.evaluate;
  fixture.evaluate = [inner](const ParameterSet& p, const PrecisionContext& c) {
    IdentityPair pair = inner(p, c);
    WorkingPrecision wp(c);
    pair.rhs.value = pair.rhs.value * (Real(1) + pow10(-5));
    return pair;
  };
  for (long i = 0; i < 5; ++i) {
    auto p = sample_parameters(fixture, 8, i);
    check.require(!verify_one(fixture, p, ctx).pass, "perturbed fixture #" + std::to_string(i) + " passed");
  }
  // q = 1/2, a = 4, b = c = d = e = 5/4: |q a^2 / bcde| > 1.
  ParameterSet bad;
  bad.set("q", Complex(Real(0.5))).set("a", Complex(4));
  for (const char* n : {"b", "c", "d", "e"}) bad.set(n, Complex(Real(1.25)));
  bool domain = false;
  try {
    bailey_6psi6(bad, ctx);
  } catch (const DomainError&) {
    domain = true;
  } catch (const Error& e) {
    check.require(false, std::string("library raised ") + e.name());
  }
  check.require(domain, "library call did not raise DomainError");
  std::string out;
  int status = cli_status("eval psi --upper 1,-1,1.25,1.25,1.25,1.25 --lower 2,-2,1.6,1.6,1.6,1.6 --z 3.2768 --q 0.5", out);
  check.require(status == 1, "CLI exit status " + std::to_string(status));
  check.require(out.find("DomainError") != std::string::npos, "CLI output lacks DomainError");
  return check;
}

}  // namespace

int main() {
  const std::vector<std::function<Check()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                     criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Check c;
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " (" << fmt(seconds(t0)) << " s)";
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::cout << "\n    " << c.failures[k];
    if (c.failures.size() > 5) std::cout << "\n    ... " << c.failures.size() - 5 << " more";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
