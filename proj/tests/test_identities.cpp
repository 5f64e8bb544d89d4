#include "hyperid/errors.hpp"
#include "hyperid/gamma.hpp"
#include "hyperid/harness.hpp"
#include "hyperid/identities.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <set>

using namespace hyperid;
using hyperid::testing::c;
using hyperid::testing::context;
using hyperid::testing::rel_err;

namespace {

ParameterSet params(std::initializer_list<std::pair<const char*, double>> values) {
  ParameterSet p;
  for (const auto& [name, v] : values) p.set(name, c(v));
  return p;
}

Complex pi_squared() {
  Real pi = Real::pi();
  return Complex(pi * pi);
}

void expect_equal_sides(const IdentityPair& pair, const PrecisionContext& ctx, double tol) {
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(pair.lhs.value, pair.rhs.value), tol);
}

}  // namespace

TEST(Catalog, HasSeventeenUniqueEntries) {
  const auto& all = catalog();
  ASSERT_EQ(all.size(), 17u);
  std::set<std::string> ids;
  for (const auto& e : all) ids.insert(e.id);
  EXPECT_EQ(ids.size(), 17u);
  EXPECT_EQ(all.front().id, "saalschuetz");
  EXPECT_THROW(find_case("no-such-identity"), ConfigError);
  EXPECT_EQ(&find_case("dixon"), &find_case("dixon"));
}

TEST(Catalog, ConstraintsRejectBadParameters) {
  // a = c puts Gamma(c-a) on a pole in the Dougall sum.
  auto p = params({{"a", 0.5}, {"b", 0.75}, {"c", 0.5}, {"d", 16}});
  EXPECT_TRUE(find_case("dougall-2h2").violated(p).has_value());
  auto g = params({{"a", 1}, {"b", 1}, {"c", 1.5}});
  EXPECT_TRUE(find_case("gauss-2f1").violated(g).has_value());
}

TEST(Saalschuetz, Examples) {
  auto ctx = context(30);
  auto p = params({{"a", 1}, {"b", 2}, {"c", 5}});
  p.set_integer("n", 1);
  auto pair = saalschuetz(p, ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(pair.lhs.value, Complex(Real(6) / Real(5))), 1e-38);
  EXPECT_LT(rel_err(pair.rhs.value, Complex(Real(6) / Real(5))), 1e-38);
  p.set_integer("n", 0);
  auto zero = saalschuetz(p, ctx);
  EXPECT_EQ(zero.lhs.value, Complex(1));
  EXPECT_EQ(zero.rhs.value, Complex(1));
}

TEST(Saalschuetz, ExactRouteAtDyadicParameters) {
  auto p = params({{"a", 0.375}, {"b", 1.25}, {"c", 2.5625}});
  p.set_integer("n", 17);
  auto exact = saalschuetz_exact(p);
  ASSERT_TRUE(exact.has_value());
  EXPECT_EQ(exact->lhs, exact->rhs);
  p.set("a", c(0.375, 0.5));
  EXPECT_FALSE(saalschuetz_exact(p).has_value());
}

TEST(SaalschuetzNonterminating, Example) {
  auto ctx = context(30);
  expect_equal_sides(saalschuetz_nonterminating(params({{"a", 0.5}, {"b", 0.5}, {"c", 3}, {"d", 12.5}}), ctx), ctx,
                     1e-25);
}

TEST(SaalschuetzNonterminating, SubstitutionIntoTheoremReproducesIt) {
  auto ctx = context(30);
  const auto& entry = find_case("saalschuetz-nt");
  for (long i = 0; i < 20; ++i) {
    auto p = sample_parameters(entry, 99, i);
    auto direct = saalschuetz_nonterminating(p, ctx);
    auto via = saalschuetz_nt_via_theorem(p, ctx);
    WorkingPrecision wp(ctx);
    EXPECT_LT(rel_err(via.value, direct.lhs.value), 1e-15) << i;
  }
}

TEST(Dougall, ExampleAtLargeExponent) {
  auto ctx = context(30);
  auto pair = dougall_2h2(params({{"a", 0.5}, {"b", 0.5}, {"c", 10}, {"d", 11}}), ctx);
  expect_equal_sides(pair, ctx, 1e-22);
  EXPECT_LE(pair.lhs.terms_used, 20'000);
}

TEST(Gauss, Examples) {
  auto ctx = context(30);
  auto pair = gauss_2f1(params({{"a", 1}, {"b", 1}, {"c", 3}}), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(pair.lhs.value, c(2)), 1e-28);
  EXPECT_LT(rel_err(pair.rhs.value, c(2)), 1e-35);
  auto zero = gauss_2f1(params({{"a", 0}, {"b", 1.5}, {"c", 7}}), ctx);
  EXPECT_EQ(zero.lhs.value, c(1));
  EXPECT_LT(rel_err(zero.rhs.value, c(1)), 1e-35);
}

TEST(Gauss, ChuVandermonde) {
  auto ctx = context(30);
  expect_equal_sides(gauss_2f1(params({{"a", 0.75}, {"b", -6}, {"c", 2.25}}), ctx), ctx, 1e-30);
}

TEST(Dixon, Examples) {
  auto ctx = context(30);
  auto zero = dixon(params({{"a", 3.5}, {"b", 0.25}, {"c", 0}}), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_EQ(zero.lhs.value, c(1));
  EXPECT_LT(rel_err(zero.rhs.value, c(1)), 1e-35);
  expect_equal_sides(dixon(params({{"a", 9.5}, {"b", -4}, {"c", 1.25}}), ctx), ctx, 1e-28);
}

TEST(Phi, HalvesGivePiSquaredOverTwo) {
  auto ctx = context(30);
  auto s = phi_sum(c(0.5), c(0.5), c(0.5), c(0.5), ctx);
  auto t = phi_as_3f2(c(0.5), c(0.5), c(0.5), c(0.5), ctx);
  WorkingPrecision wp(ctx);
  Complex half_pi2 = pi_squared() / Real(2);
  EXPECT_LT(rel_err(s.value, half_pi2), 1e-25);
  EXPECT_LT(rel_err(t.value, half_pi2), 1e-25);
}

TEST(Theorem, AnalyticAnchor) {
  auto ctx = context(30);
  auto pair = symmetric_theorem(params({{"a", 0.5}, {"b", 0.5}, {"c", 0.5}, {"d", 0.5}}), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(pair.lhs.value, pi_squared()), 1e-25);
  EXPECT_LT(rel_err(pair.rhs.value, pi_squared()), 1e-35);
}

TEST(Theorem, SymmetricSwapInvariance) {
  auto ctx = context(30);
  auto p = params({{"a", 0.625}, {"b", 1.75}, {"c", 0.875}, {"d", 2.125}});
  auto q = params({{"a", 0.875}, {"b", 2.125}, {"c", 0.625}, {"d", 1.75}});
  auto x = symmetric_theorem(p, ctx), y = symmetric_theorem(q, ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(x.lhs.value, y.lhs.value), 1e-25);
  EXPECT_LT(rel_err(x.rhs.value, y.rhs.value), 1e-35);
}

TEST(Theorem, H22SplitAtHalves) {
  auto ctx = context(30);
  auto pair = h22_split_identity(params({{"a", 0.5}, {"b", 0.5}, {"c", 0.5}, {"d", 0.5}}), ctx);
  WorkingPrecision wp(ctx);
  Complex quarter_pi2 = pi_squared() / Real(4);
  EXPECT_LT(rel_err(pair.lhs.value, quarter_pi2), 1e-25);
  EXPECT_LT(rel_err(pair.rhs.value, quarter_pi2), 1e-25);
}

TEST(Theorem, SpecialCaseCaDbAtHalves) {
  // 3F2(1/2,1/2,1; 3/2,3/2; 1) = sum 1/(2k+1)^2 = pi^2/8
  auto ctx = context(30);
  auto pair = theorem_special_ca_db(params({{"a", 0.5}, {"b", 0.5}}), ctx);
  WorkingPrecision wp(ctx);
  Complex eighth = pi_squared() / Real(8);
  EXPECT_LT(rel_err(pair.lhs.value, eighth), 1e-25);
  EXPECT_LT(rel_err(pair.rhs.value, eighth), 1e-35);
}

TEST(Theorem, SpecialCaseBNegN) {
  auto ctx = context(30);
  auto p = params({{"a", 1}, {"c", 2}, {"d", 3}});
  p.set_integer("n", 1);
  auto pair = theorem_special_b_neg_n(p, ctx);
  WorkingPrecision wp(ctx);
  Complex third = Complex(Real(1) / Real(3));
  EXPECT_LT(rel_err(pair.lhs.value, third), 1e-38);
  EXPECT_LT(rel_err(pair.rhs.value, third), 1e-38);
  p.set_integer("n", 0);
  auto zero = theorem_special_b_neg_n(p, ctx);
  EXPECT_EQ(zero.lhs.value, c(1));
  EXPECT_EQ(zero.rhs.value, c(1));
  auto r = params({{"a", 0.3125}, {"c", 1.875}, {"d", 0.8125}});
  r.set_integer("n", 20);
  auto exact = theorem_special_b_neg_n_exact(r);
  ASSERT_TRUE(exact.has_value());
  EXPECT_EQ(exact->lhs, exact->rhs);
}

TEST(Coherence, BNegNMatchesSaalschuetz) {
  auto ctx = context(30);
  const auto& entry = find_case("theorem-1-b-neg-n");
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(entry, 5, i);
    const long n = p.integer("n");
    const Complex &a = p["a"], &cc = p["c"], &d = p["d"];
    ParameterSet s;
    s.set("a", a).set("b", a + cc + d - Complex(1) - Complex(n)).set("c", a + cc - Complex(n)).set_integer("n", n);
    auto x = theorem_special_b_neg_n(p, ctx);
    auto y = saalschuetz(s, ctx);
    WorkingPrecision wp(ctx);
    EXPECT_LT(rel_err(x.lhs.value, y.lhs.value), 1e-15) << i;
    EXPECT_LT(rel_err(x.rhs.value, y.rhs.value), 1e-15) << i;
  }
}

TEST(Coherence, CaDbMatchesTheoremAndDixon) {
  auto ctx = context(30);
  const auto& entry = find_case("theorem-1-ca-db");
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(entry, 5, i);
    const Complex &a = p["a"], &b = p["b"];
    ParameterSet t;
    t.set("a", a).set("b", b).set("c", a).set("d", b);
    ParameterSet x;
    x.set("a", Complex(2) * a + Complex(2) * b - Complex(1)).set("b", b).set("c", a);
    auto special = theorem_special_ca_db(p, ctx);
    auto theorem = symmetric_theorem(t, ctx);
    auto dix = dixon(x, ctx);
    WorkingPrecision wp(ctx);
    // Theorem at (a,b,a,b): 2 * Gamma prefactor * 3F2 = Gamma-product.
    const Complex two_a_b = Complex(2) * a + b, a_two_b = a + Complex(2) * b;
    Complex pref = gamma(a, ctx) * gamma(b, ctx) * gamma(Complex(2) * a + Complex(2) * b - Complex(1), ctx) /
                   (gamma(two_a_b, ctx) * gamma(a_two_b, ctx));
    Complex from_theorem_lhs = theorem.lhs.value / (Complex(2) * pref);
    Complex from_theorem_rhs = theorem.rhs.value / (Complex(2) * pref);
    EXPECT_LT(rel_err(special.lhs.value, from_theorem_lhs), 1e-15) << i;
    EXPECT_LT(rel_err(special.rhs.value, from_theorem_rhs), 1e-15) << i;
    EXPECT_LT(rel_err(special.lhs.value, dix.lhs.value), 1e-15) << i;
    EXPECT_LT(rel_err(special.rhs.value, dix.rhs.value), 1e-15) << i;
  }
}

TEST(Coherence, BaileyWithEEqualAMatchesPhi65) {
  auto ctx = context(30);
  const auto& entry = find_case("phi65");
  for (long i = 0; i < 10; ++i) {
    auto p = sample_parameters(entry, 5, i);
    ParameterSet b = p;
    b.set("e", p["a"]);
    auto x = bailey_6psi6(b, ctx);
    auto y = phi65(p, ctx);
    WorkingPrecision wp(ctx);
    EXPECT_LT(rel_err(x.lhs.value, y.lhs.value), 1e-15) << i;
    EXPECT_LT(rel_err(x.rhs.value, y.rhs.value), 1e-15) << i;
  }
}

TEST(QIdentities, BaileyExample) {
  auto ctx = context(30);
  auto p = params({{"q", 0.5}, {"a", 2.25}, {"b", 3}, {"c", 3}, {"d", 3}, {"e", 3}});
  expect_equal_sides(bailey_6psi6(p, ctx), ctx, 1e-25);
}

TEST(QIdentities, Phi65TerminatingAndSmallArgument) {
  auto ctx = context(30);
  // b = q^-3 truncates the series after four terms.
  auto p = params({{"q", 0.5}, {"a", 1.5}, {"b", 8}, {"c", 2.25}, {"d", 1.25}});
  auto pair = phi65(p, ctx);
  EXPECT_EQ(pair.lhs.method, Method::terminating);
  expect_equal_sides(pair, ctx, 1e-28);
  // Large b, c, d push the argument toward 0.
  auto far = phi65(params({{"q", 0.5}, {"a", 1.5}, {"b", 1e6}, {"c", 2e6}, {"d", 3e6}}), ctx);
  expect_equal_sides(far, ctx, 1e-28);
}

TEST(QIdentities, JacksonTerminating) {
  auto ctx = context(30);
  auto p = params({{"q", 0.5}, {"a", 1.75}, {"b", 0.625}, {"c", 2.5}, {"d", 1.375}});
  p.set_integer("n", 0);
  auto zero = jackson_8phi7(p, ctx);
  WorkingPrecision wp(ctx);
  EXPECT_EQ(zero.lhs.value, c(1));
  EXPECT_EQ(zero.rhs.value, c(1));
  for (long n : {1L, 2L, 9L}) {
    p.set_integer("n", n);
    expect_equal_sides(jackson_8phi7(p, ctx), ctx, 1e-28);
    auto exact = jackson_8phi7_exact(p);
    ASSERT_TRUE(exact.has_value()) << n;
    EXPECT_EQ(exact->lhs, exact->rhs) << n;
  }
}

TEST(QIdentities, JacksonNonterminatingBranchInvariance) {
  auto ctx = context(30);
  auto p = sample_parameters(find_case("jackson-nt"), 8, 0);
  auto x = jackson_nonterminating(p, ctx, RootBranch::principal);
  auto y = jackson_nonterminating(p, ctx, RootBranch::negated);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(x.lhs.value, y.lhs.value), 1e-25);
  EXPECT_LT(rel_err(x.rhs.value, y.rhs.value), 1e-25);
  EXPECT_LT(rel_err(x.lhs.value, x.rhs.value), 1e-20);
}

TEST(QIdentities, SplitThreeWayCheck) {
  auto ctx = context(30);
  const auto& entry = find_case("bailey-split");
  for (long i = 0; i < 5; ++i) {
    auto p = sample_parameters(entry, 21, i);
    auto omega = omega_sum(p, ctx);
    auto theta = theta_sum(p, ctx);
    auto split = bailey_split(p, ctx);
    WorkingPrecision wp(ctx);
    EXPECT_LT(rel_err(omega.lhs.value, omega.rhs.value), 1e-20) << i;
    EXPECT_LT(rel_err(theta.lhs.value, theta.rhs.value), 1e-20) << i;
    EXPECT_LT(rel_err(omega.rhs.value + theta.rhs.value, split.lhs.value), 1e-20) << i;
    auto neg = omega_sum(p, ctx, RootBranch::negated);
    EXPECT_LT(rel_err(neg.lhs.value, omega.lhs.value), 1e-25) << i;
  }
}
