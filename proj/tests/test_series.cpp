#include "hyperid/errors.hpp"
#include "hyperid/gamma.hpp"
#include "hyperid/series.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hyperid;
using hyperid::testing::c;
using hyperid::testing::context;
using hyperid::testing::rel_err;

namespace {

SeriesSpec uni(std::vector<Complex> up, std::vector<Complex> lo, Complex z) {
  return SeriesSpec{std::move(up), std::move(lo), std::move(z), SeriesKind::unilateral};
}

SeriesSpec bil(std::vector<Complex> up, std::vector<Complex> lo, Complex z) {
  return SeriesSpec{std::move(up), std::move(lo), std::move(z), SeriesKind::bilateral};
}

}  // namespace

TEST(Series, ValidateChecksCounts) {
  EXPECT_THROW(uni({}, {c(2)}, c(0.5)).validate(), ConfigError);
  EXPECT_NO_THROW(uni({c(1), c(2)}, {c(3)}, c(0.5)).validate());
  EXPECT_THROW(bil({c(1)}, {c(2), c(3)}, c(0.5)).validate(), ConfigError);
}

TEST(Series, ClassifyAlgebraicAtUnitArgument) {
  auto ctx = context(30);
  WorkingPrecision wp(ctx);
  auto cls = classify(uni({c(1), c(1)}, {c(3)}, c(1)));
  ASSERT_EQ(cls.tag, ConvergenceClass::Tag::algebraic);
  EXPECT_EQ(cls.exponent, Real(2));
}

TEST(Series, ClassifyOtherCases) {
  auto ctx = context(30);
  WorkingPrecision wp(ctx);
  auto t = classify(uni({c(-4), c(2)}, {c(3)}, c(1)));
  ASSERT_EQ(t.tag, ConvergenceClass::Tag::terminating);
  EXPECT_EQ(t.terms, 4);
  auto g = classify(uni({c(1), c(2)}, {c(3)}, c(0.5)));
  ASSERT_EQ(g.tag, ConvergenceClass::Tag::geometric);
  EXPECT_EQ(g.ratio, Real(0.5));
  EXPECT_EQ(classify(uni({c(1), c(2)}, {c(3)}, c(2))).tag, ConvergenceClass::Tag::divergent);
  EXPECT_EQ(classify(uni({c(1), c(2)}, {c(2)}, c(1))).tag, ConvergenceClass::Tag::divergent);
}

TEST(Series, TwoF1AtOneSumsToTwo) {
  auto ctx = context(30);
  auto r = sum_unilateral(uni({c(1), c(1)}, {c(3)}, c(1)), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(r.value, c(2)), 1e-29);
  EXPECT_LT(r.err_estimate.to_double(), 1e-25);
}

TEST(Series, TerminatingIsExactRational) {
  // 3F2(1,2,-1;5,-2;1) = 1 + 1*2*(-1)/(5*(-2)) = 6/5
  auto ctx = context(30);
  auto r = sum_unilateral(uni({c(1), c(2), c(-1)}, {c(5), c(-2)}, c(1)), ctx);
  EXPECT_EQ(r.method, Method::terminating);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(r.value, Complex(Real(6) / Real(5))), 1e-38);
}

TEST(Series, ZeroArgumentGivesOne) {
  auto ctx = context(30);
  auto r = sum_unilateral(uni({c(1.5), c(-2.25)}, {c(0.75)}, c(0)), ctx);
  EXPECT_EQ(r.value, Complex(1));
}

TEST(Series, LowerNonpositiveIntegerWithoutTruncationIsAnError) {
  auto ctx = context(30);
  EXPECT_THROW(sum_unilateral(uni({c(1), c(2)}, {c(-3)}, c(0.5)), ctx), LowerPoleError);
}

TEST(Series, VandermondeTerminating) {
  // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  auto ctx = context(30);
  WorkingPrecision wp(ctx);
  Complex b = c(0.75, 0.5), cc = c(2.25, -1);
  auto r = sum_unilateral(uni({c(-7), b}, {cc}, c(1)), ctx);
  Complex expected = pochhammer(cc - b, 7, ctx) / pochhammer(cc, 7, ctx);
  EXPECT_LT(rel_err(r.value, expected), 1e-30);
}

TEST(Series, GaussSumAgreesWithGammaClosedForm) {
  auto ctx = context(30);
  WorkingPrecision wp(ctx);
  Complex a = c(0.5), b = c(1.25), cc = c(4.5);
  auto r = sum_unilateral(uni({a, b}, {cc}, c(1)), ctx);
  std::vector<Complex> num{cc, cc - a - b}, den{cc - a, cc - b};
  EXPECT_LT(rel_err(r.value, gamma_ratio(num, den, ctx)), 1e-27);
}

TEST(Series, RedundantPairDoesNotChangeValue) {
  auto ctx = context(30);
  Complex x = c(1.625, 0.25);
  auto base = sum_unilateral(uni({c(0.5), c(1.5)}, {c(2.75)}, c(0.6)), ctx);
  auto padded = sum_unilateral(uni({c(0.5), c(1.5), x}, {c(2.75), x}, c(0.6)), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(padded.value, base.value), 1e-30);
  auto cancelled = cancel_common_pairs(uni({c(0.5), x}, {x}, c(0.6)));
  EXPECT_EQ(cancelled.uppers.size(), 1u);
  EXPECT_TRUE(cancelled.lowers.empty());
}

TEST(Series, BilateralLowerOneKillsNegativeTail) {
  // 1/(1)_{-k} = 0 for k >= 1, so the bilateral sum equals its k >= 0 half.
  auto ctx = context(30);
  auto spec = bil({c(0.5), c(0.75)}, {c(1), c(3.5)}, c(1));
  auto full = sum_bilateral(spec, ctx);
  auto half = sum_unilateral(positive_tail(spec), ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(full.value, half.value), 1e-30);
}

TEST(Series, BilateralUpperOneIsLowerPole) {
  EXPECT_THROW(reflect_negative_tail(bil({c(1), c(0.5)}, {c(2.5), c(3)}, c(1))), LowerPoleError);
}

TEST(Series, TwoH2AtHalvesIsPiSquaredOverFour) {
  // sum_k 1/(2k+1)^2 over all integers = pi^2/4
  auto ctx = context(30);
  auto r = sum_bilateral(bil({c(0.5), c(0.5)}, {c(1.5), c(1.5)}, c(1)), ctx);
  WorkingPrecision wp(ctx);
  Real pi = Real::pi();
  EXPECT_LT(rel_err(r.value, Complex(pi * pi / Real(4))), 1e-28);
}

TEST(Series, BilateralDivergentOutsideAnnulus) {
  auto ctx = context(30);
  EXPECT_THROW(sum_bilateral(bil({c(0.5)}, {c(1.5)}, c(2)), ctx), DivergentError);
}

TEST(Series, DeterministicAcrossCalls) {
  auto ctx = context(30);
  auto spec = uni({c(0.5, 0.25), c(1.5)}, {c(3.75)}, c(1));
  EXPECT_EQ(sum_unilateral(spec, ctx).value, sum_unilateral(spec, ctx).value);
}

TEST(Series, CancellationGuard) {
  auto ctx = context(30);
  WorkingPrecision wp(ctx);
  EXPECT_EQ(cancellation_guard(Real(1), c(1), ctx), 0);
  EXPECT_GT(cancellation_guard(pow10(20), c(1), ctx), 0);
}

TEST(Series, MethodNames) {
  EXPECT_EQ(to_string(Method::levin), "levin");
  EXPECT_EQ(to_string(Method::terminating), "terminating");
}
