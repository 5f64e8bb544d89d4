#include "hyperid/accel.hpp"
#include "hyperid/errors.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hyperid;
using hyperid::testing::context;
using hyperid::testing::rel_err;

namespace {

// Terms 1/(k+shift)^2 for k = 0, 1, ...
TermStream inverse_squares(double shift) {
  return [k = 0L, shift]() mutable {
    Real x = Real(k++) + Real(shift);
    return Complex(Real(1) / (x * x));
  };
}

}  // namespace

TEST(Levin, BaselProblem) {
  auto ctx = context(20);
  auto r = levin_u(inverse_squares(1), ctx);
  WorkingPrecision wp(ctx);
  Real pi = Real::pi();
  EXPECT_LT(rel_err(r.value, Complex(pi * pi / Real(6))), 1e-20);
  EXPECT_LE(r.terms_used, 60);
  EXPECT_EQ(r.method, Method::levin);
}

TEST(Levin, ShiftedInverseSquares) {
  // sum (k+1/2)^-2 = pi^2/2
  auto ctx = context(25);
  auto r = levin_u(inverse_squares(0.5), ctx);
  WorkingPrecision wp(ctx);
  Real pi = Real::pi();
  EXPECT_LT(rel_err(r.value, Complex(pi * pi / Real(2))), 1e-24);
}

TEST(Levin, GeometricSeries) {
  auto ctx = context(30);
  auto r = levin_u([t = Real(1)]() mutable {
                     Complex out(t);
                     t = t / Real(2);
                     return out;
                   },
                   ctx);
  WorkingPrecision wp(ctx);
  EXPECT_LT(rel_err(r.value, Complex(2)), 1e-29);
}

TEST(Levin, ErrorEstimateIsHonest) {
  auto ctx = context(30);
  auto r = levin_u(inverse_squares(1), ctx);
  WorkingPrecision wp(ctx);
  Real pi = Real::pi();
  Real truth = abs(r.value - Complex(pi * pi / Real(6)));
  EXPECT_LE(truth, Real(100) * max(r.err_estimate, ctx.working_epsilon()));
}

TEST(Levin, HigherPrecisionImprovesAgreement) {
  auto lo = levin_u(inverse_squares(1), context(20));
  auto hi = levin_u(inverse_squares(1), context(40));
  PrecisionGuard g(60);
  Real pi = Real::pi();
  Complex truth(pi * pi / Real(6));
  EXPECT_LE(rel_err(hi.value, truth), rel_err(lo.value, truth));
  EXPECT_LT(rel_err(hi.value, truth), 1e-39);
}

TEST(Wynn, AlternatingHarmonicSeries) {
  PrecisionGuard g(40);
  std::vector<Complex> partials;
  Real s(0);
  for (int k = 1; k <= 25; ++k) {
    Real t = Real(1) / Real(k);
    s = (k % 2) ? s + t : s - t;
    partials.emplace_back(s);
  }
  auto w = wynn_epsilon(partials);
  EXPECT_LT(rel_err(w.value, Complex(log(Real(2)))), 1e-15);
  EXPECT_FALSE(w.breakdown);
}

TEST(Wynn, ConstantSequenceBreaksDownGracefully) {
  PrecisionGuard g(30);
  std::vector<Complex> partials(8, Complex(Real(0.375)));
  auto w = wynn_epsilon(partials);
  EXPECT_TRUE(w.breakdown);
  EXPECT_EQ(w.value, Complex(Real(0.375)));
}

TEST(Wynn, TooFewPartials) {
  PrecisionGuard g(30);
  std::vector<Complex> partials(4, Complex(1));
  EXPECT_THROW(wynn_epsilon(partials), NumericalBreakdown);
}

TEST(TailBound, AlgebraicFormula) {
  PrecisionGuard g(30);
  // |T_K| * K / (s-1)
  EXPECT_EQ(tail_bound_algebraic(100, Real(2), Real(1) / Real(10000)), Real(1) / Real(100));
  // Upper bound for sum_{k>K} 1/k^2, which is < 1/K.
  Real tail(0);
  for (long k = 1001; k <= 200000; ++k) tail += Real(1) / (Real(k) * Real(k));
  EXPECT_GE(tail_bound_algebraic(1000, Real(2), Real(1) / Real(1000000)), tail);
}
