#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hyperid {

enum class SeriesKind { unilateral, bilateral };

/// Parameters of 1+rFs (unilateral, implicit k! in the denominator) or rHr
/// (bilateral, sum over all integers k, no k!).
struct SeriesSpec {
  std::vector<Complex> uppers;
  std::vector<Complex> lowers;
  Complex argument;
  SeriesKind kind = SeriesKind::unilateral;

  /// Throws ConfigError when the parameter counts are invalid for the kind.
  void validate() const;
};

/// How a SeriesResult value was obtained.
enum class Method { terminating, direct, direct_tail, levin, wynn, closed_form, exact };
std::string_view to_string(Method m);

/// Asymptotic behaviour of the terms.
struct ConvergenceClass {
  enum class Tag { terminating, geometric, algebraic, divergent };

  Tag tag = Tag::divergent;
  long terms = 0;   // terminating: index of the last nonzero term
  Real ratio;       // geometric: limiting |term ratio|
  Real exponent;    // algebraic: term_k ~ C k^-exponent

  static ConvergenceClass terminating(long n);
  static ConvergenceClass geometric(Real rho);
  static ConvergenceClass algebraic(Real s);
  static ConvergenceClass divergent();

  std::string describe() const;
};

struct SeriesResult {
  Complex value;
  Real err_estimate;
  long terms_used = 0;
  Method method = Method::direct;
  ConvergenceClass convergence;
};

/// Removes upper/lower pairs that are exactly equal; their term ratios cancel.
SeriesSpec cancel_common_pairs(const SeriesSpec& spec);

ConvergenceClass classify(const SeriesSpec& spec);

/// Sums a unilateral series by running term ratio. Terminating series are
/// summed exactly; geometric ones directly; algebraic ones directly with an
/// integral tail bound when affordable, otherwise through levin_u.
SeriesResult sum_unilateral(const SeriesSpec& spec, const PrecisionContext& ctx);

/// The k <= -1 half of a bilateral series as prefactor * 1+rFr(...; 1/z).
struct ReflectedTail {
  Complex prefactor;
  SeriesSpec spec;
};

/// Uses (x)_{-k} = (-1)^k / (1-x)_k and shifts k -> k+1:
///   sum_{k>=1} prod (a)_{-k} / prod (b)_{-k} z^{-k}
///     = [prod (1-b) / prod (1-a) / z] * F(2-b..., 1; 2-a...; 1/z).
/// Throws LowerPoleError when some upper equals 1 (a factor 1-a vanishes).
ReflectedTail reflect_negative_tail(const SeriesSpec& spec);

/// The k >= 0 half of a bilateral series as a unilateral spec.
SeriesSpec positive_tail(const SeriesSpec& spec);

/// Bilateral sum split at k = 0 into two unilateral evaluations.
SeriesResult sum_bilateral(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Extra guard digits needed when the largest term (peak) exceeds |value|
/// by more than the guard allows; 0 when no digits are lost.
int cancellation_guard(const Real& peak, const Complex& value, const PrecisionContext& ctx);

/// Largest direct-summation length accepted on the algebraic route before
/// switching to acceleration.
inline constexpr long kDirectAlgebraicCap = 10'000;

}  // namespace hyperid
