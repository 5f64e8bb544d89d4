#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"
#include "hyperid/series.hpp"

#include <functional>
#include <span>

namespace hyperid {

/// Yields term_0, term_1, ... on successive calls.
using TermStream = std::function<Complex()>;

/// Decimal digits used inside levin_u. The u-transform loses roughly half a
/// digit per column on algebraically decaying terms.
int levin_digits(const PrecisionContext& ctx);

/// Largest number of terms levin_u will consume.
inline constexpr long kLevinMaxTerms = 400;

/// Levin u-transform (beta = 1) over the partial sums of `terms`, built one
/// antidiagonal per term. Stops once |L_k - L_{k-1}| < 10^-digits |L_k|.
/// The stream is invoked under levin_digits(ctx) precision.
/// Throws AccelerationFailed when the estimate stagnates above 10^-(digits/2).
SeriesResult levin_u(const TermStream& terms, const PrecisionContext& ctx);

struct WynnEstimate {
  Complex value;
  Real err_estimate;
  /// A zero difference stopped the table early; value is the last estimate.
  bool breakdown = false;
};

/// Wynn epsilon algorithm on partial sums; returns the deepest even-column
/// entry. Throws NumericalBreakdown if fewer than 5 partials are given.
WynnEstimate wynn_epsilon(std::span<const Complex> partials);

/// Bound on sum_{k>K} C k^-s given |term_K| = last_term_mag: last * K / (s-1).
Real tail_bound_algebraic(long K, const Real& s, const Real& last_term_mag);

}  // namespace hyperid
