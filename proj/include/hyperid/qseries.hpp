#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"
#include "hyperid/series.hpp"

#include <climits>
#include <span>
#include <vector>

namespace hyperid {

/// The nome q together with the precision it is used at; |q| < 1.
struct QContext {
  Complex q;
  PrecisionContext ctx;

  /// Throws DomainError unless 0 < |q| < 1.
  void validate() const;
};

/// Index value standing for n = infinity in q_pochhammer / q_bracket.
inline constexpr long kInfinite = LONG_MAX;

/// (x; q)_n for finite n of either sign, or n = kInfinite.
/// Negative n uses (x; q)_{-m} = 1 / (x q^-m; q)_m.
Complex q_pochhammer(const Complex& x, const QContext& qc, long n);

/// prod (x_i; q)_n / prod (y_j; q)_n. Zero when a numerator factor vanishes
/// and no denominator factor does; IndeterminateError when both vanish;
/// DivisionByZero when only a denominator factor vanishes.
Complex q_bracket(std::span<const Complex> numers, std::span<const Complex> denoms, const QContext& qc,
                  long n);

enum class QSeriesKind { phi, psi };

/// phi: 1+r uppers over s lowers with implicit (q;q)_k; psi: bilateral r over s.
/// Both carry the factor ((-1)^k q^(k choose 2))^(s-r).
struct QSeriesSpec {
  std::vector<Complex> uppers;
  std::vector<Complex> lowers;
  Complex argument;
  QSeriesKind kind = QSeriesKind::phi;

  /// s - r for the sign / q-binomial factor.
  long excess() const;
};

/// Sums a basic (phi) or bilateral basic (psi) series. psi is split at
/// k = 0; the k < 0 half is re-expressed as a unilateral q-series in the
/// reflected parameters q^2/b_j over q^2/a_i with argument prod b / (prod a z).
/// Throws DomainError outside the convergence region, LowerPoleError when a
/// lower parameter truncates the denominator.
SeriesResult sum_q_series(const QSeriesSpec& spec, const QContext& qc);

/// Principal square root, used to build the +-sqrt(a) well-poised pairs.
Complex principal_sqrt(const Complex& a);

/// If x = q^-m for an integer m >= 0 (to 10^-digits), returns m; else -1.
long q_terminating_index(const Complex& x, const QContext& qc);

}  // namespace hyperid
