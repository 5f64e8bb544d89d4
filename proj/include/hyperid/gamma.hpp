#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"

#include <span>

namespace hyperid {

/// Gamma function via shifted Stirling series and reflection.
/// Throws PoleError at nonpositive integers (or within ctx.pole_margin of one).
Complex gamma(const Complex& z, const PrecisionContext& ctx);

/// A logarithm of Gamma(z): exp(log_gamma(z)) == gamma(z). On Re z >= 1/2 this
/// is the principal branch continued from the positive axis; on the left
/// half-plane it comes from the reflection formula and is defined up to 2*pi*i.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

/// Shifted factorial (x)_n = Gamma(x+n)/Gamma(x) for any integer n, computed
/// as a finite product. Throws DivisionByZero when n < 0 hits a zero factor.
Complex pochhammer(const Complex& x, long n, const PrecisionContext& ctx);

/// prod Gamma(numer[i]) / prod Gamma(denom[j]) through one summed logarithm.
/// Returns exactly 0 when a denominator argument is a pole.
/// Throws PoleError for a numerator pole and IndeterminateError when
/// numerator and denominator poles coexist.
Complex gamma_ratio(std::span<const Complex> numer, std::span<const Complex> denom,
                    const PrecisionContext& ctx);

/// Stirling coefficient B_{2k} / (2k (2k-1)), k >= 1, exact.
const mpq_class& stirling_coefficient(std::size_t k);

}  // namespace hyperid
