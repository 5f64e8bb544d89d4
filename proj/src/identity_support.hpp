#pragma once

#include "hyperid/identities.hpp"
#include "hyperid/qseries.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace hyperid::detail {

using cplx = std::complex<double>;

SeriesResult closed(const Complex& value);
SeriesResult scaled(SeriesResult r, const Complex& factor);
SeriesResult added(const SeriesResult& x, const SeriesResult& y);

SeriesResult pfq(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z,
                 const PrecisionContext& ctx);
SeriesResult hseries(std::vector<Complex> uppers, std::vector<Complex> lowers, const Complex& z,
                     const PrecisionContext& ctx);

Complex half(const Complex& x);
/// x in {0, -1, ..., -(n-1)}.
bool in_first_poles(const Complex& x, long n);

// Exact rational helpers; nullopt on a vanishing denominator.
std::optional<mpq_class> exact_pochhammer(const mpq_class& x, long n);
/// sum_{k=0}^{n} prod (a)_k / (k! prod (b)_k), z = 1.
std::optional<mpq_class> exact_terminating(const std::vector<mpq_class>& uppers,
                                           const std::vector<mpq_class>& lowers, long n);
std::optional<mpq_class> exact_q_pochhammer(const mpq_class& x, const mpq_class& q, long n);

cplx to_cplx(const Complex& z);
/// min over 0 <= i < n of |1 - x q^i|; n < 0 means until |x q^i| is negligible.
double q_margin(cplx x, cplx q, long n = -1);
double q_margin(const std::vector<cplx>& xs, cplx q, long n = -1);

// Every q-factor whose vanishing would break an identity (lowers and
// bracket entries), in double precision, for the sampler constraints.
std::vector<cplx> bailey_6psi6_factors(const ParameterSet& p);
std::vector<cplx> phi65_factors(const ParameterSet& p);
std::vector<cplx> jackson_8phi7_factors(const ParameterSet& p);
std::vector<cplx> jackson_nt_factors(const ParameterSet& p);
std::vector<cplx> split_factors(const ParameterSet& p);

}  // namespace hyperid::detail
