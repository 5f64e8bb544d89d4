#pragma once

#include <complex>
#include <vector>

namespace hyperid {

using dcomplex = std::complex<double>;

/// Truncated bilateral sum over k in [-K, K] in double precision.
struct BruteForceSum {
  dcomplex value;
  double tail_bound = 0;  // estimate of the omitted |k| > K terms
  double rounding = 0;    // accumulated floating-point error bound
  long terms = 0;
};

/// rHr(a...; b...; z) with terms built as prefix products of the term ratios.
/// Tail bound from the algebraic decay exponent s = Re(sum b - sum a).
BruteForceSum brute_bilateral_serial(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers,
                                     dcomplex z, long K);
/// Same sum; ratios, prefix products and the reduction run under OpenMP.
BruteForceSum brute_bilateral(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z,
                              long K);

/// rpsi_r(a...; b...; q, z) (equal counts); negative-index ratios use the
/// overflow-free form prod (q^j - b) / prod (q^j - a). Geometric tail bound.
BruteForceSum brute_q_bilateral_serial(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers,
                                       dcomplex z, dcomplex q, long K);
BruteForceSum brute_q_bilateral(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z,
                                dcomplex q, long K);

}  // namespace hyperid
