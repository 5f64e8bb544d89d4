#include "hyperid/bruteforce.hpp"

#include "hyperid/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperid {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ratios[i] = T_{i+1} / T_i on one side of k = 0 (T_0 = 1), i = 0..K-1.
struct Side {
  std::vector<dcomplex> ratios;
};

void prefix_serial(std::vector<dcomplex>& v) {
  dcomplex acc(1);
  for (auto& x : v) {
    acc *= x;
    x = acc;
  }
}

// Two-pass scan: each thread scans its chunk, chunk totals are scanned
// serially, then each chunk is rescaled by the product of its predecessors.
void prefix_parallel(std::vector<dcomplex>& v) {
  const long n = static_cast<long>(v.size());
  std::vector<dcomplex> offsets;
#pragma omp parallel
  {
    const int nt = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#pragma omp single
    offsets.assign(nt + 1, dcomplex(1));
    const long lo = n * tid / nt;
    const long hi = n * (tid + 1) / nt;
    dcomplex acc(1);
    for (long i = lo; i < hi; ++i) {
      acc *= v[i];
      v[i] = acc;
    }
    offsets[tid + 1] = acc;
#pragma omp barrier
#pragma omp single
    for (int t = 1; t <= nt; ++t) offsets[t] *= offsets[t - 1];
    const dcomplex scale = offsets[tid];
    for (long i = lo; i < hi; ++i) v[i] *= scale;
  }
}

struct Reduced {
  dcomplex sum;
  double weighted = 0;  // sum |T_k| (k+1)
};

Reduced reduce_serial(const std::vector<dcomplex>& t) {
  Reduced r;
  for (std::size_t k = 0; k < t.size(); ++k) {
    r.sum += t[k];
    r.weighted += std::abs(t[k]) * static_cast<double>(k + 2);
  }
  return r;
}

Reduced reduce_parallel(const std::vector<dcomplex>& t) {
  double re = 0, im = 0, w = 0;
  const long n = static_cast<long>(t.size());
#pragma omp parallel for reduction(+ : re, im, w)
  for (long k = 0; k < n; ++k) {
    re += t[k].real();
    im += t[k].imag();
    w += std::abs(t[k]) * static_cast<double>(k + 2);
  }
  return {{re, im}, w};
}

template <class RatioFn>
void fill_ratios(std::vector<dcomplex>& out, long K, RatioFn fn, bool parallel) {
  out.resize(K);
  if (parallel) {
#pragma omp parallel for
    for (long k = 0; k < K; ++k) out[k] = fn(k);
  } else {
    for (long k = 0; k < K; ++k) out[k] = fn(k);
  }
}

// Sums 1 + sum of both prefix-product sides. tail(last, previous) bounds the
// omitted part of one side from its final two terms.
template <class PosFn, class NegFn, class TailFn>
BruteForceSum bilateral(long K, std::size_t params, PosFn pos, NegFn neg, TailFn tail, bool parallel) {
  if (K < 2) throw ConfigError("brute-force sums need K >= 2");
  std::vector<dcomplex> plus, minus;
  fill_ratios(plus, K, pos, parallel);
  fill_ratios(minus, K, neg, parallel);
  if (parallel) {
    prefix_parallel(plus);
    prefix_parallel(minus);
  } else {
    prefix_serial(plus);
    prefix_serial(minus);
  }
  Reduced p = parallel ? reduce_parallel(plus) : reduce_serial(plus);
  Reduced m = parallel ? reduce_parallel(minus) : reduce_serial(minus);
  BruteForceSum out;
  out.value = dcomplex(1) + p.sum + m.sum;
  out.terms = 2 * K + 1;
  out.tail_bound = tail(plus[K - 1], plus[K - 2], K) + tail(minus[K - 1], minus[K - 2], K);
  out.rounding = kEps * (1 + static_cast<double>(params + 2) * (p.weighted + m.weighted));
  return out;
}

double algebraic_tail(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex last,
                      long K) {
  double s = 0;
  for (const auto& b : lowers) s += b.real();
  for (const auto& a : uppers) s -= a.real();
  if (s <= 1) return std::numeric_limits<double>::infinity();
  return std::abs(last) * static_cast<double>(K) / (s - 1);
}

BruteForceSum classical(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z,
                        long K, bool parallel) {
  if (uppers.size() != lowers.size()) throw ConfigError("bilateral series needs equal parameter counts");
  // T_{k+1}/T_k = z prod(a+k)/prod(b+k);  T_{-k-1}/T_{-k} = prod(b-k-1)/prod(a-k-1)/z.
  auto pos = [&](long k) {
    dcomplex r = z;
    for (const auto& a : uppers) r *= a + static_cast<double>(k);
    for (const auto& b : lowers) r /= b + static_cast<double>(k);
    return r;
  };
  auto neg = [&](long k) {
    dcomplex r = 1.0 / z;
    const double j = static_cast<double>(k + 1);
    for (const auto& b : lowers) r *= b - j;
    for (const auto& a : uppers) r /= a - j;
    return r;
  };
  auto tail = [&](dcomplex last, dcomplex, long k) { return algebraic_tail(uppers, lowers, last, k); };
  return bilateral(K, uppers.size() + lowers.size(), pos, neg, tail, parallel);
}

BruteForceSum basic(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z, dcomplex q,
                    long K, bool parallel) {
  if (uppers.size() != lowers.size()) throw ConfigError("bilateral q-series needs equal parameter counts");
  if (!(std::abs(q) < 1)) throw DomainError("q must satisfy |q| < 1");
  std::vector<dcomplex> qpow(K + 2);
  qpow[0] = 1;
  for (long i = 1; i < K + 2; ++i) qpow[i] = qpow[i - 1] * q;
  // T_{k+1}/T_k = z prod(1-a q^k)/prod(1-b q^k);
  // T_{-k-1}/T_{-k} = prod(q^j - b)/prod(q^j - a)/z with j = k+1.
  auto pos = [&](long k) {
    dcomplex r = z;
    for (const auto& a : uppers) r *= 1.0 - a * qpow[k];
    for (const auto& b : lowers) r /= 1.0 - b * qpow[k];
    return r;
  };
  auto neg = [&](long k) {
    dcomplex r = 1.0 / z;
    for (const auto& b : lowers) r *= qpow[k + 1] - b;
    for (const auto& a : uppers) r /= qpow[k + 1] - a;
    return r;
  };
  auto tail = [](dcomplex last, dcomplex previous, long) {
    if (last == 0.0) return 0.0;
    double rho = std::abs(last / previous);
    if (!(rho < 1)) return std::numeric_limits<double>::infinity();
    return std::abs(last) * rho / (1 - rho);
  };
  return bilateral(K, uppers.size() + lowers.size(), pos, neg, tail, parallel);
}

}  // namespace

BruteForceSum brute_bilateral_serial(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers,
                                     dcomplex z, long K) {
  return classical(uppers, lowers, z, K, false);
}

BruteForceSum brute_bilateral(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z,
                              long K) {
  return classical(uppers, lowers, z, K, true);
}

BruteForceSum brute_q_bilateral_serial(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers,
                                       dcomplex z, dcomplex q, long K) {
  return basic(uppers, lowers, z, q, K, false);
}

BruteForceSum brute_q_bilateral(const std::vector<dcomplex>& uppers, const std::vector<dcomplex>& lowers, dcomplex z,
                                dcomplex q, long K) {
  return basic(uppers, lowers, z, q, K, true);
}

}  // namespace hyperid
