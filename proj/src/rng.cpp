#include "hyperid/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperid {
namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SampleRng SampleRng::for_sample(std::uint64_t seed, std::string_view id, std::uint64_t index) {
  return SampleRng(mix(mix(seed) ^ fnv1a(id)) ^ mix(index + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t SampleRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

long SampleRng::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Real SampleRng::dyadic(double lo, double hi, int bits) {
  double scale = std::ldexp(1.0, bits);
  long m_lo = static_cast<long>(std::floor(lo * scale)) + 1;
  long m_hi = static_cast<long>(std::ceil(hi * scale)) - 1;
  return ldexp(Real(integer(m_lo, m_hi)), -bits);
}

bool SampleRng::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

}  // namespace hyperid
