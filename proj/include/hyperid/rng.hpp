#pragma once

#include "hyperid/real.hpp"

#include <cstdint>
#include <string_view>

namespace hyperid {

/// splitmix64 stream. Portable: every draw is defined by integer arithmetic
/// only, so sampled parameters are identical on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for one (seed, identity, sample index) triple.
  static SampleRng for_sample(std::uint64_t seed, std::string_view id, std::uint64_t index);

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Uniform m / 2^bits strictly inside (lo, hi).
  Real dyadic(double lo, double hi, int bits = 8);
  bool chance(double p);

 private:
  std::uint64_t state_;
};

}  // namespace hyperid
