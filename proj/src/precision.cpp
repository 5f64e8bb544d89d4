#include "hyperid/precision.hpp"

#include "hyperid/errors.hpp"

#include <string>

namespace hyperid {

void PrecisionContext::validate() const {
  if (digits < 10) throw ConfigError("digits must be >= 10, got " + std::to_string(digits));
  if (guard_digits < 5) throw ConfigError("guard_digits must be >= 5, got " + std::to_string(guard_digits));
  if (max_terms < 1000) throw ConfigError("max_terms must be >= 1000, got " + std::to_string(max_terms));
  if (pole_margin < 0) throw ConfigError("pole_margin must be nonnegative");
}

}  // namespace hyperid
