#pragma once

#include <stdexcept>
#include <string>

namespace hyperid {

/// Base of every evaluation failure. `name()` is the stable identifier
/// printed by the CLI and stored in report diagnostics.
class Error : public std::runtime_error {
 public:
  Error(const char* name, const std::string& what) : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define HYPERID_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  }

HYPERID_DEFINE_ERROR(PoleError);
HYPERID_DEFINE_ERROR(IndeterminateError);
HYPERID_DEFINE_ERROR(DivisionByZero);
HYPERID_DEFINE_ERROR(LowerPoleError);
HYPERID_DEFINE_ERROR(BudgetExceeded);
HYPERID_DEFINE_ERROR(DivergentError);
HYPERID_DEFINE_ERROR(NotConvergent);
HYPERID_DEFINE_ERROR(AccelerationFailed);
HYPERID_DEFINE_ERROR(NumericalBreakdown);
HYPERID_DEFINE_ERROR(DomainError);
HYPERID_DEFINE_ERROR(SamplingExhausted);
HYPERID_DEFINE_ERROR(ConfigError);

#undef HYPERID_DEFINE_ERROR

}  // namespace hyperid
