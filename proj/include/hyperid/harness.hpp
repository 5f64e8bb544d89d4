#pragma once

#include "hyperid/identities.hpp"
#include "hyperid/precision.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperid {

enum class OutputFormat { text, json };

struct SuiteConfig {
  /// Catalog ids; the single entry "all" selects the whole catalog.
  std::vector<std::string> identities;
  int samples = 20;
  std::uint64_t seed = 0;
  int digits = 30;
  OutputFormat format = OutputFormat::text;
  std::optional<long> max_terms;

  /// Resolved ids in catalog order; throws ConfigError for unknown ids.
  std::vector<std::string> resolved_ids() const;
  PrecisionContext context() const;
};

struct IdentityReport {
  std::string id;
  long index = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  double abs_err = 0;
  double rel_err = 0;
  double tolerance = 0;
  bool pass = false;
  bool exact = false;  // compared as exact rationals
  long lhs_terms = 0;
  long rhs_terms = 0;
  std::string lhs_method;
  std::string rhs_method;
  double lhs_err_estimate = 0;
  double rhs_err_estimate = 0;
  std::string diagnostic;
  double wall_time = 0;  // seconds
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int digits = 0;
  std::string started_at;
  std::vector<IdentityReport> results;  // sorted by (id, index)
  long total = 0;
  long passed = 0;
  long failed = 0;
  std::map<std::string, double> max_rel_err_by_id;
  double wall_time = 0;
};

/// max(10^(8-digits), 100 (e_lhs + e_rhs) / |rhs|).
double tolerance_for(double lhs_err, double rhs_err, double rhs_abs, int digits);

/// Deterministic in (seed, case.id, index); rejection-samples until every
/// constraint holds. Throws SamplingExhausted after 10^4 attempts.
ParameterSet sample_parameters(const IdentityCase& c, std::uint64_t seed, long index);
inline constexpr int kRejectionCap = 10'000;

/// Evaluates both sides and applies the tolerance rule; evaluator errors are
/// captured in the report, never thrown.
IdentityReport verify_one(const IdentityCase& c, const ParameterSet& params, const PrecisionContext& ctx);
/// Same, with the comparison done on an already evaluated pair.
IdentityReport compare(const std::string& id, const IdentityPair& pair, const PrecisionContext& ctx);

/// Runs every (identity, sample) pair, concurrently under OpenMP.
SuiteReport run_suite(const SuiteConfig& config);
/// Reference single-threaded implementation.
SuiteReport run_suite_serial(const SuiteConfig& config);

std::string to_json(const SuiteReport& report, int indent = 2);
std::string to_text(const SuiteReport& report);

}  // namespace hyperid
