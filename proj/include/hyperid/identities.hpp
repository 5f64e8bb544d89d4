#pragma once

#include "hyperid/complex.hpp"
#include "hyperid/precision.hpp"
#include "hyperid/rng.hpp"
#include "hyperid/series.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperid {

/// Named parameters of one identity instance. Integer parameters (n) are
/// kept separately from complex ones (a, b, ..., q).
class ParameterSet {
 public:
  ParameterSet& set(std::string name, Complex value);
  ParameterSet& set_integer(std::string name, long value);

  const Complex& operator[](std::string_view name) const;
  long integer(std::string_view name) const;
  bool has(std::string_view name) const;

  bool all_real() const;
  /// name -> decimal string, names sorted.
  std::vector<std::pair<std::string, std::string>> to_strings(int digits) const;

  const std::map<std::string, Complex, std::less<>>& values() const { return values_; }
  const std::map<std::string, long, std::less<>>& integers() const { return integers_; }

 private:
  std::map<std::string, Complex, std::less<>> values_;
  std::map<std::string, long, std::less<>> integers_;
};

struct IdentityPair {
  SeriesResult lhs;
  SeriesResult rhs;
};

struct ExactPair {
  mpq_class lhs;
  mpq_class rhs;
};

/// Which square root builds the +-sqrt(a) pairs of very-well-poised series.
enum class RootBranch { principal, negated };

enum class ParamKind { complex, integer };

struct ParamDecl {
  std::string name;
  ParamKind kind = ParamKind::complex;
};

struct Constraint {
  std::string text;
  std::function<bool(const ParameterSet&)> holds;
};

/// One catalog entry: schema, constraints, sampling ranges and both sides.
struct IdentityCase {
  std::string id;
  std::string description;
  std::vector<ParamDecl> schema;
  std::vector<Constraint> constraints;
  /// Draws a candidate within the sampling ranges (constraints not applied).
  std::function<ParameterSet(SampleRng&)> draw;
  std::function<IdentityPair(const ParameterSet&, const PrecisionContext&)> evaluate;
  /// Exact rational evaluation; empty when not applicable to the parameters.
  std::function<std::optional<ExactPair>(const ParameterSet&)> exact;

  /// First failing constraint text, or nullopt when all hold.
  std::optional<std::string> violated(const ParameterSet& p) const;
};

/// The 17 catalog entries in a fixed order.
const std::vector<IdentityCase>& catalog();
/// Throws ConfigError for an unknown id.
const IdentityCase& find_case(std::string_view id);

// Classical identities. Each returns (lhs, rhs); see catalog() for schemas.
IdentityPair saalschuetz(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair saalschuetz_nonterminating(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair dougall_2h2(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair gauss_2f1(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair dixon(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair symmetric_theorem(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair theorem_special_ca_db(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair theorem_special_b_neg_n(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair phi_as_3f2_identity(const ParameterSet& p, const PrecisionContext& ctx);
IdentityPair h22_split_identity(const ParameterSet& p, const PrecisionContext& ctx);

/// Phi(a,b;c,d) = sum_k G(a+k)G(b+k)G(a+b+c+d-1+k) / (G(1+k)G(a+b+c+k)G(a+b+d+k)),
/// evaluated as a Gamma prefactor times 3F2(a,b,a+b+c+d-1; a+b+c,a+b+d; 1).
SeriesResult phi_sum(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                     const PrecisionContext& ctx);
/// Phi(c,d;a,b) = 3F2(1,a+d,b+d; 1+d,a+b+c+d; 1) / (d (a+b+c+d-1)).
SeriesResult phi_as_3f2(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                        const PrecisionContext& ctx);

/// Solves the symmetric formula at (a, b, c0-a-b, d0-a-b)... i.e. at
/// c -> d0-a-b, d -> c0-a-b, for 3F2(a,b,c0+d0-a-b-1; c0,d0; 1), where
/// p holds the nonterminating-Saalschuetz parameters {a,b,c,d} = {a,b,c0,d0}.
SeriesResult saalschuetz_nt_via_theorem(const ParameterSet& p, const PrecisionContext& ctx);

// q-identities.
IdentityPair bailey_6psi6(const ParameterSet& p, const PrecisionContext& ctx,
                          RootBranch branch = RootBranch::principal);
IdentityPair phi65(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch = RootBranch::principal);
IdentityPair jackson_8phi7(const ParameterSet& p, const PrecisionContext& ctx,
                           RootBranch branch = RootBranch::principal);
IdentityPair jackson_nonterminating(const ParameterSet& p, const PrecisionContext& ctx,
                                    RootBranch branch = RootBranch::principal);
/// (raw, closed) for the k >= 0 half of the split 6psi6.
IdentityPair omega_sum(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch = RootBranch::principal);
/// (raw, closed) for the reflected k < 0 half of the split 6psi6.
IdentityPair theta_sum(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch = RootBranch::principal);
/// (bracket, omega raw + theta raw).
IdentityPair bailey_split(const ParameterSet& p, const PrecisionContext& ctx, RootBranch branch = RootBranch::principal);

// Exact rational routes (real rational parameters only).
std::optional<ExactPair> saalschuetz_exact(const ParameterSet& p);
std::optional<ExactPair> theorem_special_b_neg_n_exact(const ParameterSet& p);
std::optional<ExactPair> jackson_8phi7_exact(const ParameterSet& p);

}  // namespace hyperid
