#include "hyperid/harness.hpp"

#include "hyperid/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <iomanip>
#include <sstream>

namespace hyperid {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

struct WorkItem {
  const IdentityCase* c;
  long index;
};

IdentityReport run_item(const WorkItem& w, const SuiteConfig& config, const PrecisionContext& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport r;
  try {
    WorkingPrecision wp(ctx);
    ParameterSet p = sample_parameters(*w.c, config.seed, w.index);
    r = verify_one(*w.c, p, ctx);
  } catch (const Error& e) {
    r.id = w.c->id;
    r.pass = false;
    r.diagnostic = std::string(e.name()) + ": " + e.what();
  }
  r.index = w.index;
  r.wall_time = seconds_since(t0);
  return r;
}

std::vector<WorkItem> work_items(const SuiteConfig& config) {
  std::vector<WorkItem> items;
  for (const auto& id : config.resolved_ids()) {
    const IdentityCase& c = find_case(id);
    for (long i = 0; i < config.samples; ++i) items.push_back({&c, i});
  }
  return items;
}

SuiteReport finish(const SuiteConfig& config, std::vector<IdentityReport> results, std::string started_at,
                   double wall) {
  std::sort(results.begin(), results.end(), [](const IdentityReport& x, const IdentityReport& y) {
    return std::tie(x.id, x.index) < std::tie(y.id, y.index);
  });
  SuiteReport out;
  out.seed = config.seed;
  out.digits = config.digits;
  out.started_at = std::move(started_at);
  out.wall_time = wall;
  for (const auto& r : results) {
    ++out.total;
    r.pass ? ++out.passed : ++out.failed;
    double& m = out.max_rel_err_by_id[r.id];
    if (std::isnan(r.rel_err) || r.rel_err > m) m = r.rel_err;
  }
  out.results = std::move(results);
  return out;
}

}  // namespace

std::vector<std::string> SuiteConfig::resolved_ids() const {
  std::vector<std::string_view> wanted;
  for (const auto& id : identities) {
    if (id != "all") find_case(id);  // throws on unknown ids
    wanted.push_back(id);
  }
  const bool all = std::find(wanted.begin(), wanted.end(), "all") != wanted.end();
  std::vector<std::string> out;
  for (const auto& c : catalog())
    if (all || std::find(wanted.begin(), wanted.end(), c.id) != wanted.end()) out.push_back(c.id);
  return out;
}

PrecisionContext SuiteConfig::context() const {
  PrecisionContext ctx;
  ctx.digits = digits;
  if (samples < 0) throw ConfigError("samples must be >= 0");
  if (max_terms) ctx.max_terms = *max_terms;
  ctx.validate();
  return ctx;
}

double tolerance_for(double lhs_err, double rhs_err, double rhs_abs, int digits) {
  double floor = std::pow(10.0, 8 - digits);
  if (rhs_abs == 0) return std::max(floor, 100 * (lhs_err + rhs_err));
  return std::max(floor, 100 * (lhs_err + rhs_err) / rhs_abs);
}

ParameterSet sample_parameters(const IdentityCase& c, std::uint64_t seed, long index) {
  if (c.schema.empty()) throw ConfigError("identity " + c.id + " has an empty schema");
  SampleRng rng = SampleRng::for_sample(seed, c.id, static_cast<std::uint64_t>(index));
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    ParameterSet p = c.draw(rng);
    if (!c.violated(p)) return p;
  }
  throw SamplingExhausted("no admissible parameters for " + c.id + " after " + std::to_string(kRejectionCap) +
                          " attempts");
}

IdentityReport compare(const std::string& id, const IdentityPair& pair, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx);
  IdentityReport r;
  r.id = id;
  r.lhs = pair.lhs.value.to_string(ctx.digits);
  r.rhs = pair.rhs.value.to_string(ctx.digits);
  Real diff = abs(pair.lhs.value - pair.rhs.value);
  Real size = abs(pair.rhs.value);
  r.abs_err = diff.to_double();
  r.rel_err = size.is_zero() ? r.abs_err : (diff / size).to_double();
  r.lhs_err_estimate = pair.lhs.err_estimate.to_double();
  r.rhs_err_estimate = pair.rhs.err_estimate.to_double();
  r.tolerance = tolerance_for(r.lhs_err_estimate, r.rhs_err_estimate, size.to_double(), ctx.digits);
  r.pass = r.rel_err < r.tolerance;
  r.lhs_terms = pair.lhs.terms_used;
  r.rhs_terms = pair.rhs.terms_used;
  r.lhs_method = to_string(pair.lhs.method);
  r.rhs_method = to_string(pair.rhs.method);
  if (!r.pass) r.diagnostic = "relative error above tolerance";
  return r;
}

IdentityReport verify_one(const IdentityCase& c, const ParameterSet& params, const PrecisionContext& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport r;
  try {
    WorkingPrecision wp(ctx);
    if (auto why = c.violated(params)) throw DomainError("constraint violated: " + *why);
    r = compare(c.id, c.evaluate(params, ctx), ctx);
    if (c.exact) {
      if (auto ex = c.exact(params)) {
        r.exact = true;
        mpq_class diff = abs(ex->lhs - ex->rhs);
        double exact_rel = ex->rhs == 0 ? diff.get_d() : mpq_class(diff / abs(ex->rhs)).get_d();
        if (ex->lhs != ex->rhs) {
          r.pass = false;
          r.diagnostic = "exact rational sides differ";
        }
        r.rel_err = exact_rel;
        r.abs_err = diff.get_d();
      }
    }
  } catch (const Error& e) {
    r.pass = false;
    r.diagnostic = std::string(e.name()) + ": " + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.diagnostic = std::string("error: ") + e.what();
  }
  r.id = c.id;
  {
    WorkingPrecision wp(ctx);
    r.params = params.to_strings(ctx.digits);
  }
  r.wall_time = seconds_since(t0);
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const PrecisionContext ctx = config.context();
  const std::vector<WorkItem> items = work_items(config);
  const std::string started = utc_now();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityReport> results(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    results[i] = run_item(items[i], config, ctx);
  }
  return finish(config, std::move(results), started, seconds_since(t0));
}

SuiteReport run_suite_serial(const SuiteConfig& config) {
  const PrecisionContext ctx = config.context();
  const std::vector<WorkItem> items = work_items(config);
  const std::string started = utc_now();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityReport> results;
  results.reserve(items.size());
  for (const auto& w : items) results.push_back(run_item(w, config, ctx));
  return finish(config, std::move(results), started, seconds_since(t0));
}

std::string to_json(const SuiteReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    results.push_back({
        {"id", r.id},
        {"index", r.index},
        {"params", params},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"abs_err", r.abs_err},
        {"rel_err", r.rel_err},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"exact", r.exact},
        {"terms_used", {{"lhs", r.lhs_terms}, {"rhs", r.rhs_terms}}},
        {"method", {{"lhs", r.lhs_method}, {"rhs", r.rhs_method}}},
        {"err_estimate", {{"lhs", r.lhs_err_estimate}, {"rhs", r.rhs_err_estimate}}},
        {"diagnostic", r.diagnostic},
        {"wall_time", r.wall_time},
    });
  }
  ordered_json by_id = ordered_json::object();
  for (const auto& [id, v] : report.max_rel_err_by_id) by_id[id] = v;
  ordered_json doc = {
      {"suite", {{"seed", report.seed}, {"digits", report.digits}, {"started_at", report.started_at}}},
      {"results", results},
      {"summary",
       {{"total", report.total},
        {"passed", report.passed},
        {"failed", report.failed},
        {"max_rel_err_by_id", by_id},
        {"wall_time", report.wall_time}}},
  };
  return doc.dump(indent);
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " #" << r.index << "  rel_err=" << std::setprecision(3)
        << r.rel_err << "  tol=" << r.tolerance << "  methods=" << r.lhs_method << "/" << r.rhs_method
        << "  terms=" << r.lhs_terms << "/" << r.rhs_terms;
    if (r.exact) out << "  exact";
    if (!r.diagnostic.empty()) out << "  (" << r.diagnostic << ")";
    out << "\n";
  }
  out << "total " << report.total << ", passed " << report.passed << ", failed " << report.failed << "\n";
  for (const auto& [id, v] : report.max_rel_err_by_id) {
    out << "  max rel_err " << id << ": " << std::setprecision(3) << v << "\n";
  }
  return out.str();
}

}  // namespace hyperid
