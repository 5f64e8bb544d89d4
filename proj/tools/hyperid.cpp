#include "hyperid/errors.hpp"
#include "hyperid/harness.hpp"
#include "hyperid/identities.hpp"
#include "hyperid/qseries.hpp"
#include "hyperid/series.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperid;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_digits() {
  if (const char* env = std::getenv("HYPERID_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("HYPERID_DIGITS is not an integer: ") + env);
    }
  }
  return 30;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Complex> parse_values(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& s : split_list(text)) out.push_back(Complex::parse(s));
  return out;
}

struct EvalArgs {
  std::string upper;
  std::string lower;
  std::string z = "1";
  std::string q;
  int digits = 30;
  long max_terms = 1'000'000;
};

int run_eval(const std::string& kind, const EvalArgs& args) {
  PrecisionContext ctx;
  ctx.digits = args.digits;
  ctx.max_terms = args.max_terms;
  ctx.validate();
  WorkingPrecision wp(ctx);
  std::vector<Complex> uppers = parse_values(args.upper);
  std::vector<Complex> lowers = parse_values(args.lower);
  Complex z = Complex::parse(args.z);

  SeriesResult r;
  if (kind == "pfq" || kind == "hseries") {
    SeriesSpec spec{uppers, lowers, z, kind == "pfq" ? SeriesKind::unilateral : SeriesKind::bilateral};
    r = kind == "pfq" ? sum_unilateral(spec, ctx) : sum_bilateral(spec, ctx);
  } else {
    if (args.q.empty()) throw ConfigError("--q is required for " + kind);
    QContext qc{Complex::parse(args.q), ctx};
    QSeriesSpec spec{uppers, lowers, z, kind == "phi" ? QSeriesKind::phi : QSeriesKind::psi};
    r = sum_q_series(spec, qc);
  }
  std::cout << "value: " << r.value.to_string(ctx.digits) << "\n"
            << "err_estimate: " << r.err_estimate.to_string(3) << "\n"
            << "terms_used: " << r.terms_used << "\n"
            << "method: " << to_string(r.method) << "\n"
            << "convergence: " << r.convergence.describe() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string identity = "all";
  int samples = 20;
  std::uint64_t seed = 0;
  int digits = 30;
  bool json = false;
  bool serial = false;
  std::string out;
  long max_terms = 1'000'000;
};

int run_verify(const VerifyArgs& args) {
  SuiteConfig config;
  config.identities = split_list(args.identity);
  config.samples = args.samples;
  config.seed = args.seed;
  config.digits = args.digits;
  config.format = args.json ? OutputFormat::json : OutputFormat::text;
  config.max_terms = args.max_terms;
  if (args.samples < 0) throw ConfigError("--samples must be nonnegative");
  config.resolved_ids();  // unknown ids fail before any evaluation
  config.context();

  SuiteReport report = args.serial ? run_suite_serial(config) : run_suite(config);
  std::string text = args.json ? to_json(report) + "\n" : to_text(report);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(args.out);
    if (!file) throw ConfigError("cannot write " + args.out);
    file << text;
  }
  return report.failed == 0 ? 0 : kExitFail;
}

int run_list(bool json) {
  if (json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& c : catalog()) {
      nlohmann::ordered_json schema = nlohmann::ordered_json::array();
      for (const auto& p : c.schema) {
        schema.push_back({{"name", p.name}, {"kind", p.kind == ParamKind::integer ? "integer" : "complex"}});
      }
      nlohmann::ordered_json constraints = nlohmann::ordered_json::array();
      for (const auto& k : c.constraints) constraints.push_back(k.text);
      doc.push_back({{"id", c.id},
                     {"schema", schema},
                     {"constraints", constraints},
                     {"identity", c.description},
                     {"exact_route", static_cast<bool>(c.exact)}});
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : catalog()) {
    std::cout << c.id << "\n  parameters:";
    for (const auto& p : c.schema) std::cout << " " << p.name << (p.kind == ParamKind::integer ? ":int" : "");
    std::cout << "\n  identity: " << c.description << "\n";
    for (const auto& k : c.constraints) std::cout << "  constraint: " << k.text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergeometric series evaluation and identity verification"};
  app.require_subcommand(1);

  int digits = 30;
  try {
    digits = default_digits();
  } catch (const ConfigError& e) {
    std::cerr << "ConfigError: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* eval = app.add_subcommand("eval", "evaluate one series");
  eval->require_subcommand(1);
  std::string eval_kind;
  EvalArgs eval_args;
  eval_args.digits = digits;
  for (const char* kind : {"pfq", "hseries", "phi", "psi"}) {
    auto* sub = eval->add_subcommand(kind, std::string(kind) + " series");
    sub->add_option("--upper", eval_args.upper, "comma-separated upper parameters");
    sub->add_option("--lower", eval_args.lower, "comma-separated lower parameters");
    sub->add_option("--z", eval_args.z, "argument (RE or RE+IMi)");
    if (std::string(kind) == "phi" || std::string(kind) == "psi") {
      sub->add_option("--q", eval_args.q, "nome q, 0 < |q| < 1")->required();
    }
    sub->add_option("--digits", eval_args.digits, "decimal digits");
    sub->add_option("--max-terms", eval_args.max_terms, "term budget");
    sub->callback([&eval_kind, kind] { eval_kind = kind; });
  }

  auto* verify = app.add_subcommand("verify", "verify catalog identities on sampled parameters");
  VerifyArgs verify_args;
  verify_args.digits = digits;
  verify->add_option("--identity", verify_args.identity, "comma-separated ids or 'all'");
  verify->add_option("--samples", verify_args.samples, "samples per identity");
  verify->add_option("--seed", verify_args.seed, "64-bit seed");
  verify->add_option("--digits", verify_args.digits, "decimal digits");
  verify->add_option("--max-terms", verify_args.max_terms, "term budget");
  verify->add_flag("--json", verify_args.json, "JSON report");
  verify->add_flag("--serial", verify_args.serial, "single-threaded run");
  verify->add_option("--out", verify_args.out, "write the report to a file");

  auto* list = app.add_subcommand("list", "list the identity catalog");
  bool list_json = false;
  list->add_flag("--json", list_json, "JSON listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_kind, eval_args);
    if (verify->parsed()) return run_verify(verify_args);
    return run_list(list_json);
  } catch (const ConfigError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitUsage;
  }
}
