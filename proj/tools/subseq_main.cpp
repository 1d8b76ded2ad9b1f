#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "subseq/balanced.hpp"
#include "subseq/bounds.hpp"
#include "subseq/cli.hpp"
#include "subseq/exact.hpp"
#include "subseq/report.hpp"
#include "subseq/transforms.hpp"
#include "subseq/unbalanced.hpp"
#include "subseq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct StringArgs {
  std::string bits;
  std::string runs;

  subseq::RunString resolve() const {
    if (bits.empty() == runs.empty()) {
      throw std::invalid_argument("exactly one of --bits / --runs is required");
    }
    return subseq::cli::parse_string_spec(bits.empty() ? runs : bits);
  }
};

void add_string_options(CLI::App* cmd, StringArgs& args) {
  cmd->add_option("--bits", args.bits, "literal binary string, e.g. 0011");
  cmd->add_option("--runs", args.runs, "run form FIRSTBIT:len,len,... e.g. 0:3,7,2,1,2");
}

int run_count(const StringArgs& args, std::int64_t t, bool with_oracle) {
  const subseq::RunString x = args.resolve();
  const subseq::Count count = subseq::exact::count_subsequences(x, t);
  if (with_oracle) {
    const auto oracle = subseq::exact::enumerate_subsequences(x, t);
    if (subseq::Count(oracle.size()) != count) {
      std::cerr << "oracle mismatch: counted " << count << " but enumerated "
                << oracle.size() << "\n";
      return kExitVerificationFailure;
    }
  }
  std::cout << count << "\n";
  return kExitOk;
}

int run_bounds(std::int64_t n, std::int64_t r, std::int64_t t,
               const std::string& exact_spec) {
  subseq::bounds::BoundsReport report;
  if (exact_spec.empty()) {
    report = subseq::bounds::bounds_report(n, r, t);
  } else {
    report = subseq::bounds::bounds_report(n, r, t,
                                           subseq::cli::parse_string_spec(exact_spec));
  }
  std::cout << subseq::cli::format_report(report);
  return kExitOk;
}

int run_sweep(std::int64_t n, std::int64_t r, std::optional<std::int64_t> k,
              const std::string& exact_spec, const std::string& out_path) {
  subseq::cli::SweepOptions options;
  options.n = n;
  options.r = r;
  options.k = k;
  if (!exact_spec.empty()) {
    options.exact_string = subseq::cli::parse_string_spec(exact_spec);
  }
  const std::string csv = subseq::cli::sweep_csv(options);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return kExitUsage;
  }
  out << csv;
  out.close();
  std::cerr << "wrote " << out_path << " (" << n + 2 << " lines)\n";
  return kExitOk;
}

int run_trace(const std::string& kind, const StringArgs& args, std::int64_t t) {
  const subseq::RunString x = args.resolve();
  subseq::transforms::TransformTrace trace =
      kind == "balance" ? subseq::transforms::balance_trace(x, t)
                        : subseq::transforms::unbalance_trace(x, t);
  std::cout << subseq::transforms::render_trace(trace);
  const auto verdict = subseq::transforms::verify_monotone(trace);
  if (!verdict.ok) {
    std::cerr << "monotonicity violated: " << verdict.message << "\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int run_verify(const std::string& suite, int max_n, std::uint64_t seed) {
  using subseq::verify::SuiteResult;
  SuiteResult result;
  if (suite == "oracle-equivalence") {
    result = subseq::verify::oracle_equivalence(max_n == 0 ? 12 : max_n);
  } else if (suite == "sandwiches") {
    result = subseq::verify::sandwiches(max_n == 0 ? 12 : max_n, 500, 18, seed);
  } else if (suite == "monotone-ops") {
    result = subseq::verify::monotone_ops(max_n == 0 ? 10 : max_n, 500, 18, seed);
  } else if (suite == "recursion-vs-closed") {
    const int u_max = max_n == 0 ? 40 : max_n;
    result = subseq::verify::recursion_vs_closed(12, 6, 18, u_max, 14);
  } else if (suite == "patterns") {
    const int sandwich_max = max_n == 0 ? 12 : max_n;
    result = subseq::verify::patterns_suite(sandwich_max, sandwich_max + 4, 10, 5);
  } else if (suite == "extremality") {
    const int nmax = max_n == 0 ? 14 : max_n;
    result = subseq::verify::extremality(5, nmax, std::min(nmax, 14));
  } else {
    std::cerr << "unknown suite '" << suite << "'; available: oracle-equivalence, "
              << "sandwiches, monotone-ops, recursion-vs-closed, patterns, extremality\n";
    return kExitUsage;
  }
  if (result.passed()) {
    std::cout << "suite " << result.suite << ": PASS (" << result.checks << " checks)\n";
    return kExitOk;
  }
  std::cout << "suite " << result.suite << ": FAIL (" << result.checks << " checks, "
            << result.failures.size() << " counterexamples)\n";
  for (const auto& failure : result.failures) {
    std::cout << "  " << failure << "\n";
  }
  return kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct-subsequence counts, extremal bounds, and monotone "
               "transformations for binary strings under deletions"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "exact |D_t(X)| for one string");
  StringArgs count_args;
  add_string_options(count_cmd, count_args);
  std::int64_t count_t = 0;
  bool count_oracle = false;
  count_cmd->add_option("--t", count_t, "number of deletions")->required();
  count_cmd->add_flag("--oracle", count_oracle,
                      "cross-check against brute-force enumeration (small strings)");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "all bounds for one (n, r, t)");
  std::int64_t bounds_n = 0, bounds_r = 0, bounds_t = 0;
  std::string bounds_exact;
  bounds_cmd->add_option("--n", bounds_n, "string length")->required();
  bounds_cmd->add_option("--r", bounds_r, "number of runs")->required();
  bounds_cmd->add_option("--t", bounds_t, "number of deletions")->required();
  bounds_cmd->add_option("--exact", bounds_exact,
                         "string (bits or run form) whose exact count to include");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of every bound for t = 0..n");
  std::int64_t sweep_n = 0, sweep_r = 0;
  std::int64_t sweep_k = 0;
  std::string sweep_exact, sweep_out;
  sweep_cmd->add_option("--n", sweep_n, "string length")->required();
  sweep_cmd->add_option("--r", sweep_r, "number of runs")->required();
  sweep_cmd->add_option("--k", sweep_k,
                        "run length for the new_upper column (default ceil(n/r))");
  sweep_cmd->add_option("--exact", sweep_exact, "string for an exact column");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "balancing / unbalancing trace table");
  std::string trace_kind;
  trace_cmd->add_option("kind", trace_kind, "balance or unbalance")
      ->required()
      ->check(CLI::IsMember({"balance", "unbalance"}));
  StringArgs trace_args;
  add_string_options(trace_cmd, trace_args);
  std::int64_t trace_t = 0;
  trace_cmd->add_option("--t", trace_t, "deletion count for the count column")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  verify_cmd->add_option("suite", verify_suite, "suite name")->required();
  int verify_max_n = 0;
  std::uint64_t verify_seed = 1;
  verify_cmd->add_option("--max-n", verify_max_n, "size limit (suite-specific default)");
  verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_args, count_t, count_oracle);
    if (*bounds_cmd) return run_bounds(bounds_n, bounds_r, bounds_t, bounds_exact);
    if (*sweep_cmd) {
      return run_sweep(sweep_n, sweep_r,
                       sweep_cmd->count("--k") ? std::optional<std::int64_t>(sweep_k)
                                               : std::nullopt,
                       sweep_exact, sweep_out);
    }
    if (*trace_cmd) return run_trace(trace_kind, trace_args, trace_t);
    if (*verify_cmd) return run_verify(verify_suite, verify_max_n, verify_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
