/* Copyright 2026 The oreindex Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// oreindex: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "oreindex/engstrom.hpp"
#include "oreindex/errors.hpp"
#include "oreindex/report.hpp"
#include "oreindex/verify.hpp"

#ifndef OREINDEX_TABLE_FIXTURE
#define OREINDEX_TABLE_FIXTURE ""
#endif

namespace {

using namespace oreindex;

int code(ExitCode c) { return static_cast<int>(c); }

unsigned resolve_jobs(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ORE_INDEX_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring invalid ORE_INDEX_JOBS='" << env << "'\n";
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int cmd_analyze(const std::string& poly, std::vector<std::int64_t> primes, bool json) {
  IntPoly f;
  try {
    f = parse_poly(poly);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return code(ExitCode::ParseError);
  }
  if (primes.empty()) primes = {2, 3};
  AnalysisReport report;
  try {
    report = analyze(f, primes, poly);
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return code(ExitCode::InvalidInput);
  }
  if (json) {
    std::cout << nlohmann::json(report).dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return code(exit_code(report));
}

struct ScanFlags {
  std::string spec_file;
  int m = 2;
  std::string a, b, c;
  std::vector<std::int64_t> primes;
  std::optional<std::uint64_t> limit;
  bool csv = false;
  bool json = false;
  unsigned jobs = 0;
};

int cmd_scan(const ScanFlags& flags) {
  ScanSpec spec;
  try {
    if (!flags.spec_file.empty()) {
      std::ifstream in(flags.spec_file);
      if (!in) {
        std::cerr << "cannot read spec file " << flags.spec_file << "\n";
        return code(ExitCode::InvalidInput);
      }
      spec = scan_spec_from_json(nlohmann::json::parse(in));
    } else {
      if (flags.a.empty() || flags.b.empty() || flags.c.empty()) {
        std::cerr << "scan needs --spec or all of --a, --b, --c\n";
        return code(ExitCode::Usage);
      }
      if (flags.m < 1 || flags.m > 5) throw DomainError("m must be in 1..5");
      spec.m = flags.m;
      spec.a = parse_range(flags.a);
      spec.b = parse_range(flags.b);
      spec.c = parse_range(flags.c);
    }
    if (!flags.primes.empty()) spec.primes = flags.primes;
    if (flags.limit) spec.limit = flags.limit;
    for (auto p : spec.primes) require_prime(p);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return code(ExitCode::InvalidInput);
  } catch (const Error& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return code(ExitCode::InvalidInput);
  }

  const std::uint64_t total = scan_size(spec);
  std::cerr << "scan: " << total << " instances\n";
  if (total == 0) std::cerr << "warning: empty enumeration, nothing to scan\n";

  const unsigned jobs = resolve_jobs(flags.jobs);
  if (flags.csv) {
    std::cout << scan_csv_header(spec) << "\n";
    run_scan(spec, jobs, [](const ScanRow& row) { std::cout << scan_csv_line(row) << "\n"; });
  } else if (flags.json) {
    std::cout << "{\"total\": " << total << ", \"rows\": [";
    bool first = true;
    run_scan(spec, jobs, [&first](const ScanRow& row) {
      std::cout << (first ? "\n" : ",\n") << scan_row_json(row).dump();
      first = false;
    });
    std::cout << (first ? "" : "\n") << "]}\n";
  } else {
    run_scan(spec, jobs, [](const ScanRow& row) { std::cout << scan_text_line(row) << "\n"; });
  }
  return code(ExitCode::Ok);
}

int cmd_verify(std::uint64_t seed, bool json, const std::string& fixture) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.table_fixture = fixture;
  auto results = run_verification(opt);
  if (json) {
    std::cout << results_json(results) << "\n";
  } else {
    std::cout << render_results(results);
    std::cout << (all_passed(results) ? "all criteria passed\n" : "verification failed\n");
  }
  return code(all_passed(results) ? ExitCode::Ok : ExitCode::VerificationFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime splitting, Newton polygons and common index divisors of sextic fields"};
  app.require_subcommand(1);

  std::string poly;
  std::vector<std::int64_t> primes;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze one monic polynomial");
  analyze->add_option("--poly", poly, "Polynomial, e.g. x^6+8x^2+8x+7")->required();
  analyze->add_option("--prime", primes, "Prime to analyze (repeatable, default 2 and 3)");
  analyze->add_flag("--json", analyze_json, "Emit a JSON report");

  ScanFlags scan_flags;
  std::uint64_t limit = 0;
  auto* scan = app.add_subcommand("scan", "Scan x^6 + a x^m + b x + c over coefficient ranges");
  scan->add_option("--spec", scan_flags.spec_file, "JSON spec file");
  scan->add_option("--m", scan_flags.m, "Exponent m in 1..5");
  scan->add_option("--a", scan_flags.a, "Range min:max[:modulus:residue]");
  scan->add_option("--b", scan_flags.b, "Range min:max[:modulus:residue]");
  scan->add_option("--c", scan_flags.c, "Range min:max[:modulus:residue]");
  scan->add_option("--prime", scan_flags.primes, "Prime to analyze (repeatable)");
  auto* limit_opt = scan->add_option("--limit", limit, "Stop after this many instances");
  auto* csv = scan->add_flag("--csv", scan_flags.csv, "CSV output");
  auto* sjson = scan->add_flag("--json", scan_flags.json, "JSON output");
  csv->excludes(sjson);
  scan->add_option("--jobs", scan_flags.jobs, "Worker threads (default ORE_INDEX_JOBS or all cores)");

  std::uint64_t seed = kDefaultSeed;
  bool verify_json = false;
  std::string fixture = OREINDEX_TABLE_FIXTURE;
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction suite");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_flag("--json", verify_json, "Emit JSON results");
  verify->add_option("--table-fixture", fixture, "Table fixture to compare against");

  auto* table = app.add_subcommand("table", "Print the embedded index table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return code(ExitCode::Usage);
  }

  try {
    if (*analyze) return cmd_analyze(poly, primes, analyze_json);
    if (*scan) {
      if (*limit_opt) scan_flags.limit = limit;
      return cmd_scan(scan_flags);
    }
    if (*verify) return cmd_verify(seed, verify_json, fixture);
    if (*table) {
      std::cout << table_text();
      return code(ExitCode::Ok);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return code(ExitCode::Internal);
  }
  return code(ExitCode::Usage);
}
