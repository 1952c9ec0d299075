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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"
#include "oreindex/report.hpp"
#include "oreindex/verify.hpp"

using namespace oreindex;

namespace {

const PrimeReport& at(const AnalysisReport& r, std::int64_t p) {
  for (const auto& pr : r.primes) {
    if (pr.p == p) return pr;
  }
  throw std::out_of_range("prime missing");
}

using Pairs = std::vector<std::array<int, 2>>;

std::vector<ScanRow> collect(const ScanSpec& spec, unsigned jobs) {
  std::vector<ScanRow> rows;
  run_scan(spec, jobs, [&](const ScanRow& r) { rows.push_back(r); });
  return rows;
}

}  // namespace

TEST_CASE("analyze 8 | a, b, c+1 and 9 | a, b, c+1 instances") {
  const std::int64_t primes[] = {2, 3};
  AnalysisReport r = analyze(parse_poly("x^6+8x^2+8x+7"), primes, "x^6+8x^2+8x+7");
  CHECK(at(r, 2).splitting == Pairs{{1, 2}, {1, 2}, {1, 1}, {1, 1}});
  CHECK(at(r, 2).index.status == "known");
  CHECK(at(r, 2).index.value == 2);
  CHECK(r.monogenic == "non-monogenic");
  CHECK(r.certifying_primes == std::vector<std::int64_t>{2});
  CHECK(r.irreducibility == "reducible");
  CHECK(exit_code(r) == ExitCode::Ok);
  CHECK(at(r, 2).factors.size() == 2);
  CHECK(at(r, 2).polygons.size() == 2);

  const std::int64_t three[] = {3};
  AnalysisReport s = analyze(parse_poly("x^6+9x^2+9x+8"), three);
  CHECK(at(s, 3).splitting == Pairs{{2, 1}, {2, 1}, {1, 1}, {1, 1}});
  CHECK(at(s, 3).index.value == 1);
}

TEST_CASE("analyze x^6+105x^2+56x+896") {
  const std::int64_t two[] = {2};
  AnalysisReport r = analyze(parse_poly("x^6+105x^2+56x+896"), two);
  CHECK(exit_code(r) == ExitCode::Ok);
  int total = 0;
  for (const auto& [e, f] : at(r, 2).splitting) total += e * f;
  CHECK(total == 6);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("th1.3 gate") != std::string::npos;
  CHECK(noted);
  CHECK(r.irreducibility == "irreducible");
}

TEST_CASE("per-prime errors and exit codes") {
  const std::int64_t two[] = {2};
  AnalysisReport bad = analyze(parse_poly("x^6+4"), two);
  CHECK(at(bad, 2).error_kind == "not-regular");
  CHECK_FALSE(at(bad, 2).regular);
  CHECK(at(bad, 2).index.status == "skipped");
  CHECK(exit_code(bad) == ExitCode::NotRegular);

  const std::int64_t composite[] = {4};
  CHECK(exit_code(analyze(parse_poly("x^6+1"), composite)) == ExitCode::InvalidInput);
  CHECK_THROWS_AS(analyze(parse_poly("3x^6+1"), two), DomainError);

  const std::int64_t five[] = {5};
  AnalysisReport non_sextic = analyze(parse_poly("x^5+x+3"), five);
  CHECK(at(non_sextic, 5).error_kind.empty());
  CHECK(at(non_sextic, 5).index.status == "skipped");
  CHECK(non_sextic.verdicts.empty());

  std::set<int> codes;
  for (auto c : {ExitCode::Ok, ExitCode::Internal, ExitCode::ParseError, ExitCode::NotRegular,
                 ExitCode::ZeroModP, ExitCode::InvalidInput, ExitCode::VerificationFailed, ExitCode::Usage}) {
    codes.insert(static_cast<int>(c));
  }
  CHECK(codes.size() == 8);
}

TEST_CASE("json schema and round trip") {
  const std::int64_t primes[] = {2, 3, 5, 7};
  for (const char* text : {"x^6+8x^2+8x+7", "x^6+15x^2+8x+128", "x^6+4", "x^6+x+3",
                           "x^6+105x^2+56x+896", "x^3-2", "x^6+123456789012345678901234567890x+1"}) {
    AnalysisReport r = analyze(parse_poly(text), primes, text);
    nlohmann::json j = r;
    for (const char* key : {"input", "primes", "verdicts", "monogenic"}) CHECK(j.contains(key));
    for (const auto& p : j["primes"]) {
      for (const char* key : {"p", "factors", "polygons", "splitting", "index"}) CHECK(p.contains(key));
      for (const auto& poly : p["polygons"]) {
        CHECK(poly.contains("vertices"));
        for (const auto& e : poly["edges"]) {
          for (const char* key : {"l", "e", "length", "residual", "residual_factors"}) CHECK(e.contains(key));
        }
      }
    }
    AnalysisReport back = nlohmann::json::parse(j.dump()).get<AnalysisReport>();
    CHECK(back == r);
  }
}

TEST_CASE("text rendering") {
  const std::int64_t two[] = {2};
  std::string text = render_text(analyze(parse_poly("x^6+15x^2+8x+128"), two));
  CHECK(text.find("splitting: (2,1)(1,2)(1,1)(1,1)") != std::string::npos);
  CHECK(text.find("index: known 1") != std::string::npos);
  CHECK(text.find("monogenic: non-monogenic") != std::string::npos);
}

TEST_CASE("coefficient ranges") {
  CoefficientRange r = parse_range("0:100:16:8");
  CHECK(r.count() == 6);
  CHECK(r.value(0) == 8);
  CHECK(r.value(5) == 88);
  CoefficientRange neg = parse_range("-20:20:7:-1");
  CHECK(neg.value(0) == -15);
  CHECK(neg.count() == 6);
  CHECK(parse_range("5:4").count() == 0);
  CHECK(parse_range("3:3").count() == 1);
  CHECK_THROWS_AS(parse_range("1:2:3"), DomainError);
  CHECK_THROWS_AS(parse_range("1:x"), DomainError);
  CHECK_THROWS_AS(parse_range("1:9:0:0"), DomainError);
}

TEST_CASE("scan spec from json") {
  auto j = nlohmann::json::parse(R"({"m": 3, "a": {"min": 1, "max": 1000, "modulus": 72, "residue": 1},
      "b": {"min": "216", "max": "216"}, "c": {"min": 7776, "max": 77760, "modulus": 7776},
      "primes": [2, 3], "limit": 20})");
  ScanSpec s = scan_spec_from_json(j);
  CHECK(s.m == 3);
  CHECK(s.a.count() == 14);
  CHECK(s.b.count() == 1);
  CHECK(s.c.count() == 10);
  CHECK(scan_size(s) == 20);
  CHECK_THROWS_AS(scan_spec_from_json(nlohmann::json::parse(R"({"m": 7, "a": {"min":0,"max":1}, "b": {"min":0,"max":1}, "c": {"min":0,"max":1}})")), DomainError);
  CHECK_THROWS_AS(scan_spec_from_json(nlohmann::json::parse(R"({"m": 2, "a": {"min":0,"max":1}, "b": {"min":0,"max":1}, "c": {"min":0,"max":1}, "primes": [4]})")), InvalidPrime);
}

TEST_CASE("scan of a = b = 8, c = 7 mod 16") {
  ScanSpec s;
  s.m = 2;
  s.a = parse_range("8:200:16:8");
  s.b = parse_range("8:200:16:8");
  s.c = parse_range("7:2000:16:7");
  s.primes = {2};
  s.limit = 100;
  auto rows = collect(s, 2);
  REQUIRE(rows.size() == 100);
  for (const auto& row : rows) {
    REQUIRE(row.cells.size() == 1);
    CHECK(row.cells[0].index == "known 2");
    CHECK(row.monogenic == "non-monogenic");
  }
}

TEST_CASE("scan of a = 1 mod 72, b = 216 mod 1296, c = 0 mod 7776") {
  ScanSpec s;
  s.m = 3;
  s.a = parse_range("1:1000:72:1");
  s.b = parse_range("216:20000:1296:216");
  s.c = parse_range("7776:40000:7776:0");
  s.primes = {2, 3};
  s.limit = 60;
  auto rows = collect(s, 3);
  REQUIRE(rows.size() == 60);
  for (const auto& row : rows) {
    REQUIRE(row.cells.size() == 2);
    CHECK(row.cells[0].index == "known 1");
    CHECK(row.cells[1].index == "known 1");
  }
}

TEST_CASE("empty scan") {
  ScanSpec s;
  s.a = parse_range("5:4");
  s.b = parse_range("0:3");
  s.c = parse_range("0:3");
  CHECK(scan_size(s) == 0);
  CHECK(collect(s, 4).empty());
}

TEST_CASE("scan determinism") {
  ScanSpec s;
  s.m = 4;
  s.a = parse_range("-30:30:3:1");
  s.b = parse_range("-20:20");
  s.c = parse_range("-9:9:2:1");
  s.primes = {2, 3, 5};
  s.limit = 400;
  auto render = [&](unsigned jobs) {
    std::string out = scan_csv_header(s) + "\n";
    run_scan(s, jobs, [&](const ScanRow& r) { out += scan_csv_line(r) + "\n" + scan_row_json(r).dump() + "\n"; });
    return out;
  };
  const std::string one = render(1);
  CHECK(render(4) == one);
  CHECK(render(7) == one);
  std::size_t in_row_errors = 0;
  for (const auto& row : collect(s, 4)) {
    for (const auto& cell : row.cells) in_row_errors += !cell.error.empty();
  }
  CHECK(in_row_errors > 0);
}

TEST_CASE("seeded verification is reproducible") {
  VerifyOptions opt;
  opt.seed = 99;
  opt.th12_samples = 10;
  opt.case_samples = 5;
  opt.corollary_samples = 5;
  opt.expansion_samples = 50;
  opt.dedekind_samples = 50;
  opt.table_fixture = OREINDEX_TABLE_FIXTURE;
  auto a = run_verification(opt);
  auto b = run_verification(opt);
  REQUIRE(a.size() == 10);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].details == b[i].details);
    CHECK(a[i].checked == b[i].checked);
    CHECK(a[i].passed);
  }
  CHECK(all_passed(a));
}
