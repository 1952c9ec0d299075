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

// Analysis reports, family scans and their text / JSON / CSV renderings.

#ifndef OREINDEX_REPORT_HPP
#define OREINDEX_REPORT_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "oreindex/zpoly.hpp"

namespace oreindex {

/// Process exit codes of the command-line tool. Stable.
enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  ParseError = 2,
  NotRegular = 3,
  ZeroModP = 4,
  InvalidInput = 5,
  VerificationFailed = 6,
  Usage = 64,
};

struct FactorEntry {
  std::string phi;
  int multiplicity = 1;
  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct EdgeEntry {
  std::int64_t l = 0;
  std::int64_t e = 1;
  std::int64_t length = 0;
  std::array<std::int64_t, 2> start{};
  std::array<std::int64_t, 2> end{};
  std::string residual;
  std::vector<FactorEntry> residual_factors;
  friend bool operator==(const EdgeEntry&, const EdgeEntry&) = default;
};

struct PolygonEntry {
  std::string phi;
  bool lift_adjusted = false;
  std::vector<std::array<std::int64_t, 2>> vertices;
  /// Principal edges only.
  std::vector<EdgeEntry> edges;
  friend bool operator==(const PolygonEntry&, const PolygonEntry&) = default;
};

struct IndexEntry {
  /// "known", "zero", "not-tabulated" or "skipped".
  std::string status = "skipped";
  std::optional<int> value;
  std::string reason;
  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

struct PrimeReport {
  std::int64_t p = 0;
  std::vector<FactorEntry> factors;
  std::vector<PolygonEntry> polygons;
  bool regular = true;
  std::vector<std::array<int, 2>> splitting;
  std::vector<std::string> provenance;
  IndexEntry index;
  /// Empty on success; otherwise one of "not-regular", "zero-mod-p",
  /// "invalid-input", "internal".
  std::string error_kind;
  std::string error;
  friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

struct VerdictEntry {
  std::string theorem;
  bool applies = false;
  std::vector<std::array<int, 2>> claimed;
  std::vector<std::string> failed_conditions;
  friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

struct AnalysisReport {
  std::string input;
  std::string polynomial;
  std::string irreducibility;
  std::string irreducibility_certificate;
  std::vector<PrimeReport> primes;
  std::vector<VerdictEntry> verdicts;
  std::string monogenic = "inconclusive";
  std::vector<std::int64_t> certifying_primes;
  std::vector<std::string> notes;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

void to_json(nlohmann::json& j, const FactorEntry& v);
void from_json(const nlohmann::json& j, FactorEntry& v);
void to_json(nlohmann::json& j, const EdgeEntry& v);
void from_json(const nlohmann::json& j, EdgeEntry& v);
void to_json(nlohmann::json& j, const PolygonEntry& v);
void from_json(const nlohmann::json& j, PolygonEntry& v);
void to_json(nlohmann::json& j, const IndexEntry& v);
void from_json(const nlohmann::json& j, IndexEntry& v);
void to_json(nlohmann::json& j, const PrimeReport& v);
void from_json(const nlohmann::json& j, PrimeReport& v);
void to_json(nlohmann::json& j, const VerdictEntry& v);
void from_json(const nlohmann::json& j, VerdictEntry& v);
void to_json(nlohmann::json& j, const AnalysisReport& v);
void from_json(const nlohmann::json& j, AnalysisReport& v);

/// Runs factorization, polygons, splitting, index lookup (sextics at 2 and
/// 3) and the quadrinomial checkers. Per-prime failures are recorded in the
/// report rather than thrown.
AnalysisReport analyze(const IntPoly& f, std::span<const std::int64_t> primes,
                       std::string input_text = {});

/// First per-prime error mapped to its exit code, Ok otherwise.
ExitCode exit_code(const AnalysisReport& report);

std::string render_text(const AnalysisReport& report);

// ---------------------------------------------------------------------------
// Family scans over x^6 + a x^m + b x + c.

/// Integers v in [min, max] with v = residue (mod modulus).
struct CoefficientRange {
  mpz_class min = 0;
  mpz_class max = 0;
  mpz_class modulus = 1;
  mpz_class residue = 0;

  mpz_class count() const;
  /// k-th value in increasing order, k < count().
  mpz_class value(const mpz_class& k) const;
};

struct ScanSpec {
  int m = 2;
  CoefficientRange a;
  CoefficientRange b;
  CoefficientRange c;
  std::vector<std::int64_t> primes{2, 3};
  /// Stop after this many instances.
  std::optional<std::uint64_t> limit;
};

/// Keys: m, a, b, c (each {min, max, modulus, residue}; integers may be
/// strings), primes, limit. Throws DomainError on invalid specs.
ScanSpec scan_spec_from_json(const nlohmann::json& j);
/// Parses "min:max" or "min:max:modulus:residue".
CoefficientRange parse_range(const std::string& text);

/// Total instances after applying the limit.
std::uint64_t scan_size(const ScanSpec& spec);

struct ScanCell {
  std::int64_t p = 0;
  std::string splitting;
  std::string index;
  std::string error;
};

struct ScanRow {
  std::uint64_t ordinal = 0;
  int m = 2;
  std::string a;
  std::string b;
  std::string c;
  std::string irreducibility;
  std::vector<ScanCell> cells;
  /// Applying checkers with their claims, e.g. "th1.2[v2=2]".
  std::vector<std::string> verdicts;
  std::string monogenic;
};

ScanRow scan_instance(const ScanSpec& spec, std::uint64_t ordinal);

/// Evaluates every instance on `jobs` workers and hands rows to `sink` in
/// enumeration order.
void run_scan(const ScanSpec& spec, unsigned jobs, const std::function<void(const ScanRow&)>& sink);

std::string scan_csv_header(const ScanSpec& spec);
std::string scan_csv_line(const ScanRow& row);
std::string scan_text_line(const ScanRow& row);
nlohmann::json scan_row_json(const ScanRow& row);

}  // namespace oreindex

#endif  // OREINDEX_REPORT_HPP
