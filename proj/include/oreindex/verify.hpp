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

// Reproduction of the quadrinomial index results on sampled families, with
// independent oracles for expansions, Dedekind splitting, residual
// factorizations and the embedded table.

#ifndef OREINDEX_VERIFY_HPP
#define OREINDEX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace oreindex {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Instances per prime for the 8 | a, b, c+1 and 9 | a, b, c+1 families.
  int th12_samples = 200;
  /// Instances per sub-case.
  int case_samples = 50;
  /// Instances per corollary family.
  int corollary_samples = 50;
  int expansion_samples = 1000;
  int dedekind_samples = 500;
  /// Text fixture of the printed table; empty skips the comparison (fails).
  std::string table_fixture;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  /// Reported but never counted as a failure.
  bool informational = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// First few failure descriptions, or a summary line.
  std::vector<std::string> details;
  double seconds = 0;
};

std::vector<CriterionResult> run_verification(const VerifyOptions& options);

/// True iff every non-informational criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

std::string render_results(const std::vector<CriterionResult>& results);
std::string results_json(const std::vector<CriterionResult>& results);

}  // namespace oreindex

#endif  // OREINDEX_VERIFY_HPP
