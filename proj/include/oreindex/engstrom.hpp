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

// v_p(i(K)) for sextic fields at p = 2, 3 from the splitting type of p,
// using the six tabulated Engstrom rows.

#ifndef OREINDEX_ENGSTROM_HPP
#define OREINDEX_ENGSTROM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oreindex/ore.hpp"

namespace oreindex {

/// One printed table row. f_list and e_list pair positionally; a missing
/// valuation is a dash in the table.
struct TableRow {
  int number = 0;
  std::vector<int> f_list;
  std::vector<int> e_list;
  std::optional<int> v2;
  std::optional<int> v3;

  std::vector<Ramification> signature() const;
  /// Cell for p = 2 or 3.
  std::optional<int> cell(int p) const;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::span<const TableRow> engstrom_table();

/// Rendering of the table in its printed layout, one row per line.
std::string table_text();
/// Inverse of table_text; throws ParseError on malformed input.
std::vector<TableRow> parse_table_text(std::string_view text);

enum class IndexStatus { Known, Zero, NotTabulated };

const char* to_string(IndexStatus status);

struct IndexResult {
  IndexStatus status = IndexStatus::NotTabulated;
  int value = 0;
  std::string reason;
  std::optional<int> table_row;
};

/// Number of monic irreducible polynomials of degree k over F_p.
std::uint64_t count_irreducible(std::uint64_t p, int k);

/// Table lookup by multiset of (e, f). reduction_squarefree attests that
/// f mod p is squarefree, i.e. p does not divide ind(theta).
/// Throws DomainError unless sum e*f == 6 and p is 2 or 3.
IndexResult index_valuation(const std::vector<Ramification>& signature, int p,
                            bool reduction_squarefree = false);

struct PrimeIndex {
  std::int64_t p = 0;
  IndexResult result;
};

enum class Monogenity { NonMonogenic, Inconclusive };

const char* to_string(Monogenity verdict);

struct MonogenityVerdict {
  Monogenity verdict = Monogenity::Inconclusive;
  std::vector<std::int64_t> certifying_primes;
};

/// Non-monogenic iff some prime has a known valuation >= 1. Never
/// certifies monogenity.
MonogenityVerdict monogenity_verdict(std::span<const PrimeIndex> results);

}  // namespace oreindex

#endif  // OREINDEX_ENGSTROM_HPP
