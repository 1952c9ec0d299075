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

#include "oreindex/engstrom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace oreindex {

namespace {

const std::vector<TableRow> kTable = {
    {1, {2, 2, 1, 1}, {1, 1, 1, 1}, 2, std::nullopt},
    {2, {1, 1, 1, 1}, {2, 2, 1, 1}, 2, 1},
    {3, {1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, 4, std::nullopt},
    {4, {2, 1, 1, 1}, {1, 2, 1, 1}, 1, std::nullopt},
    {5, {1, 1, 1, 1}, {3, 1, 1, 1}, 2, 1},
    {6, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, 2, 1},
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad table list \"" + s + "\"");
    }
    out.push_back(std::stoi(item));
  }
  return out;
}

std::optional<int> parse_cell(const std::string& s) {
  if (s == "-") return std::nullopt;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad table cell \"" + s + "\"");
  }
  return std::stoi(s);
}

}  // namespace

std::vector<Ramification> TableRow::signature() const {
  std::vector<Ramification> out;
  for (std::size_t i = 0; i < f_list.size(); ++i) out.push_back({e_list[i], f_list[i]});
  return make_signature(std::move(out));
}

std::optional<int> TableRow::cell(int p) const {
  if (p == 2) return v2;
  if (p == 3) return v3;
  throw DomainError("table only covers p = 2 and p = 3");
}

std::span<const TableRow> engstrom_table() { return kTable; }

std::string table_text() {
  std::ostringstream os;
  os << "Sr. no. | f1,f2,f3,f4,f5 | e1,e2,e3,e4,e5 | v2(i(K)) | v3(i(K))\n";
  for (const auto& row : kTable) {
    os << row.number << " | " << join(row.f_list) << " | " << join(row.e_list) << " | "
       << (row.v2 ? std::to_string(*row.v2) : "-") << " | "
       << (row.v3 ? std::to_string(*row.v3) : "-") << "\n";
  }
  return os.str();
}

std::vector<TableRow> parse_table_text(std::string_view text) {
  std::vector<TableRow> rows;
  std::stringstream ss{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (trim(line).empty() || trim(line).front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '|')) cells.push_back(trim(cell));
    if (cells.size() != 5) throw ParseError("table row needs 5 cells: \"" + line + "\"");
    TableRow row;
    row.number = *parse_cell(cells[0]);
    row.f_list = parse_list(cells[1]);
    row.e_list = parse_list(cells[2]);
    if (row.f_list.size() != row.e_list.size()) throw ParseError("f and e lists differ in length");
    row.v2 = parse_cell(cells[3]);
    row.v3 = parse_cell(cells[4]);
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* to_string(IndexStatus status) {
  switch (status) {
    case IndexStatus::Known: return "known";
    case IndexStatus::Zero: return "zero";
    case IndexStatus::NotTabulated: return "not-tabulated";
  }
  return "?";
}

const char* to_string(Monogenity verdict) {
  return verdict == Monogenity::NonMonogenic ? "non-monogenic" : "inconclusive";
}

std::uint64_t count_irreducible(std::uint64_t p, int k) {
  // Moebius inversion of p^k = sum_{d | k} d * N(d).
  auto mobius = [](int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
      }
    }
    return n > 1 ? -result : result;
  };
  auto ipow = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  std::int64_t total = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) total += mobius(d) * static_cast<std::int64_t>(ipow(p, k / d));
  }
  return static_cast<std::uint64_t>(total / k);
}

IndexResult index_valuation(const std::vector<Ramification>& signature, int p,
                            bool reduction_squarefree) {
  if (p != 2 && p != 3) throw DomainError("index table covers p = 2 and p = 3 only");
  int degree = 0;
  for (const auto& r : signature) degree += r.e * r.f;
  if (degree != 6) throw DomainError("index table covers sextic fields only (sum e*f = " + std::to_string(degree) + ")");

  const auto sig = make_signature(signature);
  const TableRow* match = nullptr;
  for (const auto& row : kTable)
    if (row.signature() == sig) match = &row;

  if (match && match->cell(p)) {
    return {IndexStatus::Known, *match->cell(p), "table row " + std::to_string(match->number),
            match->number};
  }
  if (reduction_squarefree) {
    return {IndexStatus::Zero, 0, "squarefree reduction, p does not divide ind(theta)",
            match ? std::optional<int>(match->number) : std::nullopt};
  }
  if (match) {
    // A dash only reads as 0 when every residue degree has enough monic
    // irreducibles over F_p to separate the primes; otherwise p is a common
    // index divisor of unknown exponent.
    std::map<int, std::uint64_t> per_degree;
    for (const auto& r : sig) ++per_degree[r.f];
    for (const auto& [f, count] : per_degree) {
      if (count > count_irreducible(static_cast<std::uint64_t>(p), f)) {
        return {IndexStatus::NotTabulated, 0,
                "table dash; " + std::to_string(count) + " primes of residue degree " +
                    std::to_string(f) + " force p | i(K)",
                match->number};
      }
    }
    return {IndexStatus::Zero, 0, "table dash, interpreted 0", match->number};
  }
  return {IndexStatus::NotTabulated, 0, "splitting type " + to_string(sig) + " not tabulated",
          std::nullopt};
}

MonogenityVerdict monogenity_verdict(std::span<const PrimeIndex> results) {
  MonogenityVerdict out;
  for (const auto& r : results) {
    if (r.result.status == IndexStatus::Known && r.result.value >= 1) {
      out.verdict = Monogenity::NonMonogenic;
      out.certifying_primes.push_back(r.p);
    }
  }
  return out;
}

}  // namespace oreindex
