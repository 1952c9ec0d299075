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

// Congruence/valuation checkers for f(x) = x^6 + a x^m + b x + c, closed-form
// expansions of f at x+1 and x-1, and irreducibility helpers.
//
// Checkers never run the splitting pipeline; agreement with it is a test
// obligation, not something corrected at runtime.

#ifndef OREINDEX_QUADRINOMIAL_HPP
#define OREINDEX_QUADRINOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "oreindex/zpoly.hpp"

namespace oreindex {

/// x^6 + a x^m + b x + c with m in 1..5 (for m = 1 the x-coefficient is a + b).
struct QuadrinomialInput {
  mpz_class a;
  mpz_class b;
  mpz_class c;
  int m = 2;

  IntPoly polynomial() const;
};

enum class TheoremId {
  Th12,
  Th13,  // gates of th1.3 failed or no sub-case matched
  Th13i,
  Th13ii,
  Th13iii,
  Th13iv,
  Th14,
  Th14i,
  Th14ii,
  Th14iii,
  Cor11,
  Cor15,
};

const char* to_string(TheoremId id);

struct ClaimedValuation {
  int p = 2;
  int v = 1;

  friend bool operator==(const ClaimedValuation&, const ClaimedValuation&) = default;
};

struct TheoremVerdict {
  TheoremId id = TheoremId::Th12;
  bool applies = false;
  std::vector<ClaimedValuation> claimed;
  std::vector<std::string> failed_conditions;

  /// Claimed v_p, if any.
  std::optional<int> claim_for(int p) const;
};

/// 8 | a, b, c+1 claims v2 = 2; 9 | a, b, c+1 claims v3 = 1. m in 2..5.
TheoremVerdict check_th12(const QuadrinomialInput& q);
/// m in 2..4, b and c nonzero.
TheoremVerdict check_th13(const QuadrinomialInput& q);
/// m in 2..4, b and c nonzero.
TheoremVerdict check_th14(const QuadrinomialInput& q);
/// Trinomial x^6 + a x^m + b, m in 1..5.
TheoremVerdict check_cor11(const mpz_class& a, const mpz_class& b, int m);
/// m in 3..4.
TheoremVerdict check_cor15(const QuadrinomialInput& q);

/// (x+1)-adic digits from the binomial closed form; m in 1..5.
PhiExpansion expansion_31(const QuadrinomialInput& q);
/// (x-1)-adic digits from the binomial closed form; m in 1..5.
PhiExpansion expansion_32(const QuadrinomialInput& q);

struct DmValues {
  /// Constant digit of the (x^2+x+1)-expansion.
  IntPoly d_m;
  /// Constant digit of the (x+1)-expansion.
  mpz_class d_j2;
  /// Constant digit of the (x-1)-expansion.
  mpz_class d_j3;
};

/// m in 2..5.
DmValues compute_dm(const QuadrinomialInput& q);

/// Requires f monic and q prime.
bool eisenstein(const IntPoly& f, const mpz_class& q);

enum class Irreducibility { Irreducible, Reducible, Unknown };

const char* to_string(Irreducibility status);

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::Unknown;
  /// Monic factor of degree <= deg/2 for Reducible.
  std::optional<IntPoly> witness;
  /// How the status was established.
  std::string certificate;
};

/// Eisenstein at primes <= 10^4, then factor-degree patterns modulo the first
/// 25 primes where f is squarefree, then a search for a factor of degree
/// <= deg/2 among products of numerically computed roots, each candidate
/// checked by exact division. Requires f monic.
IrreducibilityResult irreducibility(const IntPoly& f);

/// Splits a monic sextic into quadrinomial shape if it has one: at most
/// one nonzero coefficient among x^2..x^5. With none, m = 1 and a = 0.
std::optional<QuadrinomialInput> match_quadrinomial(const IntPoly& f);

/// Every checker whose shape requirements the input meets.
std::vector<TheoremVerdict> applicable_checks(const QuadrinomialInput& q);

/// Explanation for the m = 2 family a = -7 (112), b = 56 (112), c = 0 (896):
/// Eisenstein at 7 proves irreducibility, but 8 does not divide a + 1 so the
/// 2-adic gate of th1.3 fails; the reported v2 is whatever the polygons give.
std::optional<std::string> family_note(const QuadrinomialInput& q);

}  // namespace oreindex

#endif  // OREINDEX_QUADRINOMIAL_HPP
