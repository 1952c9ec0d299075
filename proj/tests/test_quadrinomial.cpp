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

#include <random>

#include "oreindex/engstrom.hpp"
#include "oreindex/ore.hpp"
#include "oreindex/quadrinomial.hpp"

using namespace oreindex;

namespace {

bool divides(long d, const mpz_class& v) { return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(d)) != 0; }

long val(const mpz_class& v, long p) { return vp_int(v, p).value(); }

/// Pipeline value of v_p(i(K)), if the table knows it.
std::optional<int> pipeline_value(const QuadrinomialInput& q, int p) {
  PrimeAnalysis pa = analyze_prime(q.polynomial(), p);
  IndexResult r = index_valuation(splitting_from(pa).signature(), p, pa.squarefree);
  if (r.status != IndexStatus::Known) return std::nullopt;
  return r.value;
}

void check_agreement(const TheoremVerdict& v, const QuadrinomialInput& q) {
  REQUIRE(v.applies);
  for (const auto& c : v.claimed) CHECK(pipeline_value(q, c.p) == c.v);
}

/// Independent restatement of each theorem's hypotheses.
bool gates_hold(const TheoremVerdict& v, const QuadrinomialInput& q, int p) {
  const long mod = p == 2 ? 8 : 9;
  const int sign = q.m % 2 == 0 ? 1 : -1;
  switch (v.id) {
    case TheoremId::Th12:
      return divides(mod, q.a) && divides(mod, q.b) && divides(mod, q.c + 1);
    case TheoremId::Cor11:
      if (q.m == 1) return divides(mod, q.a + q.b) && divides(mod, q.c + 1);
      return q.b == 0 && divides(mod, q.a) && divides(mod, q.c + 1);
    default:
      break;
  }
  if (q.b == 0 || q.c == 0) return false;
  const bool base = divides(mod, q.a + sign) && divides(mod, q.b) && divides(mod, q.c) &&
                    q.m * val(q.b, p) < (q.m - 1) * val(q.c, p);
  if (!base) return false;
  const long vb = val(q.b, p);
  switch (v.id) {
    case TheoremId::Th13i:
      return p == 2 && q.m == 2 && vp_int(q.a + 1 - q.b + q.c, 2) > Valuation(3);
    case TheoremId::Th13ii:
      return p == 2 && q.m == 2 && vp_int(q.a + 1 - q.b + q.c, 2) == Valuation(3);
    case TheoremId::Th13iii:
      return p == 2 && q.m == 3 && vb % 2 == 1;
    case TheoremId::Th13iv:
      return p == 2 && q.m == 4 && vb % 3 != 0;
    case TheoremId::Th14i:
      return p == 3 && q.m == 2;
    case TheoremId::Th14ii:
      return p == 3 && q.m == 3 && vb % 2 == 1;
    case TheoremId::Th14iii:
      return p == 3 && q.m == 4 && vb % 3 != 0;
    case TheoremId::Cor15:
      return std::gcd(vb, 6L) == 1;
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("polynomial shape") {
  CHECK(QuadrinomialInput{8, 8, 7, 2}.polynomial() == parse_poly("x^6+8x^2+8x+7"));
  CHECK(QuadrinomialInput{3, 5, 7, 1}.polynomial() == parse_poly("x^6+8x+7"));
}

TEST_CASE("check_th12") {
  auto v = check_th12({8, 8, 7, 2});
  CHECK(v.applies);
  CHECK(v.claim_for(2) == 2);
  CHECK_FALSE(v.claim_for(3).has_value());

  auto both = check_th12({72, 72, 71, 5});
  CHECK(both.claim_for(2) == 2);
  CHECK(both.claim_for(3) == 1);

  auto no = check_th12({4, 8, 7, 2});
  CHECK_FALSE(no.applies);
  CHECK(no.claimed.empty());
  CHECK_FALSE(no.failed_conditions.empty());

  CHECK_THROWS_AS(check_th12({8, 8, 7, 1}), DomainError);
  CHECK_THROWS_AS(check_th12({8, 8, 7, 6}), DomainError);

  check_agreement(check_th12({8, 16, 23, 2}), {8, 16, 23, 2});
  check_agreement(check_th12({9, 9, 8, 2}), {9, 9, 8, 2});
  check_agreement(both, {72, 72, 71, 5});
}

TEST_CASE("check_th13") {
  auto i = check_th13({7, 8, 128, 2});
  CHECK(i.id == TheoremId::Th13i);
  CHECK(i.claim_for(2) == 4);
  check_agreement(i, {7, 8, 128, 2});

  auto ii = check_th13({15, 8, 128, 2});
  CHECK(ii.id == TheoremId::Th13ii);
  CHECK(ii.claim_for(2) == 1);
  check_agreement(ii, {15, 8, 128, 2});

  auto iv = check_th13({7, 16, 64, 4});
  CHECK(iv.id == TheoremId::Th13iv);
  CHECK(iv.claim_for(2) == 2);
  check_agreement(iv, {7, 16, 64, 4});

  // v2(a+1-b+c) < 3 is outside both m = 2 sub-cases
  auto low = check_th13({3, 8, 128, 2});
  CHECK_FALSE(low.applies);

  CHECK_THROWS_AS(check_th13({7, 0, 128, 2}), DomainError);
  CHECK_THROWS_AS(check_th13({7, 8, 0, 2}), DomainError);
  CHECK_THROWS_AS(check_th13({7, 8, 128, 5}), DomainError);
}

TEST_CASE("check_th14") {
  auto i = check_th14({8, 9, 243, 2});
  CHECK(i.id == TheoremId::Th14i);
  check_agreement(i, {8, 9, 243, 2});
  auto ii = check_th14({10, 27, 243, 3});
  CHECK(ii.id == TheoremId::Th14ii);
  check_agreement(ii, {10, 27, 243, 3});
  auto iii = check_th14({8, 9, 27, 4});
  CHECK(iii.id == TheoremId::Th14iii);
  check_agreement(iii, {8, 9, 27, 4});
  for (const auto& v : {i, ii, iii}) CHECK(v.claim_for(3) == 1);
  CHECK_FALSE(check_th14({8, 9, 9, 2}).applies);
  CHECK_THROWS_AS(check_th14({8, 9, 27, 1}), DomainError);
}

TEST_CASE("check_cor11 and check_cor15") {
  auto a = check_cor11(8, 7, 1);
  CHECK(a.applies);
  CHECK(a.claim_for(2) == 2);
  check_agreement(a, {8, 0, 7, 1});
  auto b = check_cor11(9, 8, 3);
  CHECK(b.claim_for(3) == 1);
  check_agreement(b, {9, 0, 8, 3});
  CHECK_FALSE(check_cor11(6, 7, 2).applies);
  CHECK_THROWS_AS(check_cor11(8, 7, 0), DomainError);

  auto e18 = check_cor15({9, 32, 256, 3});
  CHECK(e18.claim_for(2) == 1);
  check_agreement(e18, {9, 32, 256, 3});
  auto m4 = check_cor15({7, 32, 128, 4});
  CHECK(m4.claim_for(2) == 2);
  check_agreement(m4, {7, 32, 128, 4});
  auto gcd3 = check_cor15({9, 8, 256, 3});  // v2(b) = 3
  CHECK_FALSE(gcd3.claim_for(2).has_value());
  CHECK_THROWS_AS(check_cor15({9, 32, 256, 2}), DomainError);
}

TEST_CASE("x^6+73x^3+216x+7776 at 2 and 3") {
  const QuadrinomialInput q{73, 216, 7776, 3};
  CHECK(pipeline_value(q, 2) == 1);
  CHECK(pipeline_value(q, 3) == 1);
  check_agreement(check_th13(q), q);
  check_agreement(check_th14(q), q);
}

TEST_CASE("closed-form expansions") {
  CHECK(expansion_31({8, 8, 7, 2}).digits[0] == IntPoly{8});
  CHECK(expansion_32({9, 9, 8, 2}).digits[0] == IntPoly{27});
  CHECK(expansion_31({8, 8, 7, 2}).digits.back() == IntPoly{1});
  CHECK(expansion_32({9, 9, 8, 2}).digits[6] == IntPoly{1});
  DmValues dm = compute_dm({8, 16, 23, 2});
  CHECK(dm.d_m == IntPoly{16, 8});
  CHECK(compute_dm({8, 8, 7, 2}).d_m.is_zero());
  CHECK(compute_dm({5, 7, 11, 3}).d_m == IntPoly{1 + 11 + 5, 7});
  CHECK(compute_dm({5, 7, 11, 4}).d_m == IntPoly{1 + 11, 7 + 5});
  CHECK(compute_dm({5, 7, 11, 5}).d_m == IntPoly{1 + 11 - 5, 7 - 5});
  CHECK(compute_dm({5, 7, 11, 3}).d_j3 == 5 + 7 + 11 + 1);
  CHECK_THROWS_AS(compute_dm({5, 7, 11, 1}), DomainError);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    auto draw = [&] { return mpz_class(static_cast<long>(rng() % 2000001) - 1000000); };
    QuadrinomialInput q{draw(), draw(), draw(), 1 + static_cast<int>(rng() % 5)};
    const IntPoly f = q.polynomial();
    CHECK(expansion_31(q) == phi_expand(f, IntPoly{1, 1}));
    CHECK(expansion_32(q) == phi_expand(f, IntPoly{-1, 1}));
    if (q.m >= 2) {
      DmValues d = compute_dm(q);
      CHECK(d.d_m == phi_expand(f, IntPoly{1, 1, 1}).digits[0]);
      CHECK(IntPoly::constant(d.d_j2) == phi_expand(f, IntPoly{1, 1}).digits[0]);
      CHECK(IntPoly::constant(d.d_j3) == phi_expand(f, IntPoly{-1, 1}).digits[0]);
    }
  }
}

TEST_CASE("eisenstein") {
  CHECK(eisenstein(parse_poly("x^6+105x^2+56x+896"), 7));
  CHECK_FALSE(eisenstein(parse_poly("x^6+8x^2+8x+7"), 2));
  CHECK_FALSE(eisenstein(parse_poly("x^6"), 3));
  CHECK_THROWS_AS(eisenstein(parse_poly("x^6+6"), 6), InvalidPrime);
}

TEST_CASE("irreducibility") {
  auto e17 = irreducibility(parse_poly("x^6+105x^2+56x+896"));
  CHECK(e17.status == Irreducibility::Irreducible);
  CHECK(e17.certificate == "Eisenstein at 7");

  auto split = irreducibility(parse_poly("x^6+x^4+x^2+1"));  // (x^2+1)(x^4+1)
  REQUIRE(split.status == Irreducibility::Reducible);
  CHECK(split.witness == IntPoly{1, 0, 1});

  auto th12 = irreducibility(parse_poly("x^6+8x^2+8x+7"));
  REQUIRE(th12.status == Irreducibility::Reducible);
  CHECK(th12.witness == IntPoly{1, 1, 1});
  CHECK(irreducibility(parse_poly("x^6+9x^2+9x+8")).status == Irreducibility::Reducible);
  CHECK(irreducibility(parse_poly("x^6+15x^2+8x+128")).status == Irreducibility::Irreducible);
  CHECK(irreducibility(parse_poly("x-3")).status == Irreducibility::Irreducible);

  // every Reducible verdict carries an exact divisor
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<mpz_class> g{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5, 1};
    std::vector<mpz_class> h{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5,
                             static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5, 1};
    IrreducibilityResult r = irreducibility(IntPoly(g) * IntPoly(h));
    REQUIRE(r.status == Irreducibility::Reducible);
    CHECK(divmod(IntPoly(g) * IntPoly(h), *r.witness).second.is_zero());
  }
}

TEST_CASE("shape matching") {
  auto q = match_quadrinomial(parse_poly("x^6+15x^2+8x+128"));
  REQUIRE(q);
  CHECK(q->a == 15);
  CHECK(q->m == 2);
  auto t = match_quadrinomial(parse_poly("x^6+5x+3"));
  REQUIRE(t);
  CHECK(t->m == 1);
  CHECK(t->a == 0);
  CHECK_FALSE(match_quadrinomial(parse_poly("x^6+x^3+x^2+1")).has_value());
  CHECK_FALSE(match_quadrinomial(parse_poly("x^5+1")).has_value());
}

TEST_CASE("family note") {
  CHECK(family_note({105, 56, 896, 2}).has_value());
  CHECK_FALSE(family_note({105, 56, 896, 3}).has_value());
  CHECK_FALSE(family_note({8, 8, 7, 2}).has_value());
}

TEST_CASE("check_th12 invariance mod 72") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 500; ++i) {
    auto draw = [&] { return mpz_class(static_cast<long>(rng() % 400) - 200); };
    QuadrinomialInput q{draw(), draw(), draw(), 2 + static_cast<int>(rng() % 4)};
    if (i % 2 == 0) {
      q.a = 8 * q.a;
      q.b = 8 * q.b;
      q.c = 8 * q.c - 1;
    }
    const long k = static_cast<long>(rng() % 21) - 10;
    QuadrinomialInput shifted{q.a + 72 * k, q.b + 72 * k, q.c + 72 * k, q.m};
    auto x = check_th12(q);
    auto y = check_th12(shifted);
    CHECK(x.applies == y.applies);
    CHECK(x.claimed == y.claimed);
  }
}

TEST_CASE("verdict monotonicity") {
  std::mt19937_64 rng(41);
  int claims = 0;
  for (int i = 0; i < 3000; ++i) {
    const long p = i % 2 ? 3 : 2;
    auto pick = [&](int max_exp) -> mpz_class {
      mpz_class v = 1;
      for (int e = static_cast<int>(rng() % (max_exp + 1)); e > 0; --e) v *= p;
      const long unit = static_cast<long>(rng() % 9) + 1;
      return (rng() & 1) ? mpz_class(v * unit) : mpz_class(-v * unit);
    };
    const int m = 1 + static_cast<int>(rng() % 5);
    const long sign = m % 2 == 0 ? 1 : -1;
    const long shift = rng() % 4 ? sign : 0;
    QuadrinomialInput q{mpz_class(p * p * p * static_cast<long>(rng() % 9) - shift), pick(8), pick(12), m};
    if (rng() % 3 == 0) q.c = mpz_class(p * p * p * static_cast<long>(rng() % 9) - 1);
    for (const auto& v : applicable_checks(q)) {
      CHECK(v.applies == !v.claimed.empty());
      for (const auto& c : v.claimed) {
        ++claims;
        CHECK(c.v >= 1);
        CHECK_MESSAGE(gates_hold(v, q, c.p), to_string(v.id), " ", q.a.get_str(), " ", q.b.get_str(), " ", q.c.get_str(), " m=", q.m, " p=", c.p);
      }
    }
  }
  CHECK(claims > 100);
}
