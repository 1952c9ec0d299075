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

#include "oreindex/zpoly.hpp"

using namespace oreindex;

namespace {

mpz_class big(std::mt19937_64& rng, int bits) {
  mpz_class v = 0;
  for (int i = 0; i < bits; i += 32) {
    v <<= 32;
    v += static_cast<unsigned long>(rng() & 0xffffffffu);
  }
  if (rng() & 1) v = -v;
  return v;
}

IntPoly random_poly(std::mt19937_64& rng, int degree, int bits, bool monic) {
  std::vector<mpz_class> c;
  for (int i = 0; i < degree; ++i) c.push_back(big(rng, bits));
  c.push_back(monic ? mpz_class(1) : big(rng, bits) + 1);
  return IntPoly(c);
}

}  // namespace

TEST_CASE("canonical form") {
  IntPoly f(std::vector<mpz_class>{1, 2, 0, 0});
  CHECK(f.degree() == 1);
  CHECK(f.coeffs().size() == 2);
  CHECK(IntPoly(std::vector<mpz_class>{0, 0}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK((f - f).is_zero());
  CHECK(to_string(IntPoly()) == "0");
}

TEST_CASE("vp_int") {
  CHECK(vp_int(8, 2) == Valuation(3));
  CHECK(vp_int(0, 5).is_infinite());
  CHECK(vp_int(896, 2) == Valuation(7));
  CHECK(vp_int(-81, 3) == Valuation(4));
  CHECK(vp_int(7, 2) == Valuation(0));
  CHECK_THROWS_AS(vp_int(8, 4), InvalidPrime);
  CHECK_THROWS_AS(vp_int(8, 1), InvalidPrime);
  CHECK_THROWS_AS(vp_int(8, -2), InvalidPrime);
}

TEST_CASE("valuation ordering") {
  CHECK(Valuation(3) < Valuation::infinite());
  CHECK(Valuation(2) + Valuation(5) == Valuation(7));
  CHECK((Valuation(2) + Valuation::infinite()).is_infinite());
  CHECK(Valuation::infinite().to_string() == "inf");
  CHECK_THROWS_AS(Valuation::infinite().value(), DomainError);
}

TEST_CASE("gauss_valuation") {
  CHECK(gauss_valuation(IntPoly{6, 2}, 2) == Valuation(1));
  CHECK(gauss_valuation(IntPoly{1}, 3) == Valuation(0));
  CHECK(gauss_valuation(IntPoly(), 2).is_infinite());
  // d_2 = (b-a)x + 1 + c - a
  CHECK(gauss_valuation(IntPoly{1 + 7 - 8, 8 - 8}, 2).is_infinite());
  CHECK(gauss_valuation(IntPoly{1 + 23 - 8, 16 - 8}, 2) == Valuation(3));
  CHECK_THROWS_AS(gauss_valuation(IntPoly{2}, 6), InvalidPrime);
}

TEST_CASE("divmod") {
  auto [q, r] = divmod(IntPoly{1, 0, 1}, IntPoly{0, 1});
  CHECK(q == IntPoly{0, 1});
  CHECK(r == IntPoly{1});
  const IntPoly phi{1, 1, 1};
  auto [q2, r2] = divmod(phi, phi);
  CHECK(q2 == IntPoly{1});
  CHECK(r2.is_zero());
  CHECK_THROWS_AS(divmod(IntPoly{1, 1}, IntPoly{1, 2}), DomainError);
  CHECK_THROWS_AS(divmod(IntPoly{1, 1}, IntPoly()), DomainError);
}

TEST_CASE("phi_expand quadrinomial at x^2+x+1") {
  for (long a : {8L, -3L, 100L}) {
    for (long b : {8L, 16L, -5L}) {
      for (long c : {7L, 23L, 0L}) {
        IntPoly f{c, b, a, 0, 0, 0, 1};
        PhiExpansion e = phi_expand(f, IntPoly{1, 1, 1});
        REQUIRE(e.digits.size() == 4);
        CHECK(e.digits[0] == IntPoly{1 + c - a, b - a});
        CHECK(e.digits[1] == IntPoly{a - 2, 2});
        CHECK(e.digits[2] == IntPoly{0, -3});
        CHECK(e.digits[3] == IntPoly{1});
        CHECK(e.reconstruct() == f);
      }
    }
  }
}

TEST_CASE("phi_expand edge cases") {
  const IntPoly phi{1, 1, 1};
  PhiExpansion e = phi_expand(phi, phi);
  REQUIRE(e.digits.size() == 2);
  CHECK(e.digits[0].is_zero());
  CHECK(e.digits[1] == IntPoly{1});

  // constant digit at x+1 is a(-1)^m - b + 1 + c
  IntPoly f{5, 3, 0, 2, 0, 0, 1};
  CHECK(phi_expand(f, IntPoly{1, 1}).digits[0] == IntPoly{2 * -1 - 3 + 1 + 5});

  CHECK_THROWS_AS(phi_expand(IntPoly{1, 1}, IntPoly{1, 1, 1}), DomainError);
  CHECK_THROWS_AS(phi_expand(f, IntPoly{1, 2}), DomainError);
  CHECK_THROWS_AS(phi_expand(f, IntPoly{3}), DomainError);
}

TEST_CASE("reconstruction property") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int d = 1 + static_cast<int>(rng() % n);
    IntPoly f = random_poly(rng, n, 64, false);
    IntPoly phi = random_poly(rng, d, 64, true);
    PhiExpansion e = phi_expand(f, phi);
    REQUIRE(e.reconstruct() == f);
    CHECK(!e.digits.back().is_zero());
    for (const auto& digit : e.digits) CHECK(digit.degree() < phi.degree());
  }
}

TEST_CASE("gauss lemma") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const long p = std::array{2L, 3L, 5L, 7L}[rng() % 4];
    mpz_class pk = 1;
    for (int k = 0, e = static_cast<int>(rng() % 4); k < e; ++k) pk *= p;
    IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 32, false) * pk;
    IntPoly h = random_poly(rng, 1 + static_cast<int>(rng() % 5), 32, false);
    CHECK(gauss_valuation(g * h, p) == gauss_valuation(g, p) + gauss_valuation(h, p));
  }
}

TEST_CASE("divmod property") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    IntPoly f = random_poly(rng, static_cast<int>(rng() % 10), 64, false);
    IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 64, true);
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("parse_poly") {
  CHECK(parse_poly("x^6+15x^2+8x+128") == IntPoly{128, 8, 15, 0, 0, 0, 1});
  CHECK(parse_poly(" x ^ 6 - 3*x**2 + x - 7 ") == IntPoly{-7, 1, -3, 0, 0, 0, 1});
  CHECK(parse_poly("-x") == IntPoly{0, -1});
  CHECK(parse_poly("x^2 + x^2 - 2x^2 + 5") == IntPoly{5});
  CHECK(parse_poly("123456789012345678901234567890x+1").coeff(1) ==
        mpz_class("123456789012345678901234567890"));
  CHECK(to_string(parse_poly("x^6-x+1")) == "x^6-x+1");
  CHECK_THROWS_AS(parse_poly("x^6+2.5x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^6+y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^6+$"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x+/3"), ParseError);
}

TEST_CASE("to_string round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = random_poly(rng, static_cast<int>(rng() % 8), 40, rng() & 1);
    CHECK(parse_poly(to_string(f)) == f);
  }
}

TEST_CASE("primality") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(mpz_class("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_probable_prime(1));
  CHECK_FALSE(is_probable_prime(91));
  CHECK_NOTHROW(require_prime(3));
  CHECK_THROWS_AS(require_prime(9), InvalidPrime);
}
