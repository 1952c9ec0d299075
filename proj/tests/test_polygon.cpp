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

#include <numeric>
#include <optional>
#include <random>

#include "oreindex/oracle.hpp"
#include "oreindex/polygon.hpp"

using namespace oreindex;

namespace {

using Points = std::vector<PolygonPoint>;

Points principal_vertices(const NewtonPolygon& poly) {
  Points out;
  for (const auto& e : poly.principal_edges()) {
    if (out.empty()) out.push_back(e.start);
    out.push_back(e.end);
  }
  return out;
}

}  // namespace

TEST_CASE("polygon at x^2+x+1 mod 2") {
  // a=8, b=16, c=23: d_2 = 8x + 16
  NewtonPolygon poly = build_polygon(IntPoly{23, 16, 8, 0, 0, 0, 1}, IntPoly{1, 1, 1}, 2);
  CHECK(poly.points == Points{{0, 0}, {1, 0}, {2, 1}, {3, 3}});
  auto edges = poly.principal_edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].start == PolygonPoint{1, 0});
  CHECK(edges[0].end == PolygonPoint{2, 1});
  CHECK(edges[0].slope_num == 1);
  CHECK(edges[0].slope_den == 1);
  CHECK(edges[1].end == PolygonPoint{3, 3});
  CHECK(edges[1].slope_num == 2);
  for (const auto& e : edges) CHECK(residual_poly(poly, e).degree() == 1);
  CHECK(poly.residue_field->order() == 4);
}

TEST_CASE("phi dividing f over Z is rejected") {
  // x^6+8x^2+8x+7 = (x^2+x+1)(x^4-x^3+x+7)
  CHECK_THROWS_AS(build_polygon(IntPoly{7, 8, 8, 0, 0, 0, 1}, IntPoly{1, 1, 1}, 2), PhiDividesF);
}

TEST_CASE("polygon at x-1 mod 3") {
  NewtonPolygon poly = build_polygon(IntPoly{8, 9, 9, 0, 0, 0, 1}, IntPoly{-1, 1}, 3);
  CHECK(poly.points == Points{{0, 0}, {1, 1}, {2, 1}, {3, 0}, {4, 1}, {5, 1}, {6, 3}});
  auto edges = poly.principal_edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].start == PolygonPoint{3, 0});
  CHECK(edges[0].end == PolygonPoint{5, 1});
  CHECK(edges[0].slope_num == 1);
  CHECK(edges[0].slope_den == 2);
  CHECK(edges[0].degree() == 1);
  CHECK(residual_poly(poly, edges[0]).degree() == 1);
  CHECK(residual_poly(poly, edges[1]).degree() == 1);
  CHECK(poly.principal_length() == 3);
}

TEST_CASE("polygon at x mod 2") {
  const IntPoly f{128, 8, 15, 0, 0, 0, 1};
  NewtonPolygon poly = build_polygon(f, IntPoly{0, 1}, 2);
  CHECK(poly.points == Points{{0, 0}, {4, 0}, {5, 3}, {6, 7}});
  CHECK(principal_vertices(poly) == Points{{4, 0}, {5, 3}, {6, 7}});
  CHECK(poly.vertices() == Points{{0, 0}, {4, 0}, {5, 3}, {6, 7}});
}

TEST_CASE("quadratic residual at x+1") {
  const IntPoly f{128, 8, 15, 0, 0, 0, 1};
  NewtonPolygon poly = build_polygon(f, IntPoly{1, 1}, 2);
  std::optional<Edge> quad;
  for (const auto& e : poly.principal_edges()) {
    if (e.length() == 2 && e.slope_num == 1 && e.slope_den == 1) quad = e;
  }
  REQUIRE(quad);
  FqPoly t = residual_poly(poly, *quad);
  REQUIRE(t.degree() == 2);
  CHECK(t.is_monic());
  // no root in F_2, hence irreducible
  for (std::uint64_t i = 0; i < 2; ++i) {
    CHECK_FALSE(t.field()->is_zero(t.evaluate(t.field()->element(i))));
  }
  CHECK(to_string(t) == "Y^2+Y+1");
}

TEST_CASE("errors") {
  const IntPoly f{128, 8, 15, 0, 0, 0, 1};
  NewtonPolygon poly = build_polygon(f, IntPoly{0, 1}, 2);
  for (const auto& e : poly.edges) {
    if (!e.principal()) CHECK_THROWS_AS(residual_poly(poly, e), DomainError);
  }
  Edge foreign{{0, 0}, {1, 5}, 5, 1};
  CHECK_THROWS_AS(residual_poly(poly, foreign), DomainError);
  CHECK_THROWS_AS(build_polygon(f, IntPoly{1, 1, 1}, 2), DomainError);  // not a factor mod 2
  CHECK_THROWS_AS(build_polygon(f, IntPoly{1, 0, 1}, 2), ReducibleModulus);
  CHECK_THROWS_AS(build_polygon(IntPoly{1, 2}, IntPoly{0, 1}, 2), DomainError);
  CHECK_THROWS_AS(build_polygon(f, IntPoly{0, 1}, 4), InvalidPrime);
  CHECK_THROWS_AS(lower_hull({{1, 0}, {1, 2}}), DomainError);
}

TEST_CASE("hull against brute force") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    Points pts;
    for (std::int64_t x = 0; x <= 8; ++x) {
      if (x == 0 || rng() % 3 != 0) pts.push_back({x, static_cast<std::int64_t>(rng() % 7)});
    }
    auto edges = lower_hull(pts);
    Points verts;
    for (const auto& e : edges) {
      if (verts.empty()) verts.push_back(e.start);
      verts.push_back(e.end);
      CHECK(e.slope_num * e.length() == e.height() * e.slope_den);
      CHECK(std::gcd(e.slope_num, e.slope_den) == 1);
      CHECK(e.length() % e.slope_den == 0);
    }
    for (std::size_t k = 1; k < edges.size(); ++k) {
      CHECK(edges[k - 1].slope_num * edges[k].slope_den < edges[k].slope_num * edges[k - 1].slope_den);
    }
    if (pts.size() == 1) {
      CHECK(edges.empty());
      continue;
    }
    CHECK(verts == oracle::lower_hull_vertices(pts));
  }
}

TEST_CASE("principal length equals multiplicity") {
  std::mt19937_64 rng(9);
  int polygons = 0;
  for (int i = 0; i < 600; ++i) {
    std::vector<mpz_class> c;
    const long p = (i % 2) ? 3 : 2;
    for (int k = 0; k < 6; ++k) c.push_back(static_cast<long>(rng() % 41) - 20);
    c.push_back(1);
    IntPoly f(c);
    for (const auto& fac : factor_mod_p(f, p).factors) {
      IntPoly phi = fac.poly.lift_symmetric();
      if (phi_expand(f, phi).digits.front().is_zero()) continue;
      NewtonPolygon poly = build_polygon(f, phi, p);
      ++polygons;
      CHECK(poly.principal_length() == fac.multiplicity);
      for (const auto& e : poly.principal_edges()) {
        FqPoly t = residual_poly(poly, e);
        CHECK(t.degree() == e.length() / e.slope_den);
        CHECK(t.is_monic());
        CHECK_FALSE(t.field()->is_zero(t.coeffs().front()));
      }
    }
  }
  CHECK(polygons > 500);
}
