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

#include "oreindex/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace oreindex {

namespace {

std::int64_t cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  return (a.abscissa - o.abscissa) * (b.ordinate - o.ordinate) -
         (a.ordinate - o.ordinate) * (b.abscissa - o.abscissa);
}

}  // namespace

std::vector<Edge> lower_hull(std::vector<PolygonPoint> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].abscissa == points[i - 1].abscissa) {
      throw DomainError("lower_hull expects distinct abscissas");
    }
  }
  std::vector<PolygonPoint> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Edge e{hull[i - 1], hull[i], 0, 1};
    const std::int64_t dx = e.length();
    const std::int64_t dy = e.height();
    const std::int64_t g = std::gcd(dx, dy);
    e.slope_num = dy / g;
    e.slope_den = dx / g;
    edges.push_back(e);
  }
  return edges;
}

std::vector<Edge> NewtonPolygon::principal_edges() const {
  std::vector<Edge> out;
  std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
               [](const Edge& e) { return e.principal(); });
  return out;
}

std::vector<PolygonPoint> NewtonPolygon::vertices() const {
  std::vector<PolygonPoint> out;
  if (edges.empty()) {
    if (!points.empty()) out.push_back(points.front());
    return out;
  }
  out.push_back(edges.front().start);
  for (const auto& e : edges) out.push_back(e.end);
  return out;
}

std::int64_t NewtonPolygon::principal_length() const {
  std::int64_t total = 0;
  for (const auto& e : edges)
    if (e.principal()) total += e.length();
  return total;
}

NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, const mpz_class& p) {
  if (!f.is_monic()) throw DomainError("polygon input " + to_string(f) + " is not monic");
  if (!phi.is_monic() || phi.degree() < 1) {
    throw DomainError("phi = " + to_string(phi) + " must be monic of degree >= 1");
  }
  if (phi.degree() > f.degree()) throw DomainError("deg phi exceeds deg f");
  NewtonPolygon poly{phi, p, fq_make(p, phi), phi_expand(f, phi), {}, {}};
  const auto& digits = poly.expansion.digits;
  if (digits.front().is_zero()) {
    throw PhiDividesF(to_string(phi) + " divides " + to_string(f) + " over Z");
  }
  if (gauss_valuation(digits.front(), p) == Valuation(0)) {
    throw DomainError(to_string(phi) + " does not divide " + to_string(f) + " mod " + p.get_str());
  }
  const auto n = static_cast<std::int64_t>(poly.expansion.length());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i].is_zero()) continue;
    poly.points.push_back({n - static_cast<std::int64_t>(i), gauss_valuation(digits[i], p).value()});
  }
  std::sort(poly.points.begin(), poly.points.end());
  poly.edges = lower_hull(poly.points);
  return poly;
}

FqPoly residual_poly(const NewtonPolygon& polygon, const Edge& edge) {
  if (!edge.principal()) throw DomainError("residual polynomial requested for a non-principal edge");
  if (std::find(polygon.edges.begin(), polygon.edges.end(), edge) == polygon.edges.end()) {
    throw DomainError("edge does not belong to this polygon");
  }
  const auto& field = polygon.residue_field;
  const auto n = static_cast<std::int64_t>(polygon.expansion.length());
  const std::int64_t t = edge.degree();
  std::vector<FqElem> coeffs(static_cast<std::size_t>(t + 1), field->zero());
  for (std::int64_t j = 0; j <= t; ++j) {
    const std::int64_t x = edge.start.abscissa + edge.slope_den * j;
    const std::int64_t on_line = edge.start.ordinate + edge.slope_num * j;
    const IntPoly& digit = polygon.expansion.digits[static_cast<std::size_t>(n - x)];
    if (digit.is_zero() || gauss_valuation(digit, polygon.p) != Valuation(on_line)) continue;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), polygon.p.get_mpz_t(), static_cast<unsigned long>(on_line));
    std::vector<mpz_class> scaled;
    for (const auto& c : digit.coeffs()) scaled.push_back(c / scale);
    coeffs[static_cast<std::size_t>(t - j)] = field->from_poly(IntPoly(std::move(scaled)));
  }
  return FqPoly(field, std::move(coeffs)).monic();
}

}  // namespace oreindex
