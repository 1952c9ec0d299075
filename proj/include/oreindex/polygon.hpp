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

// phi-Newton polygons and the residual polynomials attached to their edges.
//
// The digit a_i(x) of the phi-expansion sits at abscissa n - i, so the
// leading digit is at x = 0 and the constant digit at x = n. Principal edges
// (positive slope) occupy the right end of the polygon and have total length
// equal to the multiplicity of phi mod p in f mod p.

#ifndef OREINDEX_POLYGON_HPP
#define OREINDEX_POLYGON_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <vector>

#include "oreindex/fq.hpp"
#include "oreindex/zpoly.hpp"

namespace oreindex {

struct PolygonPoint {
  std::int64_t abscissa = 0;
  std::int64_t ordinate = 0;

  friend auto operator<=>(const PolygonPoint&, const PolygonPoint&) = default;
};

/// Maximal segment of the lower hull. slope = slope_num / slope_den in
/// lowest terms, slope_den > 0.
struct Edge {
  PolygonPoint start;
  PolygonPoint end;
  std::int64_t slope_num = 0;
  std::int64_t slope_den = 1;

  std::int64_t length() const { return end.abscissa - start.abscissa; }
  std::int64_t height() const { return end.ordinate - start.ordinate; }
  /// Degree of the residual polynomial, length / slope_den.
  std::int64_t degree() const { return length() / slope_den; }
  bool principal() const { return slope_num > 0; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Lower convex hull of points with distinct abscissas, collinear vertices
/// merged. Slopes of the returned edges are strictly increasing.
std::vector<Edge> lower_hull(std::vector<PolygonPoint> points);

struct NewtonPolygon {
  IntPoly phi;
  mpz_class p;
  /// F_p[x]/(phi), the field of residual coefficients.
  FieldPtr residue_field;
  PhiExpansion expansion;
  /// Finite points only; zero digits are omitted.
  std::vector<PolygonPoint> points;
  std::vector<Edge> edges;

  std::vector<Edge> principal_edges() const;
  std::vector<PolygonPoint> vertices() const;
  /// Sum of principal edge lengths.
  std::int64_t principal_length() const;
};

/// Requires f and phi monic, phi irreducible mod p, phi | f mod p and
/// phi not dividing f in Z[x]. Throws DomainError / ReducibleModulus /
/// PhiDividesF accordingly.
NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, const mpz_class& p);

/// Residual polynomial of a principal edge, monic of degree edge.degree()
/// over polygon.residue_field. The coefficient of Y^k comes from the digit
/// whose point lies k*slope_den steps left of the right endpoint; points
/// strictly above the edge contribute zero.
FqPoly residual_poly(const NewtonPolygon& polygon, const Edge& edge);

}  // namespace oreindex

#endif  // OREINDEX_POLYGON_HPP
