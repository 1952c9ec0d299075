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

// Brute-force reference routines. Deliberately naive and independent of the
// fast paths they are used to check; only suitable for tiny inputs.

#ifndef OREINDEX_ORACLE_HPP
#define OREINDEX_ORACLE_HPP

#include <vector>

#include "oreindex/fq.hpp"
#include "oreindex/polygon.hpp"

namespace oreindex::oracle {

/// Every monic polynomial of the given degree over the field, in index order.
std::vector<FqPoly> monic_polynomials(const FieldPtr& field, int degree);

/// Factorization by trial division with every monic polynomial of degree
/// up to deg/2, smallest degree first.
FactorList factor_by_trial_division(const FqPoly& t);

bool is_irreducible_exhaustive(const FqPoly& t);

/// Vertices of the lower hull: a point is kept iff no segment between two
/// other points passes on or below it.
std::vector<PolygonPoint> lower_hull_vertices(const std::vector<PolygonPoint>& points);

}  // namespace oreindex::oracle

#endif  // OREINDEX_ORACLE_HPP
