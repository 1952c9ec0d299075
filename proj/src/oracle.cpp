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

#include "oreindex/oracle.hpp"

#include <algorithm>

namespace oreindex::oracle {

std::vector<FqPoly> monic_polynomials(const FieldPtr& field, int degree) {
  const std::uint64_t q = field->order().get_ui();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= q;
  std::vector<FqPoly> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<FqElem> c(static_cast<std::size_t>(degree) + 1);
    std::uint64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = field->element(rest % q);
      rest /= q;
    }
    c[static_cast<std::size_t>(degree)] = field->one();
    out.emplace_back(field, std::move(c));
  }
  return out;
}

FactorList factor_by_trial_division(const FqPoly& t) {
  FactorList out{t.leading(), {}};
  FqPoly rest = t.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& candidate : monic_polynomials(t.field(), d)) {
      int mult = 0;
      while (rest.degree() >= d) {
        auto [q, r] = divmod(rest, candidate);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.factors.push_back({candidate, mult});
    }
  }
  if (rest.degree() > 0) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const Factor& f) { return f.poly == rest; });
    if (it != out.factors.end()) {
      ++it->multiplicity;
    } else {
      out.factors.push_back({rest, 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible_exhaustive(const FqPoly& t) {
  if (t.degree() < 1) return false;
  for (int d = 1; 2 * d <= t.degree(); ++d)
    for (const auto& candidate : monic_polynomials(t.field(), d))
      if (divmod(t, candidate).second.is_zero()) return false;
  return true;
}

std::vector<PolygonPoint> lower_hull_vertices(const std::vector<PolygonPoint>& points) {
  std::vector<PolygonPoint> out;
  for (const auto& pt : points) {
    bool dominated = false;
    for (const auto& a : points) {
      for (const auto& b : points) {
        if (!(a.abscissa < pt.abscissa && pt.abscissa < b.abscissa)) continue;
        // pt on or above segment ab  <=>  (pt.y - a.y)(b.x - a.x) >= (b.y - a.y)(pt.x - a.x)
        if ((pt.ordinate - a.ordinate) * (b.abscissa - a.abscissa) >=
            (b.ordinate - a.ordinate) * (pt.abscissa - a.abscissa)) {
          dominated = true;
        }
      }
    }
    if (!dominated) out.push_back(pt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oreindex::oracle
