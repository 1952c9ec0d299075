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

// Splitting of p in Q[x]/(f) from phi-Newton polygons and residual
// polynomials (Ore's theorem, p-regular case).

#ifndef OREINDEX_ORE_HPP
#define OREINDEX_ORE_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oreindex/errors.hpp"
#include "oreindex/fq.hpp"
#include "oreindex/polygon.hpp"
#include "oreindex/zpoly.hpp"

namespace oreindex {

/// (ramification index, residue degree) of one prime above p.
struct Ramification {
  int e = 1;
  int f = 1;

  friend auto operator<=>(const Ramification&, const Ramification&) = default;
};

enum class PrimeSource {
  OreEdge,       // irreducible residual factor of a principal edge
  SimpleFactor,  // phi exactly divides f mod p once, no polygon available
  Inert,         // f irreducible mod p
};

const char* to_string(PrimeSource source);

struct PrimeIdeal {
  int e = 1;
  int f = 1;
  PrimeSource source = PrimeSource::OreEdge;
  IntPoly phi;
  std::optional<Edge> edge;
  std::optional<FqPoly> residual_factor;

  /// Human-readable provenance, e.g. "phi=x+1 edge (4,1)-(6,3) slope 1/1 factor Y^2+Y+1".
  std::string describe() const;
};

struct SplittingType {
  std::vector<PrimeIdeal> primes;

  /// Sorted multiset of (e, f) pairs.
  std::vector<Ramification> signature() const;
  /// Sum of e*f.
  int degree() const;
};

std::vector<Ramification> make_signature(std::vector<Ramification> pairs);
std::string to_string(const std::vector<Ramification>& signature);

struct RegularityWitness {
  IntPoly phi;
  Edge edge;
  FqPoly repeated_factor;
  int multiplicity = 2;
};

struct RegularityReport {
  bool regular = true;
  std::vector<RegularityWitness> witnesses;
};

/// Splitting is undecidable by first-order polygons: some residual
/// polynomial has a repeated factor.
class NotRegular : public Error {
 public:
  NotRegular(const std::string& what, RegularityReport report)
      : Error(what), report_(std::move(report)) {}
  const RegularityReport& report() const { return report_; }

 private:
  RegularityReport report_;
};

struct EdgeResidual {
  Edge edge;
  FqPoly residual;
  FactorList factors;
};

/// Everything computed for one irreducible factor phi of f mod p.
struct PhiComponent {
  IntPoly phi;
  int multiplicity = 1;
  /// phi is not the symmetric lift because that lift divides f over Z.
  bool lift_adjusted = false;
  std::optional<NewtonPolygon> polygon;
  std::vector<EdgeResidual> residuals;
};

struct PrimeAnalysis {
  mpz_class p;
  IntPoly f;
  FactorList modular;
  bool squarefree = false;
  bool inert = false;
  std::vector<PhiComponent> components;
  RegularityReport regularity;
};

/// Full per-prime computation; never throws NotRegular. Each factor mod p
/// is lifted with coefficients in (-p/2, p/2]; when that lift divides f over
/// Z a nearby lift phi + p*h is used instead. Throws ZeroModP, InvalidPrime,
/// DomainError (f not monic) and PhiDividesF when no lift works.
PrimeAnalysis analyze_prime(const IntPoly& f, const mpz_class& p);

/// Throws NotRegular unless analysis.regularity.regular.
SplittingType splitting_from(const PrimeAnalysis& analysis);

SplittingType splitting_type(const IntPoly& f, const mpz_class& p);
RegularityReport is_p_regular(const IntPoly& f, const mpz_class& p);

}  // namespace oreindex

#endif  // OREINDEX_ORE_HPP
