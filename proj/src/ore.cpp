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

#include "oreindex/ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oreindex {

const char* to_string(PrimeSource source) {
  switch (source) {
    case PrimeSource::OreEdge: return "ore-edge";
    case PrimeSource::SimpleFactor: return "simple-factor";
    case PrimeSource::Inert: return "inert";
  }
  return "?";
}

std::string PrimeIdeal::describe() const {
  std::ostringstream os;
  os << "phi=" << to_string(phi);
  if (source == PrimeSource::Inert) {
    os << " inert, Dedekind";
  } else if (source == PrimeSource::SimpleFactor) {
    os << " simple factor (Dedekind)";
  }
  if (edge) {
    os << " edge (" << edge->start.abscissa << "," << edge->start.ordinate << ")-("
       << edge->end.abscissa << "," << edge->end.ordinate << ") slope " << edge->slope_num << "/"
       << edge->slope_den;
  }
  if (residual_factor) os << " factor " << to_string(*residual_factor);
  os << " -> e=" << e << " f=" << f;
  return os.str();
}

std::vector<Ramification> make_signature(std::vector<Ramification> pairs) {
  std::sort(pairs.begin(), pairs.end(), std::greater<>());
  return pairs;
}

std::vector<Ramification> SplittingType::signature() const {
  std::vector<Ramification> out;
  out.reserve(primes.size());
  for (const auto& p : primes) out.push_back({p.e, p.f});
  return make_signature(std::move(out));
}

int SplittingType::degree() const {
  int total = 0;
  for (const auto& p : primes) total += p.e * p.f;
  return total;
}

std::string to_string(const std::vector<Ramification>& signature) {
  std::string out;
  for (const auto& r : signature) out += "(" + std::to_string(r.e) + "," + std::to_string(r.f) + ")";
  return out;
}

namespace {

// The symmetric lift unless it divides f over Z, then phi + p*h for small h.
// Any monic lift of the factor mod p is admissible for the polygon method.
std::optional<IntPoly> lift_avoiding_divisor(const IntPoly& f, const IntPoly& phi, const mpz_class& p) {
  auto divides = [&](const IntPoly& g) { return divmod(f, g).second.is_zero(); };
  if (!divides(phi)) return phi;
  const int d = phi.degree();
  // h ranges over polynomials of degree < d with coefficients in {-1, 0, 1}.
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 1; code < total; ++code) {
    std::vector<mpz_class> h(static_cast<std::size_t>(d));
    int rest = code;
    for (int i = 0; i < d; ++i) {
      const int digit = rest % 3;
      rest /= 3;
      h[static_cast<std::size_t>(i)] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
    }
    IntPoly candidate = phi + IntPoly(std::move(h)) * p;
    if (!divides(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

PrimeAnalysis analyze_prime(const IntPoly& f, const mpz_class& p) {
  require_prime(p);
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError("splitting requires a monic polynomial of degree >= 1, got " + to_string(f));
  }
  PrimeAnalysis out;
  out.p = p;
  out.f = f;
  out.modular = factor_mod_p(f, p);
  out.squarefree = std::all_of(out.modular.factors.begin(), out.modular.factors.end(),
                               [](const Factor& fac) { return fac.multiplicity == 1; });
  out.inert = out.modular.factors.size() == 1 && out.modular.factors.front().multiplicity == 1;

  for (const auto& fac : out.modular.factors) {
    PhiComponent comp;
    comp.phi = fac.poly.lift_symmetric();
    comp.multiplicity = fac.multiplicity;
    if (out.inert) {
      out.components.push_back(std::move(comp));
      continue;
    }
    if (auto lift = lift_avoiding_divisor(f, comp.phi, p)) {
      comp.lift_adjusted = !(*lift == comp.phi);
      comp.phi = *lift;
      comp.polygon = build_polygon(f, comp.phi, p);
    } else if (fac.multiplicity > 1) {
      throw PhiDividesF("no lift of " + to_string(comp.phi) + " avoids a factor of " + to_string(f));
    }
    if (comp.polygon) {
      for (const auto& edge : comp.polygon->principal_edges()) {
        FqPoly residual = residual_poly(*comp.polygon, edge);
        FactorList factors = factor_over_fq(residual);
        for (const auto& u : factors.factors) {
          if (u.multiplicity > 1) {
            out.regularity.regular = false;
            out.regularity.witnesses.push_back({comp.phi, edge, u.poly, u.multiplicity});
          }
        }
        comp.residuals.push_back({edge, std::move(residual), std::move(factors)});
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SplittingType splitting_from(const PrimeAnalysis& analysis) {
  if (!analysis.regularity.regular) {
    std::ostringstream os;
    os << to_string(analysis.f) << " is not " << analysis.p.get_str() << "-regular:";
    for (const auto& w : analysis.regularity.witnesses) {
      os << " phi=" << to_string(w.phi) << " slope " << w.edge.slope_num << "/" << w.edge.slope_den
         << " repeated factor (" << to_string(w.repeated_factor) << ")^" << w.multiplicity << ";";
    }
    throw NotRegular(os.str(), analysis.regularity);
  }
  SplittingType st;
  for (const auto& comp : analysis.components) {
    if (analysis.inert) {
      st.primes.push_back({1, analysis.f.degree(), PrimeSource::Inert, comp.phi, {}, {}});
      continue;
    }
    if (!comp.polygon) {
      st.primes.push_back({1, comp.phi.degree(), PrimeSource::SimpleFactor, comp.phi, {}, {}});
      continue;
    }
    for (const auto& er : comp.residuals) {
      for (const auto& u : er.factors.factors) {
        st.primes.push_back({static_cast<int>(er.edge.slope_den), comp.phi.degree() * u.poly.degree(),
                             PrimeSource::OreEdge, comp.phi, er.edge, u.poly});
      }
    }
  }
  if (st.degree() != analysis.f.degree()) {
    throw std::logic_error("fundamental identity violated for " + to_string(analysis.f) + " at p=" +
                           analysis.p.get_str() + ": sum e*f = " + std::to_string(st.degree()));
  }
  return st;
}

SplittingType splitting_type(const IntPoly& f, const mpz_class& p) {
  return splitting_from(analyze_prime(f, p));
}

RegularityReport is_p_regular(const IntPoly& f, const mpz_class& p) {
  return analyze_prime(f, p).regularity;
}

}  // namespace oreindex
