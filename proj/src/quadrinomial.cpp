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

#include "oreindex/quadrinomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

#include "oreindex/fq.hpp"

namespace oreindex {

namespace {

bool divisible(const mpz_class& n, unsigned long k) {
  return mpz_divisible_ui_p(n.get_mpz_t(), k) != 0;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_m(int m, int lo, int hi) {
  if (m < lo || m > hi) {
    throw DomainError("m = " + std::to_string(m) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(hi));
  }
}

// Gate shared by th1.2 and cor1.1: k | a, b, c+1.
void th12_gates(const mpz_class& a, const mpz_class& b, const mpz_class& c, TheoremVerdict& v) {
  for (auto [k, p, claim] : {std::tuple{8UL, 2, 2}, std::tuple{9UL, 3, 1}}) {
    const bool da = divisible(a, k), db = divisible(b, k), dc = divisible(c + 1, k);
    if (da && db && dc) {
      v.claimed.push_back({p, claim});
      continue;
    }
    const std::string ks = std::to_string(k);
    if (!da) v.failed_conditions.push_back(ks + " | a");
    if (!db) v.failed_conditions.push_back(ks + " | b");
    if (!dc) v.failed_conditions.push_back(ks + " | c+1");
  }
  v.applies = !v.claimed.empty();
  if (v.applies) v.failed_conditions.clear();
}

struct PrimeGate {
  unsigned long modulus;
  int p;
};

// Gates common to th1.3 / th1.4 / cor1.5 at one prime. Returns the failed
// condition names (empty when all hold).
std::vector<std::string> divisibility_gates(const QuadrinomialInput& q, PrimeGate g) {
  std::vector<std::string> failed;
  const mpz_class shifted = q.a + sign_pow(q.m);
  const std::string ks = std::to_string(g.modulus);
  if (!divisible(shifted, g.modulus)) failed.push_back(ks + " | a+(-1)^m");
  if (!divisible(q.b, g.modulus)) failed.push_back(ks + " | b");
  if (!divisible(q.c, g.modulus)) failed.push_back(ks + " | c");
  const mpz_class p(g.p);
  const Valuation vb = vp_int(q.b, p);
  const Valuation vc = vp_int(q.c, p);
  const bool slope_ok = vb.is_finite() && (vc.is_infinite() || q.m * vb.value() < (q.m - 1) * vc.value());
  if (!slope_ok) failed.push_back("m*v" + std::to_string(g.p) + "(b) < (m-1)*v" + std::to_string(g.p) + "(c)");
  return failed;
}

std::vector<unsigned long> small_primes(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

long double to_long_double(const mpz_class& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

using Complex = std::complex<long double>;

// Durand-Kerner iteration on a monic polynomial.
std::vector<Complex> approximate_roots(const IntPoly& f) {
  const int n = f.degree();
  std::vector<long double> a;
  for (const auto& c : f.coeffs()) a.push_back(to_long_double(c));
  long double radius = 0;
  for (int k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::fabs(a[static_cast<std::size_t>(n - k)]), 1.0L / k));
  }
  radius = 2 * radius + 1;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const long double tau = 6.283185307179586476925286766559L;
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, tau * k / n + 0.4L);
  auto eval = [&](Complex x) {
    Complex acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + a[static_cast<std::size_t>(i)];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) == 0) denom = 1e-30L;
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

std::optional<IntPoly> numeric_factor_search(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2 || n > 16) return std::nullopt;
  const auto roots = approximate_roots(f);
  std::optional<IntPoly> best;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    if (2 * k > n) continue;
    if (best && best->degree() <= k) continue;
    std::vector<Complex> prod{1};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1U << i))) continue;
      std::vector<Complex> next(prod.size() + 1, 0);
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] += prod[j];
        next[j] -= prod[j] * roots[static_cast<std::size_t>(i)];
      }
      prod = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    bool representable = true;
    for (const auto& c : prod) {
      const long double r = std::roundl(c.real());
      if (std::fabs(r) > 9.0e18L) {
        representable = false;
        break;
      }
      coeffs.emplace_back(static_cast<long>(r));
    }
    if (!representable) continue;
    IntPoly candidate(std::move(coeffs));
    if (candidate.degree() != k || !candidate.is_monic()) continue;
    if (divmod(f, candidate).second.is_zero()) best = candidate;
  }
  return best;
}

}  // namespace

IntPoly QuadrinomialInput::polynomial() const {
  require_m(m, 1, 5);
  std::vector<mpz_class> c(7);
  c[6] = 1;
  c[static_cast<std::size_t>(m)] += a;
  c[1] += b;
  c[0] += this->c;
  return IntPoly(std::move(c));
}

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Th12: return "th1.2";
    case TheoremId::Th13: return "th1.3";
    case TheoremId::Th13i: return "th1.3(i)";
    case TheoremId::Th13ii: return "th1.3(ii)";
    case TheoremId::Th13iii: return "th1.3(iii)";
    case TheoremId::Th13iv: return "th1.3(iv)";
    case TheoremId::Th14: return "th1.4";
    case TheoremId::Th14i: return "th1.4(i)";
    case TheoremId::Th14ii: return "th1.4(ii)";
    case TheoremId::Th14iii: return "th1.4(iii)";
    case TheoremId::Cor11: return "cor1.1";
    case TheoremId::Cor15: return "cor1.5";
  }
  return "?";
}

std::optional<int> TheoremVerdict::claim_for(int p) const {
  for (const auto& c : claimed)
    if (c.p == p) return c.v;
  return std::nullopt;
}

TheoremVerdict check_th12(const QuadrinomialInput& q) {
  require_m(q.m, 2, 5);
  TheoremVerdict v{TheoremId::Th12, false, {}, {}};
  th12_gates(q.a, q.b, q.c, v);
  return v;
}

TheoremVerdict check_cor11(const mpz_class& a, const mpz_class& b, int m) {
  require_m(m, 1, 5);
  TheoremVerdict v{TheoremId::Cor11, false, {}, {}};
  // x^6 + a x^m + b is the quadrinomial with linear coefficient 0.
  th12_gates(a, 0, b, v);
  return v;
}

TheoremVerdict check_th13(const QuadrinomialInput& q) {
  require_m(q.m, 2, 4);
  if (q.b == 0 || q.c == 0) throw DomainError("th1.3 needs b and c nonzero");
  TheoremVerdict v{TheoremId::Th13, false, {}, divisibility_gates(q, {8, 2})};
  if (!v.failed_conditions.empty()) return v;
  const mpz_class two(2);
  const std::int64_t vb = vp_int(q.b, two).value();
  switch (q.m) {
    case 2: {
      const Valuation w = vp_int(q.a + 1 - q.b + q.c, two);
      if (w > Valuation(3)) {
        v = {TheoremId::Th13i, true, {{2, 4}}, {}};
      } else if (w == Valuation(3)) {
        v = {TheoremId::Th13ii, true, {{2, 1}}, {}};
      } else {
        v.failed_conditions.push_back("v2(a+1-b+c) >= 3");
      }
      break;
    }
    case 3:
      if (vb % 2 == 1) {
        v = {TheoremId::Th13iii, true, {{2, 1}}, {}};
      } else {
        v.failed_conditions.push_back("v2(b) odd");
      }
      break;
    default:
      if (vb % 3 != 0) {
        v = {TheoremId::Th13iv, true, {{2, 2}}, {}};
      } else {
        v.failed_conditions.push_back("3 does not divide v2(b)");
      }
      break;
  }
  return v;
}

TheoremVerdict check_th14(const QuadrinomialInput& q) {
  require_m(q.m, 2, 4);
  if (q.b == 0 || q.c == 0) throw DomainError("th1.4 needs b and c nonzero");
  TheoremVerdict v{TheoremId::Th14, false, {}, divisibility_gates(q, {9, 3})};
  if (!v.failed_conditions.empty()) return v;
  const std::int64_t vb = vp_int(q.b, mpz_class(3)).value();
  switch (q.m) {
    case 2:
      v = {TheoremId::Th14i, true, {{3, 1}}, {}};
      break;
    case 3:
      if (vb % 2 == 1) {
        v = {TheoremId::Th14ii, true, {{3, 1}}, {}};
      } else {
        v.failed_conditions.push_back("v3(b) odd");
      }
      break;
    default:
      if (vb % 3 != 0) {
        v = {TheoremId::Th14iii, true, {{3, 1}}, {}};
      } else {
        v.failed_conditions.push_back("3 does not divide v3(b)");
      }
      break;
  }
  return v;
}

TheoremVerdict check_cor15(const QuadrinomialInput& q) {
  require_m(q.m, 3, 4);
  TheoremVerdict v{TheoremId::Cor15, false, {}, {}};
  for (PrimeGate g : {PrimeGate{8, 2}, PrimeGate{9, 3}}) {
    const std::string tag = "p=" + std::to_string(g.p) + ": ";
    if (q.b == 0 || q.c == 0) {
      v.failed_conditions.push_back(tag + "b, c nonzero");
      continue;
    }
    auto failed = divisibility_gates(q, g);
    const std::int64_t vb = vp_int(q.b, mpz_class(g.p)).value();
    if (std::gcd(vb, std::int64_t{6}) != 1) failed.push_back("gcd(v" + std::to_string(g.p) + "(b), 6) = 1");
    if (failed.empty()) {
      v.claimed.push_back({g.p, g.p == 2 ? (q.m == 3 ? 1 : 2) : 1});
    } else {
      for (auto& f : failed) v.failed_conditions.push_back(tag + f);
    }
  }
  v.applies = !v.claimed.empty();
  if (v.applies) v.failed_conditions.clear();
  return v;
}

PhiExpansion expansion_31(const QuadrinomialInput& q) {
  require_m(q.m, 1, 5);
  PhiExpansion out{IntPoly{1, 1}, {}};
  out.digits.push_back(IntPoly::constant(q.a * sign_pow(q.m) - q.b + 1 + q.c));
  for (int i = 1; i <= 6; ++i) {
    mpz_class d = sign_pow(i) * binomial(6, static_cast<unsigned long>(i)) +
                  q.a * sign_pow(q.m - i) * binomial(static_cast<unsigned long>(q.m), static_cast<unsigned long>(i));
    if (i == 1) d += q.b;
    out.digits.push_back(IntPoly::constant(d));
  }
  return out;
}

PhiExpansion expansion_32(const QuadrinomialInput& q) {
  require_m(q.m, 1, 5);
  PhiExpansion out{IntPoly{-1, 1}, {}};
  out.digits.push_back(IntPoly::constant(q.a + q.b + q.c + 1));
  for (int i = 1; i <= 6; ++i) {
    mpz_class d = binomial(6, static_cast<unsigned long>(i)) +
                  q.a * binomial(static_cast<unsigned long>(q.m), static_cast<unsigned long>(i));
    if (i == 1) d += q.b;
    out.digits.push_back(IntPoly::constant(d));
  }
  return out;
}

DmValues compute_dm(const QuadrinomialInput& q) {
  require_m(q.m, 2, 5);
  DmValues out;
  // x^3 = 1 and x^2 = -x-1 modulo x^2+x+1.
  switch (q.m) {
    case 2:
    case 5:
      out.d_m = IntPoly(std::vector<mpz_class>{1 + q.c - q.a, q.b - q.a});
      break;
    case 3:
      out.d_m = IntPoly(std::vector<mpz_class>{1 + q.c + q.a, q.b});
      break;
    default:
      out.d_m = IntPoly(std::vector<mpz_class>{1 + q.c, q.b + q.a});
      break;
  }
  out.d_j2 = q.a * sign_pow(q.m) - q.b + q.c + 1;
  out.d_j3 = q.a + q.b + q.c + 1;
  return out;
}

bool eisenstein(const IntPoly& f, const mpz_class& q) {
  require_prime(q);
  if (!f.is_monic()) throw DomainError("Eisenstein check expects a monic polynomial");
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (mpz_divisible_p(c[i].get_mpz_t(), q.get_mpz_t()) == 0) return false;
  const mpz_class q2 = q * q;
  return mpz_divisible_p(f.coeff(0).get_mpz_t(), q2.get_mpz_t()) == 0;
}

const char* to_string(Irreducibility status) {
  switch (status) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
  }
  return "?";
}

IrreducibilityResult irreducibility(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("irreducibility expects a monic non-constant polynomial");
  const int n = f.degree();
  if (n == 1) return {Irreducibility::Irreducible, std::nullopt, "linear"};
  if (f.coeff(0) == 0) return {Irreducibility::Reducible, IntPoly{0, 1}, "x divides f"};

  static const std::vector<unsigned long> primes = small_primes(10000);

  mpz_class content = 0;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) content = gcd(content, f.coeffs()[i]);
  for (unsigned long p : primes) {
    if (!divisible(content, p)) continue;
    if (eisenstein(f, mpz_class(p))) {
      return {Irreducibility::Irreducible, std::nullopt, "Eisenstein at " + std::to_string(p)};
    }
  }

  // Degrees of possible rational factors: subset sums of each modular
  // factorization pattern, intersected over good primes.
  std::uint64_t possible = ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
  std::string used;
  int good = 0;
  for (unsigned long p : primes) {
    if (good == 25 || n >= 64) break;
    FactorList fl = factor_mod_p(f, mpz_class(p));
    if (fl.total_degree() != n) continue;
    bool squarefree = true;
    for (const auto& fac : fl.factors) squarefree = squarefree && fac.multiplicity == 1;
    if (!squarefree) continue;
    ++good;
    std::uint64_t sums = 1;
    for (int d : fl.degree_pattern()) sums |= sums << d;
    possible &= sums;
    used += (used.empty() ? "" : ",") + std::to_string(p);
    if (possible == 0) {
      return {Irreducibility::Irreducible, std::nullopt, "factor degree patterns mod " + used};
    }
  }

  if (auto w = numeric_factor_search(f)) {
    return {Irreducibility::Reducible, w, "exact division by " + to_string(*w)};
  }
  return {Irreducibility::Unknown, std::nullopt, "no certificate"};
}

std::optional<QuadrinomialInput> match_quadrinomial(const IntPoly& f) {
  if (f.degree() != 6 || !f.is_monic()) return std::nullopt;
  QuadrinomialInput q{0, f.coeff(1), f.coeff(0), 1};
  int nonzero = 0;
  for (int m = 2; m <= 5; ++m) {
    if (f.coeff(static_cast<std::size_t>(m)) != 0) {
      ++nonzero;
      q.a = f.coeff(static_cast<std::size_t>(m));
      q.m = m;
    }
  }
  if (nonzero > 1) return std::nullopt;
  return q;
}

std::vector<TheoremVerdict> applicable_checks(const QuadrinomialInput& q) {
  std::vector<TheoremVerdict> out;
  if (q.m == 1) {
    out.push_back(check_cor11(q.a + q.b, q.c, 1));
    return out;
  }
  out.push_back(check_th12(q));
  if (q.b == 0) out.push_back(check_cor11(q.a, q.c, q.m));
  if (q.m <= 4 && q.b != 0 && q.c != 0) {
    out.push_back(check_th13(q));
    out.push_back(check_th14(q));
  }
  if (q.m == 3 || q.m == 4) out.push_back(check_cor15(q));
  return out;
}

std::optional<std::string> family_note(const QuadrinomialInput& q) {
  if (q.m != 2) return std::nullopt;
  if (!divisible(q.a + 7, 112) || !divisible(q.b - 56, 112) || !divisible(q.c, 896)) return std::nullopt;
  return "family a = -7 mod 112, b = 56 mod 112, c = 0 mod 896: irreducible by Eisenstein at 7, "
         "but v2(a+1) = 1 so the th1.3 gate 8 | a+1 fails; the 2-adic index shown is computed "
         "from the polygons, not a theorem claim";
}

}  // namespace oreindex
