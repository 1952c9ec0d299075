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

#include "oreindex/fq.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace oreindex {

namespace {

void require_same_field(const FqPoly& lhs, const FqPoly& rhs) {
  if (lhs.field() != rhs.field() && !lhs.field()->same_as(*rhs.field())) {
    throw DomainError("polynomials over different fields");
  }
}

// Canonical coefficient vector of f mod p, trailing zeros stripped.
std::vector<std::int64_t> reduce_coeffs(const IntPoly& f, std::int64_t p) {
  std::vector<std::int64_t> out;
  out.reserve(f.coeffs().size());
  mpz_class r;
  const mpz_class pz(static_cast<long>(p));
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    out.push_back(r.get_si());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::int64_t checked_char(const mpz_class& p) {
  require_prime(p);
  if (p >= (mpz_class(1) << 31)) throw DomainError("characteristic " + p.get_str() + " too large");
  return p.get_si();
}

}  // namespace

// ---------------------------------------------------------------------------
// FqField

FieldPtr FqField::prime_field(const mpz_class& p) {
  return FieldPtr(new FqField(checked_char(p), {0, 1}));
}

FieldPtr FqField::make(const mpz_class& p, const IntPoly& modulus) {
  const std::int64_t pi = checked_char(p);
  auto reduced = reduce_coeffs(modulus, pi);
  if (reduced.size() < 2) throw DomainError("field modulus must have degree >= 1 mod p");
  if (reduced.back() != 1 || static_cast<int>(reduced.size()) - 1 != modulus.degree()) {
    throw DomainError("field modulus " + oreindex::to_string(modulus) + " is not monic mod " + p.get_str());
  }
  FieldPtr field(new FqField(pi, reduced));
  if (field->degree() >= 2) {
    auto base = prime_field(p);
    FqPoly m = FqPoly::from_int_poly(base, modulus);
    FactorList fl = factor_over_fq(m);
    if (fl.factors.size() != 1 || fl.factors.front().multiplicity != 1) {
      IntPoly witness = fl.factors.front().poly.lift_symmetric();
      throw ReducibleModulus(oreindex::to_string(modulus) + " is reducible mod " + p.get_str() + ": " +
                                 oreindex::to_string(fl),
                             std::move(witness), oreindex::to_string(fl));
    }
  }
  return field;
}

IntPoly FqField::modulus_poly() const {
  std::vector<mpz_class> c;
  for (auto v : modulus_) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

mpz_class FqField::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(degree()));
  return q;
}

FqElem FqField::one() const {
  FqElem e = zero();
  e[0] = 1;
  return e;
}

FqElem FqField::from_int(std::int64_t v) const {
  FqElem e = zero();
  e[0] = ((v % p_) + p_) % p_;
  return e;
}

std::int64_t FqField::reduce(const mpz_class& v) const {
  mpz_class r;
  const mpz_class pz(static_cast<long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
  return r.get_si();
}

FqElem FqField::from_poly(const IntPoly& g) const {
  auto c = reduce_coeffs(g, p_);
  const std::size_t d = static_cast<std::size_t>(degree());
  // Reduce modulo the monic modulus from the top.
  for (std::size_t k = c.size(); k-- > d;) {
    const std::int64_t lead = c[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      c[k - d + j] = ((c[k - d + j] - mulmod(lead, modulus_[j])) % p_ + p_) % p_;
    }
  }
  c.resize(d, 0);
  return c;
}

bool FqField::is_zero(const FqElem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

bool FqField::is_one(const FqElem& a) const {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::int64_t v) { return v == 0; });
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
  FqElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= p_) r[i] -= p_;
  }
  return r;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
  FqElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) r[i] += p_;
  }
  return r;
}

FqElem FqField::neg(const FqElem& a) const {
  FqElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return r;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
  const std::size_t d = static_cast<std::size_t>(degree());
  if (d == 1) return {mulmod(a[0], b[0])};
  std::vector<std::int64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j])) % p_;
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    const std::int64_t lead = prod[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      prod[k - d + j] = ((prod[k - d + j] - mulmod(lead, modulus_[j])) % p_ + p_) % p_;
    }
  }
  prod.resize(d);
  return prod;
}

FqElem FqField::pow(const FqElem& a, const mpz_class& e) const {
  if (e < 0) throw DomainError("negative exponent");
  FqElem result = one();
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

FqElem FqField::inv(const FqElem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in F_q");
  return pow(a, order() - 2);
}

FqElem FqField::pth_root(const FqElem& a) const {
  // a^(p^(d-1)) since Frobenius has order d.
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(degree() - 1));
  return pow(a, e);
}

FqElem FqField::element(std::uint64_t index) const {
  FqElem e = zero();
  for (auto& c : e) {
    c = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_));
    index /= static_cast<std::uint64_t>(p_);
  }
  return e;
}

std::uint64_t FqField::index_of(const FqElem& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(a[i]);
  return idx;
}

std::string FqField::to_string(const FqElem& a, std::string_view var) const {
  if (degree() == 1) return std::to_string(a[0]);
  std::vector<mpz_class> c;
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return oreindex::to_string(IntPoly(std::move(c)), var);
}

// ---------------------------------------------------------------------------
// FqPoly

FqPoly::FqPoly(FieldPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

FqPoly FqPoly::constant(FieldPtr field, FqElem c) {
  std::vector<FqElem> v{std::move(c)};
  return FqPoly(std::move(field), std::move(v));
}

FqPoly FqPoly::monomial(FieldPtr field, FqElem c, std::size_t k) {
  std::vector<FqElem> v(k + 1, field->zero());
  v[k] = std::move(c);
  return FqPoly(std::move(field), std::move(v));
}

FqPoly FqPoly::from_int_poly(FieldPtr field, const IntPoly& f) {
  std::vector<FqElem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    FqElem e = field->zero();
    e[0] = field->reduce(c);
    v.push_back(std::move(e));
  }
  return FqPoly(std::move(field), std::move(v));
}

void FqPoly::normalize() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool FqPoly::is_one() const { return coeffs_.size() == 1 && field_->is_one(coeffs_[0]); }

bool FqPoly::is_monic() const { return !coeffs_.empty() && field_->is_one(coeffs_.back()); }

const FqElem& FqPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FqElem FqPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FqPoly FqPoly::derivative() const {
  if (coeffs_.size() <= 1) return FqPoly(field_);
  std::vector<FqElem> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % static_cast<std::size_t>(field_->p())))));
  }
  return FqPoly(field_, std::move(d));
}

FqPoly FqPoly::scaled(const FqElem& c) const {
  std::vector<FqElem> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(field_->mul(a, c));
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

FqElem FqPoly::evaluate(const FqElem& at) const {
  FqElem acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, at), *it);
  return acc;
}

IntPoly FqPoly::lift_symmetric() const {
  if (field_->degree() != 1) throw DomainError("symmetric lift needs a prime field");
  const std::int64_t p = field_->p();
  std::vector<mpz_class> c;
  c.reserve(coeffs_.size());
  for (const auto& e : coeffs_) {
    std::int64_t v = e[0];
    if (2 * v > p) v -= p;
    c.emplace_back(static_cast<long>(v));
  }
  return IntPoly(std::move(c));
}

FqPoly operator+(const FqPoly& lhs, const FqPoly& rhs) {
  require_same_field(lhs, rhs);
  const auto& F = *lhs.field_;
  std::vector<FqElem> v(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(lhs.coeff(i), rhs.coeff(i));
  return FqPoly(lhs.field_, std::move(v));
}

FqPoly operator-(const FqPoly& lhs, const FqPoly& rhs) {
  require_same_field(lhs, rhs);
  const auto& F = *lhs.field_;
  std::vector<FqElem> v(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(lhs.coeff(i), rhs.coeff(i));
  return FqPoly(lhs.field_, std::move(v));
}

FqPoly operator*(const FqPoly& lhs, const FqPoly& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) return FqPoly(lhs.field_);
  const auto& F = *lhs.field_;
  std::vector<FqElem> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (F.is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] = F.add(v[i + j], F.mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return FqPoly(lhs.field_, std::move(v));
}

bool operator==(const FqPoly& lhs, const FqPoly& rhs) {
  return lhs.field_->same_as(*rhs.field_) && lhs.coeffs_ == rhs.coeffs_;
}

bool poly_less(const FqPoly& lhs, const FqPoly& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return lhs.coeffs() < rhs.coeffs();
}

std::string to_string(const FqPoly& f, std::string_view var, std::string_view elem_var) {
  if (f.is_zero()) return "0";
  const auto& F = *f.field();
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const FqElem& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (F.is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string cs = F.to_string(c, elem_var);
    const bool compound = cs.find_first_of("+-") != std::string::npos;
    if (i == 0) {
      out += cs;
    } else {
      if (!F.is_one(c)) out += compound ? "(" + cs + ")" : cs;
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& f, const FqPoly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& F = *f.field();
  if (f.degree() < g.degree()) return {FqPoly(f.field()), f};
  std::vector<FqElem> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  const FqElem lead_inv = F.inv(g.leading());
  std::vector<FqElem> quot(rem.size() - dg, F.zero());
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (F.is_zero(rem[k + dg])) continue;
    FqElem t = F.mul(rem[k + dg], lead_inv);
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] = F.sub(rem[k + j], F.mul(t, g.coeffs()[j]));
    quot[k] = std::move(t);
  }
  rem.resize(dg);
  return {FqPoly(f.field(), std::move(quot)), FqPoly(f.field(), std::move(rem))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a;
  FqPoly y = b;
  while (!y.is_zero()) {
    FqPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly powmod(const FqPoly& base, const mpz_class& exponent, const FqPoly& modulus) {
  if (exponent < 0) throw DomainError("negative exponent");
  FqPoly result = divmod(FqPoly::constant(base.field(), base.field()->one()), modulus).second;
  FqPoly b = divmod(base, modulus).second;
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization: square-free split, distinct-degree split, Cantor-Zassenhaus.

namespace {

FqPoly exact_div(const FqPoly& f, const FqPoly& g) { return divmod(f, g).first; }

// f has only exponents divisible by p.
FqPoly poly_pth_root(const FqPoly& f) {
  const auto& F = *f.field();
  const auto p = static_cast<std::size_t>(F.p());
  std::vector<FqElem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pth_root(f.coeffs()[i]));
  return FqPoly(f.field(), std::move(v));
}

void squarefree_split(const FqPoly& f, int scale, std::vector<std::pair<FqPoly, int>>& out) {
  if (f.degree() <= 0) return;
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = std::move(y);
    c = exact_div(c, w);
  }
  if (c.degree() > 0) squarefree_split(poly_pth_root(c), scale * static_cast<int>(f.field()->p()), out);
}

std::vector<std::pair<FqPoly, int>> distinct_degree_split(const FqPoly& g) {
  std::vector<std::pair<FqPoly, int>> out;
  const auto& field = g.field();
  const mpz_class q = field->order();
  const FqPoly y = FqPoly::monomial(field, field->one(), 1);
  FqPoly rest = g;
  FqPoly h = divmod(y, rest).second;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, q, rest);
    FqPoly u = gcd(rest, h - y);
    if (u.degree() > 0) {
      rest = exact_div(rest, u);
      h = divmod(h, rest).second;
      out.emplace_back(std::move(u), i);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

void equal_degree_split(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto& field = g.field();
  const auto& F = *field;
  std::uniform_int_distribution<std::int64_t> coeff(0, F.p() - 1);
  const mpz_class q = F.order();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const bool even = F.p() == 2;
  const mpz_class half = (qd - 1) / 2;
  // For characteristic 2 the absolute trace to F_2 plays the role of the
  // quadratic character.
  const long trace_terms = static_cast<long>(F.degree()) * d;
  while (true) {
    std::vector<FqElem> rv(static_cast<std::size_t>(g.degree()), F.zero());
    for (auto& e : rv)
      for (auto& c : e) c = coeff(rng);
    FqPoly a(field, std::move(rv));
    if (a.degree() <= 0) continue;
    FqPoly b(field);
    if (even) {
      FqPoly term = a;
      b = a;
      for (long j = 1; j < trace_terms; ++j) {
        term = divmod(term * term, g).second;
        b = b + term;
      }
    } else {
      b = powmod(a, half, g) - FqPoly::constant(field, F.one());
    }
    FqPoly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(exact_div(g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

FqPoly FactorList::product(const FieldPtr& field) const {
  FqPoly acc = FqPoly::constant(field, unit);
  for (const auto& f : factors)
    for (int k = 0; k < f.multiplicity; ++k) acc = acc * f.poly;
  return acc;
}

int FactorList::total_degree() const {
  int total = 0;
  for (const auto& f : factors) total += f.multiplicity * f.poly.degree();
  return total;
}

std::vector<int> FactorList::degree_pattern() const {
  std::vector<int> out;
  for (const auto& f : factors)
    for (int k = 0; k < f.multiplicity; ++k) out.push_back(f.poly.degree());
  std::sort(out.begin(), out.end());
  return out;
}

FactorList factor_over_fq(const FqPoly& t) {
  if (t.is_zero()) throw DomainError("cannot factor the zero polynomial");
  FactorList result{t.leading(), {}};
  FqPoly f = t.monic();
  std::vector<std::pair<FqPoly, int>> parts;
  squarefree_split(f, 1, parts);
  std::mt19937_64 rng(0x6f7265696e646578ULL);
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree_split(part)) {
      std::vector<FqPoly> irreducibles;
      equal_degree_split(block, d, rng, irreducibles);
      for (auto& u : irreducibles) result.factors.push_back({std::move(u), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return result;
}

FactorList factor_mod_p(const IntPoly& f, const mpz_class& p) {
  auto field = FqField::prime_field(p);
  FqPoly reduced = FqPoly::from_int_poly(field, f);
  if (reduced.is_zero()) throw ZeroModP(to_string(f) + " vanishes mod " + p.get_str());
  return factor_over_fq(reduced);
}

bool is_separable(const FqPoly& t) {
  if (t.degree() < 1) throw DomainError("separability is undefined for constants");
  return gcd(t, t.derivative()).degree() == 0;
}

bool is_squarefree(const FqPoly& t) {
  if (t.is_zero()) throw DomainError("zero polynomial");
  if (t.degree() < 1) return true;
  return gcd(t, t.derivative()).degree() == 0;
}

std::string to_string(const FactorList& factors, std::string_view var) {
  std::string out;
  if (!factors.factors.empty()) {
    const auto& F = *factors.factors.front().poly.field();
    if (!F.is_one(factors.unit)) out += F.to_string(factors.unit) + "*";
  }
  bool first = true;
  for (const auto& f : factors.factors) {
    if (!first) out += "*";
    first = false;
    out += "(" + to_string(f.poly, var) + ")";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out.empty() ? "1" : out;
}

}  // namespace oreindex
