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

// Finite fields F_q = F_p[x]/(phi) and polynomial factorization over them.

#ifndef OREINDEX_FQ_HPP
#define OREINDEX_FQ_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oreindex/errors.hpp"
#include "oreindex/zpoly.hpp"

namespace oreindex {

/// Element of F_q: coefficients of a polynomial in the generator, exactly
/// degree() entries, each in [0, p).
using FqElem = std::vector<std::int64_t>;

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/// Raised by FqField::make when the modulus factors over F_p.
class ReducibleModulus : public Error {
 public:
  ReducibleModulus(const std::string& what, IntPoly witness, std::string factorization)
      : Error(what), witness_(std::move(witness)), factorization_(std::move(factorization)) {}

  /// A proper irreducible factor of the modulus.
  const IntPoly& witness() const { return witness_; }
  /// Full factorization, e.g. "(x+1)^2".
  const std::string& factorization() const { return factorization_; }

 private:
  IntPoly witness_;
  std::string factorization_;
};

/// F_p[x]/(modulus). Immutable; the modulus is checked irreducible on
/// construction. Characteristic is limited to p < 2^31.
class FqField {
 public:
  /// Throws InvalidPrime, DomainError (modulus not monic mod p, degree 0)
  /// or ReducibleModulus.
  static FieldPtr make(const mpz_class& p, const IntPoly& modulus);
  static FieldPtr prime_field(const mpz_class& p);

  std::int64_t p() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Monic modulus, coefficients in [0, p).
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  IntPoly modulus_poly() const;
  /// q = p^degree
  mpz_class order() const;

  FqElem zero() const { return FqElem(static_cast<std::size_t>(degree()), 0); }
  FqElem one() const;
  FqElem from_int(std::int64_t v) const;
  /// Image of an integer polynomial under Z[x] -> F_p[x]/(modulus).
  FqElem from_poly(const IntPoly& g) const;
  /// Reduction of an integer mod p.
  std::int64_t reduce(const mpz_class& v) const;

  bool is_zero(const FqElem& a) const;
  bool is_one(const FqElem& a) const;
  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, const mpz_class& e) const;
  /// Throws DomainError on zero.
  FqElem inv(const FqElem& a) const;
  /// Unique p-th root (Frobenius is an automorphism).
  FqElem pth_root(const FqElem& a) const;

  /// Bijection [0, q) -> F_q, base-p digits as coefficients.
  FqElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FqElem& a) const;

  /// Element as a polynomial in the generator, e.g. "a+1"; prime-field
  /// elements print as plain integers.
  std::string to_string(const FqElem& a, std::string_view var = "a") const;

  bool same_as(const FqField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

 private:
  FqField(std::int64_t p, std::vector<std::int64_t> modulus)
      : p_(p), modulus_(std::move(modulus)) {}

  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p_);
  }

  std::int64_t p_;
  std::vector<std::int64_t> modulus_;
};

inline FieldPtr fq_make(const mpz_class& p, const IntPoly& modulus) {
  return FqField::make(p, modulus);
}

/// Polynomial in Y over an F_q, canonical like IntPoly.
class FqPoly {
 public:
  explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
  FqPoly(FieldPtr field, std::vector<FqElem> coeffs);

  static FqPoly constant(FieldPtr field, FqElem c);
  /// c * Y^k
  static FqPoly monomial(FieldPtr field, FqElem c, std::size_t k);
  /// Reduction of an integer polynomial, coefficient-wise, into field.
  static FqPoly from_int_poly(FieldPtr field, const IntPoly& f);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  const FqElem& leading() const;
  FqElem coeff(std::size_t i) const;

  FqPoly derivative() const;
  FqPoly monic() const;
  FqPoly scaled(const FqElem& c) const;
  FqElem evaluate(const FqElem& at) const;

  /// Prime-field coefficients lifted to (-p/2, p/2]. Requires degree-1 field.
  IntPoly lift_symmetric() const;

  friend FqPoly operator+(const FqPoly& lhs, const FqPoly& rhs);
  friend FqPoly operator-(const FqPoly& lhs, const FqPoly& rhs);
  friend FqPoly operator*(const FqPoly& lhs, const FqPoly& rhs);
  friend bool operator==(const FqPoly& lhs, const FqPoly& rhs);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<FqElem> coeffs_;
};

/// Orders by degree, then coefficient by coefficient from the constant term.
bool poly_less(const FqPoly& lhs, const FqPoly& rhs);

/// Text form, e.g. "Y^2+(a+1)Y+1".
std::string to_string(const FqPoly& f, std::string_view var = "Y", std::string_view elem_var = "a");

/// Throws DomainError on a zero divisor.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& f, const FqPoly& g);
/// Monic gcd; gcd(0, 0) is 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly powmod(const FqPoly& base, const mpz_class& exponent, const FqPoly& modulus);

struct Factor {
  FqPoly poly;
  int multiplicity = 1;
};

/// unit * prod(poly^multiplicity); factors monic, irreducible, pairwise
/// distinct and sorted by poly_less.
struct FactorList {
  FqElem unit;
  std::vector<Factor> factors;

  FqPoly product(const FieldPtr& field) const;
  int total_degree() const;
  /// Degrees with multiplicity, one entry per prime factor power, sorted.
  std::vector<int> degree_pattern() const;
};

/// Complete factorization over the coefficient field. Throws DomainError on
/// the zero polynomial.
FactorList factor_over_fq(const FqPoly& t);

/// Factorization of f reduced mod p. Throws ZeroModP when p divides every
/// coefficient.
FactorList factor_mod_p(const IntPoly& f, const mpz_class& p);

/// True iff gcd(t, t') is constant. Throws DomainError on constants.
bool is_separable(const FqPoly& t);

/// True iff t has no repeated factor; works for any nonzero t.
bool is_squarefree(const FqPoly& t);

/// "(x+1)^2*(x^2+x+1)" style rendering over the prime field; other fields
/// render with the element variable.
std::string to_string(const FactorList& factors, std::string_view var = "x");

}  // namespace oreindex

#endif  // OREINDEX_FQ_HPP
