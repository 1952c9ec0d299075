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

// Dense univariate polynomials over Z with p-adic and Gauss valuations and
// phi-adic expansion.

#ifndef OREINDEX_ZPOLY_HPP
#define OREINDEX_ZPOLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oreindex/errors.hpp"

namespace oreindex {

/// Exponent of a prime in an integer or polynomial. Zero inputs have
/// infinite valuation, which compares greater than every finite value.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::int64_t value) : value_(value) {}

  static constexpr Valuation infinite() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Throws DomainError on the infinite valuation.
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation& lhs, const Valuation& rhs) {
    return lhs.infinite_ == rhs.infinite_ && (lhs.infinite_ || lhs.value_ == rhs.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& lhs,
                                                    const Valuation& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
    return lhs.value_ <=> rhs.value_;
  }
  friend constexpr Valuation operator+(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return infinite();
    return Valuation(lhs.value_ + rhs.value_);
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// Integer polynomial, coefficient i multiplies x^i. Always canonical: the
/// highest stored coefficient is nonzero, the zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  /// c * x^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const;

  /// Coefficient of x^i; zero past the degree.
  mpz_class coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& at) const;
  IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const mpz_class& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(const mpz_class& lhs, IntPoly rhs) { return rhs *= lhs; }
  friend IntPoly operator-(IntPoly p);
  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Compact text form, e.g. "x^6+15x^2+8x+128"; the zero polynomial is "0".
std::string to_string(const IntPoly& f, std::string_view var = "x");

/// Parses a one-variable integer polynomial such as "x^6 - 3*x^2 + x - 7".
/// Coefficients may be implicit; like terms are combined. Throws ParseError
/// on non-integer coefficients, a second variable name or stray characters.
IntPoly parse_poly(std::string_view text);

/// Throws InvalidPrime unless p >= 2 and p passes a probabilistic
/// primality test (deterministic for the small primes used here).
void require_prime(const mpz_class& p);
bool is_probable_prime(const mpz_class& n);

/// Exponent of p in n; infinite for n == 0.
Valuation vp_int(const mpz_class& n, const mpz_class& p);

/// Minimum of vp_int over the coefficients; infinite for the zero polynomial.
Valuation gauss_valuation(const IntPoly& g, const mpz_class& p);

/// Division by a monic polynomial; f == q*g + r with deg r < deg g.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& f, const IntPoly& g);

/// Base-phi digits of a polynomial. digits[i] multiplies base^i and has degree
/// below deg(base); the last digit is nonzero.
struct PhiExpansion {
  IntPoly base;
  std::vector<IntPoly> digits;

  /// Index of the leading digit, the "n" of the Newton polygon.
  std::size_t length() const { return digits.empty() ? 0 : digits.size() - 1; }
  IntPoly reconstruct() const;

  friend bool operator==(const PhiExpansion&, const PhiExpansion&) = default;
};

/// Requires phi monic with 1 <= deg phi <= deg f.
PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);

}  // namespace oreindex

#endif  // OREINDEX_ZPOLY_HPP
