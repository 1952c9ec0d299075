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

#include "oreindex/zpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace oreindex {

std::int64_t Valuation::value() const {
  if (infinite_) throw DomainError("infinite valuation has no finite value");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpz_class IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPoly::evaluate(const mpz_class& at) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  IntPoly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * sq;
    exponent >>= 1U;
    if (exponent != 0) sq = sq * sq;
  }
  return result;
}

std::string to_string(const IntPoly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (int i = f.degree(); i >= 0; --i) {
    const mpz_class& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (a < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    std::map<std::size_t, mpz_class> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coeff, exponent] = parse_term();
      terms[exponent] += sign * coeff;
      first = false;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<mpz_class> coeffs(top + 1);
    for (auto& [e, c] : terms) coeffs[e] = c;
    return IntPoly(std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<mpz_class, std::size_t> parse_term() {
    skip_ws();
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      have_coeff = true;
      if (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E') {
        fail("coefficients must be integers");
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable after '*'");
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      if (!have_coeff) fail("expected coefficient or variable");
      return {coeff, 0};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (variable_.empty()) {
      variable_ = name;
    } else if (name != variable_) {
      pos_ = start;
      fail("multivariate input (\"" + variable_ + "\" and \"" + name + "\")");
    }
    skip_ws();
    std::size_t exponent = 1;
    if (peek() == '^' || (peek() == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*')) {
      pos_ += peek() == '^' ? 1 : 2;
      skip_ws();
      std::string e = digits();
      if (e.empty()) fail("expected nonnegative integer exponent");
      if (e.size() > 6) fail("exponent too large");
      exponent = std::stoul(e);
    }
    skip_ws();
    if (peek() == '*' || std::isalpha(static_cast<unsigned char>(peek())) || peek() == '.' ||
        std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("unexpected character");
    }
    return {coeff, exponent};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string variable_;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

bool is_probable_prime(const mpz_class& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

void require_prime(const mpz_class& p) {
  if (!is_probable_prime(p)) throw InvalidPrime(p.get_str() + " is not a prime");
}

Valuation vp_int(const mpz_class& n, const mpz_class& p) {
  require_prime(p);
  if (n == 0) return Valuation::infinite();
  mpz_class rest;
  auto count = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<std::int64_t>(count));
}

Valuation gauss_valuation(const IntPoly& g, const mpz_class& p) {
  require_prime(p);
  Valuation best = Valuation::infinite();
  mpz_class rest;
  for (const auto& c : g.coeffs()) {
    if (c == 0) continue;
    auto count = mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    best = std::min(best, Valuation(static_cast<std::int64_t>(count)));
  }
  return best;
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& f, const IntPoly& g) {
  if (g.degree() < 1) throw DomainError("divisor must have degree >= 1");
  if (!g.is_monic()) throw DomainError("divisor " + to_string(g) + " is not monic");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  std::vector<mpz_class> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dg);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class lead = rem[k + dg];
    quot[k] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= lead * gc[j];
  }
  rem.resize(dg);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly PhiExpansion::reconstruct() const {
  IntPoly acc;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base + *it;
  return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) {
    throw DomainError("expansion base " + to_string(phi) + " must be monic of degree >= 1");
  }
  if (f.degree() < phi.degree()) {
    throw DomainError("expansion requires deg f >= deg phi");
  }
  PhiExpansion out{phi, {}};
  IntPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, phi);
    out.digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

}  // namespace oreindex
