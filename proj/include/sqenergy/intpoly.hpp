// Copyright 2026 The sqenergy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQENERGY_INTPOLY_HPP
#define SQENERGY_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sqenergy {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeff(i) multiplies x^i. Always normalized: no trailing zero coefficients,
// so the zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> lowest_first);
  explicit IntPoly(std::vector<mpz_class> lowest_first);

  static IntPoly monomial(const mpz_class& c, int power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  // Zero for powers above the degree.
  mpz_class coeff(int power) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiply by x^k.
  IntPoly shifted(int k) const;
  mpz_class evaluate(const mpz_class& x) const;

  // Decimal strings, lowest power first.
  std::vector<std::string> to_decimal_strings() const;
  // Human-readable, highest power first, e.g. "x^3 - 3x - 2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

}  // namespace sqenergy

#endif  // SQENERGY_INTPOLY_HPP
