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

#include "sqenergy/intpoly.hpp"

#include <algorithm>

namespace sqenergy {

IntPoly::IntPoly(std::initializer_list<long> lowest_first) {
  coeffs_.reserve(lowest_first.size());
  for (long c : lowest_first) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<mpz_class> lowest_first) : coeffs_(std::move(lowest_first)) {
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& c, int power) {
  std::vector<mpz_class> v(static_cast<std::size_t>(power) + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

mpz_class IntPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
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

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const mpz_class& c = coeffs_[p];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (mag != 1 || p == 0) out += mag.get_str();
    if (p >= 1) out += "x";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

}  // namespace sqenergy
