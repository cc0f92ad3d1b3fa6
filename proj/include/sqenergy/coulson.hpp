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

#ifndef SQENERGY_COULSON_HPP
#define SQENERGY_COULSON_HPP

#include <vector>

#include "sqenergy/graph.hpp"
#include "sqenergy/matchpoly.hpp"

namespace sqenergy {

// Matching counts rescaled to doubles: m_j ~= mantissa[j] * 2^exponent with
// max mantissa in [0.5, 1]. Keeps Horner sums in range for any order.
struct ScaledCounts {
  std::vector<double> mantissa;
  long exponent = 0;
  int v = 0;
  int max_size = 0;

  static ScaledCounts from(const MatchingCounts& counts);
};

// Everything needed to evaluate Theta_G(t) = sign * atan(2 M_F(t) / M_G(t))
// for a unicyclic graph whose cycle length k is odd.
class ThetaClosedForm {
 public:
  // Throws BadParameters if k is even or the orders differ by other than k.
  ThetaClosedForm(MatchingCounts counts_g, MatchingCounts counts_f, int k);
  static ThetaClosedForm from(const UnicyclicDecomposition& d);

  const MatchingCounts& counts_g() const noexcept { return counts_g_; }
  const MatchingCounts& counts_f() const noexcept { return counts_f_; }
  int k() const noexcept { return k_; }
  int residue() const noexcept { return k_ % 4; }
  // +1 for k = 1 mod 4, -1 for k = 3 mod 4.
  int sign() const noexcept { return residue() == 1 ? 1 : -1; }

  // M_F(t) / M_G(t) without the t^(-k) factor for t >= 1:
  // S_F(u) / S_G(u), u = t^-2, S_H(u) = sum_j m_j u^j.
  double large_t_quotient(double u) const;
  // 2 M_F(t) / M_G(t), evaluated in whichever power direction keeps the
  // terms bounded.
  double ratio(double t) const;

 private:
  MatchingCounts counts_g_;
  MatchingCounts counts_f_;
  int k_;
  ScaledCounts scaled_g_;
  ScaledCounts scaled_f_;
};

struct QuadratureParams {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 60;

  // Throws BadParameters on rel_tol <= 0, abs_tol <= 0 or max_depth < 10.
  void validate() const;
};

struct DeltaIntegral {
  double value = 0.0;           // s+ - s-
  double error_estimate = 0.0;  // Richardson estimate, same units as value
  double split = 0.0;           // T: [0, T] direct, [T, inf) via w = 1/t
  long evaluations = 0;
};

// 2 M_F(t) / M_G(t); finite and > 0. Throws NonpositiveT.
double m_ratio(const ThetaClosedForm& cf, double t);

// sign * atan(m_ratio(t)). Throws NonpositiveT.
double theta_closed(const ThetaClosedForm& cf, double t);

// s+ - s- = -(4/pi) * integral_0^inf t Theta(t) dt. Throws NoConvergence
// when an interval hits max_depth above its tolerance.
DeltaIntegral delta_integral_detailed(const ThetaClosedForm& cf, const QuadratureParams& qp = {});
double delta_integral(const ThetaClosedForm& cf, const QuadratureParams& qp = {});

// Even cycle length: bipartite, so s+ = s- exactly. Throws OddK.
double delta_even(int k);

// max(4, 2 sqrt(m_1(G)))
double quadrature_split(const ThetaClosedForm& cf);

}  // namespace sqenergy

#endif  // SQENERGY_COULSON_HPP
