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

#ifndef SQENERGY_SPECTRUM_HPP
#define SQENERGY_SPECTRUM_HPP

#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  // Frobenius norm of the off-diagonal remainder when the sweeps stopped;
  // bounds each eigenvalue's error (Weyl) up to rounding.
  double residual_bound = 0.0;
  int n = 0;
  int sweeps = 0;

  double trace() const;
  double trace_of_square() const;
};

struct SquareEnergies {
  double s_plus = 0.0;
  double s_minus = 0.0;
  double delta = 0.0;
  double zero_threshold = 0.0;
};

inline constexpr int kSpectrumMaxOrder = 2000;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi on the dense adjacency matrix until the off-diagonal
// Frobenius mass is <= 1e-14 * n. Throws BadParameters (n < 1), TooLarge,
// NoConvergence.
Spectrum eigenvalues_symmetric(const Graph& g);

// 1e-9 * max(1, lambda_1).
double default_zero_threshold(const Spectrum& s);

// Eigenvalues in [-eps0, eps0] count as zero and contribute to neither sum.
SquareEnergies square_energies(const Spectrum& s, double eps0);
SquareEnergies square_energies(const Spectrum& s);

// sum_i atan(lambda_i / t), principal branch. t > 0 else NonpositiveT.
double theta_eigen(const Spectrum& s, double t);
// -sum_i lambda_i / (lambda_i^2 + t^2)
double theta_eigen_derivative(const Spectrum& s, double t);

}  // namespace sqenergy

#endif  // SQENERGY_SPECTRUM_HPP
