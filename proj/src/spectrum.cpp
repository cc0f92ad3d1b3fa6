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

#include "sqenergy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "sqenergy/error.hpp"

namespace sqenergy {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  }
  return std::sqrt(2.0 * sum);
}

void check_t(double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveT, "t must be > 0, got " + std::to_string(t));
}

}  // namespace

double Spectrum::trace() const {
  double s = 0.0;
  for (double x : eigenvalues) s += x;
  return s;
}

double Spectrum::trace_of_square() const {
  double s = 0.0;
  for (double x : eigenvalues) s += x * x;
  return s;
}

Spectrum eigenvalues_symmetric(const Graph& g) {
  const int order = g.order();
  if (order < 1) throw Error(ErrorCode::BadParameters, "spectrum needs n >= 1");
  if (order > kSpectrumMaxOrder) {
    throw Error(ErrorCode::TooLarge, "dense eigensolver limited to n <= " +
                                         std::to_string(kSpectrumMaxOrder));
  }
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<double> a(n * n, 0.0);
  for (const auto& e : g.edges()) {
    a[e.u * n + e.v] = 1.0;
    a[e.v * n + e.u] = 1.0;
  }

  const double tol = 1e-14 * static_cast<double>(n);
  Spectrum out;
  out.n = order;
  double off = off_diagonal_norm(a, n);
  while (off > tol) {
    if (out.sweeps == kJacobiMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi sweep cap hit with off-diagonal norm " + std::to_string(off));
    }
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double grp = a[r * n + p];
          const double grq = a[r * n + q];
          const double np = grp - s * (grq + grp * tau);
          const double nq = grq + s * (grp - grq * tau);
          a[r * n + p] = a[p * n + r] = np;
          a[r * n + q] = a[q * n + r] = nq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }
  out.residual_bound = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double default_zero_threshold(const Spectrum& s) {
  const double top = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  return 1e-9 * std::max(1.0, top);
}

SquareEnergies square_energies(const Spectrum& s, double eps0) {
  if (!(eps0 >= 0.0)) throw Error(ErrorCode::BadParameters, "zero threshold must be >= 0");
  SquareEnergies out;
  out.zero_threshold = eps0;
  for (double x : s.eigenvalues) {
    if (x > eps0) {
      out.s_plus += x * x;
    } else if (x < -eps0) {
      out.s_minus += x * x;
    }
  }
  out.delta = out.s_plus - out.s_minus;
  return out;
}

SquareEnergies square_energies(const Spectrum& s) {
  return square_energies(s, default_zero_threshold(s));
}

double theta_eigen(const Spectrum& s, double t) {
  check_t(t);
  double sum = 0.0;
  for (double x : s.eigenvalues) sum += std::atan(x / t);
  return sum;
}

double theta_eigen_derivative(const Spectrum& s, double t) {
  check_t(t);
  double sum = 0.0;
  for (double x : s.eigenvalues) sum += x / (x * x + t * t);
  return -sum;
}

}  // namespace sqenergy
