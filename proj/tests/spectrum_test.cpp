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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqenergy/error.hpp"

namespace sqenergy {
namespace {

void expect_spectrum(const Graph& g, const std::vector<double>& expected, double tol) {
  const Spectrum s = eigenvalues_symmetric(g);
  ASSERT_EQ(s.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s.eigenvalues[i], expected[i], tol) << "index " << i;
  }
}

TEST(Eigenvalues, Examples) {
  expect_spectrum(cycle_graph(3), {2, -1, -1}, 1e-12);
  expect_spectrum(Graph(2, {{0, 1}}), {1, -1}, 1e-12);
  expect_spectrum(cycle_graph(4), {2, 0, 0, -2}, 1e-12);
  expect_spectrum(Graph(3), {0, 0, 0}, 0.0);
  expect_spectrum(star_graph(4), {2, 0, 0, 0, -2}, 1e-12);
}

TEST(Eigenvalues, CyclesMatchCosineFormula) {
  for (int k = 3; k <= 60; ++k) expect_spectrum(cycle_graph(k), oracle::cycle_spectrum(k), 1e-10);
}

TEST(Eigenvalues, SortedWithTraceIdentities) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed * 5 % 120);
    const Graph g = random_unicyclic(n, 3 + static_cast<int>(seed % (n - 2)), seed);
    const Spectrum s = eigenvalues_symmetric(g);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>()));
    EXPECT_NEAR(s.trace(), 0.0, 1e-10 * n);
    EXPECT_NEAR(s.trace_of_square(), 2.0 * g.size(), 1e-9 * n);
    EXPECT_LE(s.residual_bound, 1e-14 * n);
    const SquareEnergies se = square_energies(s);
    EXPECT_NEAR(se.s_plus + se.s_minus, 2.0 * n, 1e-8 * n);
  }
}

TEST(Eigenvalues, Errors) {
  EXPECT_THROW(eigenvalues_symmetric(Graph(0)), Error);
  try {
    eigenvalues_symmetric(Graph(kSpectrumMaxOrder + 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(SquareEnergies, Examples) {
  const SquareEnergies c3 = square_energies(eigenvalues_symmetric(cycle_graph(3)));
  EXPECT_NEAR(c3.s_plus, 4.0, 1e-12);
  EXPECT_NEAR(c3.s_minus, 2.0, 1e-12);
  EXPECT_NEAR(c3.delta, 2.0, 1e-12);
  EXPECT_NEAR(c3.delta, 2.0 * (1.0 / std::cos(std::numbers::pi / 3) - 1.0), 1e-12);

  // Oracle from 2cos(2 pi j / 5).
  double sp = 0, sm = 0;
  for (double x : oracle::cycle_spectrum(5)) (x > 0 ? sp : sm) += x * x;
  const SquareEnergies c5 = square_energies(eigenvalues_symmetric(cycle_graph(5)));
  EXPECT_NEAR(c5.s_plus, sp, 1e-12);
  EXPECT_NEAR(c5.s_minus, sm, 1e-12);
  EXPECT_NEAR(c5.s_plus, 4.7639320, 1e-7);
  EXPECT_NEAR(c5.s_minus, 5.2360680, 1e-7);
  EXPECT_NEAR(c5.delta, -0.4721360, 1e-7);
  EXPECT_NEAR(c5.delta, oracle::odd_cycle_delta(5), 1e-12);

  const SquareEnergies c4 = square_energies(eigenvalues_symmetric(cycle_graph(4)));
  EXPECT_NEAR(c4.s_plus, 4.0, 1e-12);
  EXPECT_NEAR(c4.s_minus, 4.0, 1e-12);
  EXPECT_NEAR(c4.delta, 0.0, 1e-12);
}

TEST(SquareEnergies, ZeroThreshold) {
  Spectrum s;
  s.eigenvalues = {2.0, 1e-10, 0.0, -1e-10, -2.0};
  s.n = 5;
  EXPECT_DOUBLE_EQ(default_zero_threshold(s), 2e-9);
  const SquareEnergies se = square_energies(s);
  EXPECT_DOUBLE_EQ(se.s_plus, 4.0);
  EXPECT_DOUBLE_EQ(se.s_minus, 4.0);
  const SquareEnergies strict = square_energies(s, 0.0);
  EXPECT_DOUBLE_EQ(strict.s_plus, 4.0 + 1e-20);
  EXPECT_THROW(square_energies(s, -1.0), Error);
}

TEST(ThetaEigen, Examples) {
  const Spectrum c3 = eigenvalues_symmetric(cycle_graph(3));
  EXPECT_NEAR(theta_eigen(c3, 1.0), std::atan(2.0) - 2.0 * std::atan(1.0), 1e-14);
  EXPECT_NEAR(theta_eigen(c3, 1.0), -std::atan(0.5), 1e-14);
  EXPECT_NEAR(theta_eigen(c3, 1.0), -0.4636476, 1e-7);
  EXPECT_NEAR(theta_eigen(c3, 1e6), 0.0, 1e-11);
  const Spectrum edgeless = eigenvalues_symmetric(Graph(4));
  for (double t : {1e-3, 1.0, 50.0}) EXPECT_EQ(theta_eigen(edgeless, t), 0.0);
  EXPECT_THROW(theta_eigen(c3, 0.0), Error);
  EXPECT_THROW(theta_eigen(c3, -1.0), Error);
  EXPECT_THROW(theta_eigen_derivative(c3, 0.0), Error);
}

TEST(ThetaEigen, BoundedAndMonotoneForNonnegativeSpectra) {
  Spectrum nonneg;
  nonneg.eigenvalues = {3.0, 1.5, 0.0};
  nonneg.n = 3;
  double prev = theta_eigen(nonneg, 1e-4);
  for (double t = 1e-3; t < 1e4; t *= 1.5) {
    const double cur = theta_eigen(nonneg, t);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_unicyclic(20, 3 + static_cast<int>(seed % 18), seed);
    const Spectrum s = eigenvalues_symmetric(g);
    for (double t : {1e-6, 0.01, 1.0, 100.0}) {
      EXPECT_LE(std::abs(theta_eigen(s, t)), g.order() * std::numbers::pi / 2);
    }
  }
}

TEST(ThetaEigen, EvenCycleSpectrumIsSymmetric) {
  const Spectrum s = eigenvalues_symmetric(random_unicyclic(17, 6, 3));
  for (double t : {0.1, 1.0, 10.0}) EXPECT_NEAR(theta_eigen(s, t), 0.0, 1e-13);
}

}  // namespace
}  // namespace sqenergy
