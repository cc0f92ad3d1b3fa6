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

#include "sqenergy/coulson.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sqenergy/error.hpp"
#include "sqenergy/spectrum.hpp"

namespace sqenergy {
namespace {

ThetaClosedForm closed_form(const Graph& g) { return ThetaClosedForm::from(classify_unicyclic(g)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sqenergy::Error";
  return ErrorCode::BadParameters;
}

TEST(MRatio, Examples) {
  // M_C3(1) = 1 + 3; M_F = 1 for the empty forest.
  EXPECT_NEAR(m_ratio(closed_form(cycle_graph(3)), 1.0), 0.5, 1e-15);
  // paw: M_G(1) = 1 + 4 + 1, M_K1(1) = 1.
  EXPECT_NEAR(m_ratio(closed_form(oracle::paw()), 1.0), 1.0 / 3.0, 1e-15);
  const auto c3 = closed_form(cycle_graph(3));
  for (double t : {1e2, 1e4, 1e6}) {
    EXPECT_NEAR(m_ratio(c3, t) / (2.0 * std::pow(t, -3)), 1.0, 10.0 * (3 + 0 + 1) / (t * t));
  }
  EXPECT_EQ(code_of([&] { m_ratio(c3, 0.0); }), ErrorCode::NonpositiveT);
}

TEST(MRatio, MatchesDirectPolynomialEvaluation) {
  // Direct sum_j m_j t^(v-2j) in long double is fine at small order.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 15);
    const int k = 3 + 2 * static_cast<int>(seed % ((n - 1) / 2));
    const auto d = classify_unicyclic(random_unicyclic(n, k, seed));
    const auto cf = ThetaClosedForm::from(d);
    auto direct = [](const MatchingCounts& c, long double t) {
      long double acc = 0;
      for (int j = 0; j <= c.max_size(); ++j) {
        acc += c.counts[j].get_d() * std::pow(t, static_cast<long double>(c.v - 2 * j));
      }
      return acc;
    };
    for (double t : {0.05, 0.3, 0.999, 1.0, 1.7, 12.0}) {
      const long double expect = 2 * direct(cf.counts_f(), t) / direct(cf.counts_g(), t);
      EXPECT_NEAR(m_ratio(cf, t) / static_cast<double>(expect), 1.0, 1e-13) << "t=" << t;
    }
  }
}

TEST(MRatio, ContinuousAcrossBranchSwitch) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto cf = closed_form(random_unicyclic(25, 3 + 2 * static_cast<int>(seed % 11), seed));
    const double below = m_ratio(cf, std::nextafter(1.0, 0.0));
    const double at = m_ratio(cf, 1.0);
    EXPECT_NEAR(below / at, 1.0, 1e-14);
  }
}

TEST(MRatio, PositiveAndAsymptotic) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 28);
    const int k = 3 + 2 * static_cast<int>(seed % ((n - 1) / 2));
    const auto cf = closed_form(random_unicyclic(n, k, seed + 10));
    for (double t = 1e-6; t <= 1e6; t *= 3.0) {
      const double r = m_ratio(cf, t);
      EXPECT_GT(r, 0.0) << "t=" << t;
      EXPECT_TRUE(std::isfinite(r));
    }
    const double m1 = cf.counts_g().count(1).get_d() + cf.counts_f().count(1).get_d();
    for (double t : {100.0, 1e3, 1e4}) {
      const double scaled = std::pow(t, k) * m_ratio(cf, t) / 2.0;
      EXPECT_LE(std::abs(scaled - 1.0), 10.0 * (m1 + 1.0) / (t * t)) << "t=" << t;
    }
  }
}

TEST(MRatio, LargeOrderStaysFinite) {
  // Matching counts far beyond double range when unscaled.
  const auto d = classify_unicyclic(random_unicyclic(2000, 501, 4));
  const auto cf = ThetaClosedForm::from(d);
  std::size_t bits = 0;
  for (const auto& c : cf.counts_g().counts) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  EXPECT_GT(bits, 1100u);
  for (double t : {1e-3, 0.5, 1.0, 2.0, 30.0}) {
    const double r = m_ratio(cf, t);
    EXPECT_TRUE(std::isfinite(r)) << t;
    EXPECT_GE(r, 0.0);
    EXPECT_TRUE(std::isfinite(theta_closed(cf, t)));
  }
}

TEST(ThetaClosed, Examples) {
  EXPECT_NEAR(theta_closed(closed_form(cycle_graph(3)), 1.0), -std::atan(0.5), 1e-15);
  EXPECT_NEAR(theta_closed(closed_form(cycle_graph(3)), 1.0), -0.4636476, 1e-7);
  EXPECT_NEAR(theta_closed(closed_form(cycle_graph(5)), 1.0), std::atan(2.0 / 11.0), 1e-15);
  EXPECT_NEAR(theta_closed(closed_form(cycle_graph(5)), 1.0), 0.1798535, 1e-7);
  EXPECT_NEAR(theta_closed(closed_form(oracle::paw()), 1.0), -std::atan(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(theta_closed(closed_form(oracle::paw()), 1.0), -0.3217506, 1e-7);
  for (const Graph& g : {cycle_graph(3), cycle_graph(5), oracle::paw()}) {
    const Spectrum s = eigenvalues_symmetric(g);
    EXPECT_NEAR(theta_closed(closed_form(g), 1.0), theta_eigen(s, 1.0), 1e-14);
  }
  EXPECT_EQ(code_of([] { theta_closed(closed_form(cycle_graph(3)), -2.0); }),
            ErrorCode::NonpositiveT);
}

TEST(ThetaClosed, SignLawAndAgreementWithEigenvalues) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 28);
    const int k = 3 + 2 * static_cast<int>(seed % ((n - 1) / 2));
    const Graph g = random_unicyclic(n, k, seed + 300);
    const auto cf = closed_form(g);
    const Spectrum s = eigenvalues_symmetric(g);
    for (double t : {1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3}) {
      const double th = theta_closed(cf, t);
      if (k % 4 == 1) {
        EXPECT_GT(th, 0.0);
      } else {
        EXPECT_LT(th, 0.0);
      }
      EXPECT_NEAR(th, theta_eigen(s, t), 1e-10 * n) << "n=" << n << " k=" << k << " t=" << t;
    }
  }
}

TEST(ThetaClosed, IntegrandDecayBeyondSplit) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 25);
    const int k = 3 + 2 * static_cast<int>(seed % ((n - 1) / 2));
    const auto cf = closed_form(random_unicyclic(n, k, seed));
    const double split = quadrature_split(cf);
    // |t Theta| <= t * 2 M_F / M_G <= 2 t^(1-k) since m_j(F) <= m_j(G).
    for (double t = split; t < 1e5; t *= 1.7) {
      EXPECT_LE(std::abs(t * theta_closed(cf, t)), 2.0 * std::pow(t, 1 - k) * (1 + 1e-12));
    }
  }
}

TEST(ThetaClosedForm, Construction) {
  EXPECT_EQ(code_of([] { closed_form(cycle_graph(4)); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([] { ThetaClosedForm(matching_counts(cycle_graph(5)), MatchingCounts{}, 3); }),
            ErrorCode::BadParameters);
  const auto cf = closed_form(random_unicyclic(12, 7, 1));
  EXPECT_EQ(cf.k(), 7);
  EXPECT_EQ(cf.residue(), 3);
  EXPECT_EQ(cf.sign(), -1);
  EXPECT_EQ(cf.counts_g().v - cf.counts_f().v, 7);
  EXPECT_EQ(closed_form(cycle_graph(9)).sign(), 1);
}

TEST(DeltaIntegral, OddCycles) {
  EXPECT_NEAR(delta_integral(closed_form(cycle_graph(3))), 2.0, 1e-6);
  EXPECT_NEAR(delta_integral(closed_form(cycle_graph(5))), -0.4721360, 1e-6);
  EXPECT_NEAR(delta_integral(closed_form(cycle_graph(5))), oracle::odd_cycle_delta(5), 1e-9);
  EXPECT_NEAR(delta_integral(closed_form(cycle_graph(7))), oracle::odd_cycle_delta(7), 1e-9);
  EXPECT_NEAR(delta_integral(closed_form(cycle_graph(7))), 0.2198325, 1e-6);
}

TEST(DeltaIntegral, DetailsAndSign) {
  const auto cf = closed_form(random_unicyclic(40, 11, 2));
  const DeltaIntegral di = delta_integral_detailed(cf);
  EXPECT_DOUBLE_EQ(di.split, std::max(4.0, 2.0 * std::sqrt(40.0)));
  EXPECT_GT(di.evaluations, 0);
  EXPECT_GT(di.value, 0.0);
  EXPECT_LE(di.error_estimate, 1e-9 * std::abs(di.value) + 1e-12);
  const auto sq = square_energies(eigenvalues_symmetric(random_unicyclic(40, 11, 2)));
  EXPECT_NEAR(di.value, sq.delta, 1e-8);
}

TEST(DeltaIntegral, NoConvergenceWhenDepthTooShallow) {
  QuadratureParams qp;
  qp.rel_tol = 1e-300;
  qp.abs_tol = 1e-300;
  qp.max_depth = 10;
  EXPECT_EQ(code_of([&] { delta_integral(closed_form(cycle_graph(3)), qp); }),
            ErrorCode::NoConvergence);
}

TEST(QuadratureParams, Validation) {
  EXPECT_NO_THROW(QuadratureParams{}.validate());
  EXPECT_THROW((QuadratureParams{0.0, 1e-12, 60}).validate(), Error);
  EXPECT_THROW((QuadratureParams{1e-9, -1.0, 60}).validate(), Error);
  EXPECT_THROW((QuadratureParams{1e-9, 1e-12, 9}).validate(), Error);
}

TEST(DeltaEven, ExactZero) {
  EXPECT_EQ(delta_even(4), 0.0);
  EXPECT_EQ(delta_even(6), 0.0);
  EXPECT_EQ(code_of([] { delta_even(3); }), ErrorCode::OddK);
}

}  // namespace
}  // namespace sqenergy
