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

#ifndef SQENERGY_MATCHPOLY_HPP
#define SQENERGY_MATCHPOLY_HPP

#include <gmpxx.h>

#include <vector>

#include "sqenergy/graph.hpp"
#include "sqenergy/intpoly.hpp"

namespace sqenergy {

// counts[j] = number of j-edge matchings of a graph on v vertices. Stored up
// to the matching number (trailing zeros trimmed); count(j) is 0 beyond.
struct MatchingCounts {
  std::vector<mpz_class> counts{1};
  int v = 0;

  mpz_class count(int j) const {
    return (j >= 0 && j < static_cast<int>(counts.size())) ? counts[j] : mpz_class(0);
  }
  int max_size() const { return static_cast<int>(counts.size()) - 1; }

  friend bool operator==(const MatchingCounts&, const MatchingCounts&) = default;
};

// Edge-deletion recurrence counts(G) = counts(G-e) + shift(counts(G-u-v)),
// with forests handled by a rooted tree DP.
MatchingCounts matching_counts(const Graph& g);

// Exhaustive scan of all 2^|E| edge subsets. |E| <= 24, else TooLarge.
MatchingCounts brute_force_matching_counts(const Graph& g);

// sum_j (-1)^j m_j x^(v-2j); the empty graph gives 1.
IntPoly matching_poly(const MatchingCounts& counts);
IntPoly matching_poly(const Graph& g);

// mu_G - 2 mu_F where F is the graph with the cycle's vertices deleted.
IntPoly char_poly_unicyclic(const UnicyclicDecomposition& d);

// det(xI - A) by Faddeev-LeVerrier in exact integers. n <= 64, else TooLarge.
IntPoly char_poly_leverrier(const Graph& g);

inline constexpr int kLeverrierMaxOrder = 64;
inline constexpr int kBruteForceMaxEdges = 24;

}  // namespace sqenergy

#endif  // SQENERGY_MATCHPOLY_HPP
