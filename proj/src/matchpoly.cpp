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

#include "sqenergy/matchpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>

#include "sqenergy/error.hpp"

namespace sqenergy {
namespace {

using Counts = std::vector<mpz_class>;

void trim(Counts& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

Counts convolve(const Counts& a, const Counts& b) {
  Counts out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void add_into(Counts& dst, const Counts& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

// Matching counts of a forest: per tree, unmatched[v] / matched[v] count
// matchings of v's subtree by whether v is covered.
Counts forest_counts(const Graph& g) {
  const int n = g.order();
  std::vector<Counts> unmatched(static_cast<std::size_t>(n));
  std::vector<Counts> matched(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  Counts total{1};
  std::vector<Vertex> order;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    order.clear();
    stack.push_back(root);
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      Counts a{1};
      Counts b{0};
      for (Vertex c : g.neighbors(v)) {
        if (c == parent[v]) continue;
        Counts child_total = unmatched[c];
        add_into(child_total, matched[c], 0);
        Counts next_b = convolve(b, child_total);
        add_into(next_b, convolve(a, unmatched[c]), 1);
        a = convolve(a, child_total);
        b = std::move(next_b);
        Counts().swap(unmatched[c]);
        Counts().swap(matched[c]);
      }
      unmatched[v] = std::move(a);
      matched[v] = std::move(b);
    }
    Counts tree = unmatched[root];
    add_into(tree, matched[root], 0);
    total = convolve(total, tree);
  }
  trim(total);
  return total;
}

// Edge to split on: among vertices of the 2-core (leaves stripped), the one of
// highest core degree, and its first incident core edge.
Edge split_edge(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> pruned(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    pruned[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!pruned[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  Vertex best = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (!pruned[v] && (best < 0 || deg[v] > deg[best])) best = v;
  }
  for (Vertex w : g.neighbors(best)) {
    if (!pruned[w]) return make_edge(best, w);
  }
  return g.edges().front();  // unreachable for graphs with a cycle
}

Counts recurse(const Graph& g) {
  if (is_forest(g)) return forest_counts(g);
  const Edge e = split_edge(g);
  Counts out = recurse(delete_edge(g, e));
  const Vertex ends[2] = {e.u, e.v};
  add_into(out, recurse(induced_delete(g, ends).graph), 1);
  trim(out);
  return out;
}

}  // namespace

MatchingCounts matching_counts(const Graph& g) {
  return MatchingCounts{recurse(g), g.order()};
}

MatchingCounts brute_force_matching_counts(const Graph& g) {
  const int m = g.size();
  if (m > kBruteForceMaxEdges) {
    throw Error(ErrorCode::TooLarge, "brute-force matching scan needs <= " +
                                         std::to_string(kBruteForceMaxEdges) + " edges");
  }
  auto edges = g.edges();
  std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(m) + 1, 0);
  hist[0] = 1;
  int conflicts = 0;
  int size = 0;
  std::uint32_t gray = 0;
  // Gray-code walk: each step toggles one edge in or out of the subset.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int bit = std::countr_zero(i);
    const std::uint32_t flag = std::uint32_t{1} << bit;
    const Edge e = edges[bit];
    if (gray & flag) {
      for (Vertex x : {e.u, e.v}) {
        if (cover[x]-- == 2) --conflicts;
      }
      --size;
    } else {
      for (Vertex x : {e.u, e.v}) {
        if (++cover[x] == 2) ++conflicts;
      }
      ++size;
    }
    gray ^= flag;
    if (conflicts == 0) ++hist[size];
  }
  MatchingCounts out;
  out.v = g.order();
  out.counts.clear();
  for (auto h : hist) out.counts.emplace_back(static_cast<unsigned long>(h));
  trim(out.counts);
  return out;
}

IntPoly matching_poly(const MatchingCounts& counts) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(counts.v) + 1);
  for (int j = 0; j < static_cast<int>(counts.counts.size()); ++j) {
    const int power = counts.v - 2 * j;
    coeffs[power] = (j % 2 == 0) ? counts.counts[j] : mpz_class(-counts.counts[j]);
  }
  return IntPoly(std::move(coeffs));
}

IntPoly matching_poly(const Graph& g) { return matching_poly(matching_counts(g)); }

IntPoly char_poly_unicyclic(const UnicyclicDecomposition& d) {
  return matching_poly(d.graph) - mpz_class(2) * matching_poly(d.forest);
}

IntPoly char_poly_leverrier(const Graph& g) {
  const int n = g.order();
  if (n > kLeverrierMaxOrder) {
    throw Error(ErrorCode::TooLarge, "Faddeev-LeVerrier oracle limited to n <= " +
                                         std::to_string(kLeverrierMaxOrder));
  }
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<mpz_class> coeffs(N + 1);
  coeffs[N] = 1;
  // M_1 = I; for each k: AM = A M_k, c_{n-k} = -tr(AM)/k, M_{k+1} = AM + c I.
  std::vector<mpz_class> m(N * N), am(N * N);
  for (std::size_t i = 0; i < N; ++i) m[i * N + i] = 1;
  mpz_class trace;
  for (int k = 1; k <= n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      mpz_class* row = &am[static_cast<std::size_t>(i) * N];
      for (std::size_t j = 0; j < N; ++j) row[j] = 0;
      for (Vertex l : g.neighbors(i)) {
        const mpz_class* src = &m[static_cast<std::size_t>(l) * N];
        for (std::size_t j = 0; j < N; ++j) row[j] += src[j];
      }
    }
    trace = 0;
    for (std::size_t i = 0; i < N; ++i) trace += am[i * N + i];
    mpz_class c = -trace;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[N - k] = c;
    if (k == n) break;
    for (std::size_t i = 0; i < N; ++i) am[i * N + i] += c;
    std::swap(m, am);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace sqenergy
