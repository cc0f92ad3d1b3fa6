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

#ifndef SQENERGY_GRAPH_HPP
#define SQENERGY_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqenergy {

using Vertex = int;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on vertices 0..n-1. Immutable once built: the
// constructor validates and canonicalizes the edge set (sorted, u < v) and
// derives compressed adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws LabelOutOfRange, SelfLoop or DuplicateEdge.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

// A vertex-induced subgraph with labels compacted in increasing order;
// label_map[new_label] is the vertex's label in the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> label_map;
};

struct UnicyclicDecomposition {
  Graph graph;
  // Cyclic order, starting at the smallest cycle vertex and heading toward
  // its smaller cycle neighbour.
  std::vector<Vertex> cycle_vertices;
  int k = 0;
  int residue = 0;  // k mod 4
  Graph forest;     // graph minus the cycle vertices
  std::vector<Vertex> forest_labels;
};

// "u v" per line, optional leading "n <count>", '#' comments.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_forest(const Graph& g);

UnicyclicDecomposition classify_unicyclic(const Graph& g);

InducedSubgraph induced_delete(const Graph& g, std::span<const Vertex> remove);
Graph delete_edge(const Graph& g, Edge e);

Graph cycle_graph(int k);
Graph path_graph(int n);
Graph star_graph(int leaves);

// Cycle on 0..k-1, then each later vertex v attaches to a uniform vertex in
// [0, v). Deterministic in (n, k, seed).
Graph random_unicyclic(int n, int k, std::uint64_t seed);

// Streams every labeled unicyclic graph on n vertices as (Prüfer tree) +
// (one non-tree edge). A graph whose cycle has length k is produced k times,
// once per spanning tree.
class LabeledUnicyclicEnumerator {
 public:
  static constexpr int kMaxOrder = 8;

  explicit LabeledUnicyclicEnumerator(int n);

  std::optional<Graph> next();

  // n^(n-2) * (n(n-1)/2 - (n-1))
  static std::uint64_t raw_stream_size(int n);

 private:
  void load_tree();

  int n_;
  std::vector<int> code_;
  bool trees_done_ = false;
  std::vector<Edge> tree_;
  std::vector<Edge> extras_;
  std::size_t extra_index_ = 0;
};

// Labeled canonical form "n:u-v,u-v,...".
std::string canonical_key(const Graph& g);
// FNV-1a of canonical_key, as 16 lowercase hex digits.
std::string graph_id(const Graph& g);
// Bit (index of pair (u,v) in the upper triangle) per edge; requires n <= 11.
std::uint64_t edge_mask(const Graph& g);

}  // namespace sqenergy

#endif  // SQENERGY_GRAPH_HPP
