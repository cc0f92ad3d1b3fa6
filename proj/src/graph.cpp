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

#include "sqenergy/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "sqenergy/error.hpp"

namespace sqenergy {

Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::BadParameters, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->u) +
                                              "," + std::to_string(dup->v) +
                                              ") appears twice");
  }

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_label(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                              ": bad token '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  bool seen_content = false;
  int line_no = 0;
  int max_label = -1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (is_blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') continue;

    auto toks = split_tokens(line);
    if (!seen_content && toks.size() == 2 && toks[0] == "n") {
      declared = parse_label(toks[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) {
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    int u = parse_label(toks[0], line_no);
    int v = parse_label(toks[1], line_no);
    if (declared && (u >= *declared || v >= *declared)) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "line " + std::to_string(line_no) + ": label >= declared n=" +
                      std::to_string(*declared));
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) +
                                           ": loop at vertex " + std::to_string(u));
    }
    max_label = std::max({max_label, u, v});
    edges.push_back(make_edge(u, v));
  }
  int n = declared ? *declared : max_label + 1;
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::BadHeader, "empty graph6 string");

  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  auto sextet = [&](std::size_t i) -> std::uint64_t {
    if (i >= text.size()) throw Error(ErrorCode::TruncatedPayload, "graph6 header cut short");
    unsigned c = byte(i);
    if (c < 63 || c > 126) throw Error(ErrorCode::BadHeader, "invalid graph6 byte in header");
    return c - 63;
  };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (byte(0) < 63 || byte(0) > 126) {
    throw Error(ErrorCode::BadHeader, "invalid graph6 header byte");
  }
  if (byte(0) != 126) {
    n = byte(0) - 63;
    pos = 1;
  } else if (text.size() > 1 && byte(1) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(i);
    pos = 4;
  }
  if (n > 100000) throw Error(ErrorCode::TooLarge, "graph6 order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (text.size() - pos < need) {
    throw Error(ErrorCode::TruncatedPayload,
                "graph6 payload has " + std::to_string(text.size() - pos) +
                    " bytes, expected " + std::to_string(need));
  }
  if (text.size() - pos > need) {
    throw Error(ErrorCode::MalformedLine, "trailing bytes after graph6 payload");
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      unsigned c = byte(pos + bit / 6);
      if (c < 63 || c > 126) throw Error(ErrorCode::MalformedLine, "invalid graph6 payload byte");
      if (((c - 63) >> (5 - bit % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

namespace {

// Component label per vertex; returns number of components.
int label_components(const Graph& g, std::vector<int>& comp) {
  comp.assign(static_cast<std::size_t>(g.order()), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

int component_count(const Graph& g) {
  std::vector<int> comp;
  return label_components(g, comp);
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) { return g.size() == g.order() - component_count(g); }

InducedSubgraph induced_delete(const Graph& g, std::span<const Vertex> remove) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : remove) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) +
                                                   " not in [0," +
                                                   std::to_string(g.order()) + ")");
    }
    gone[v] = 1;
  }
  InducedSubgraph out;
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) {
      relabel[v] = static_cast<Vertex>(out.label_map.size());
      out.label_map.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.push_back({relabel[e.u], relabel[e.v]});
  }
  out.graph = Graph(static_cast<int>(out.label_map.size()), std::move(edges));
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), std::move(edges));
}

UnicyclicDecomposition classify_unicyclic(const Graph& g) {
  const int n = g.order();
  if (g.size() != n || n == 0) {
    throw Error(ErrorCode::WrongEdgeCount,
                "graph is not unicyclic (" + std::to_string(n) + " vertices, " +
                    std::to_string(g.size()) + " edges)");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "graph is not unicyclic (disconnected)");
  }

  // Strip leaves to a fixed point; what survives is the cycle.
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

  UnicyclicDecomposition d;
  d.graph = g;
  Vertex start = -1;
  for (Vertex v = 0; v < n && start < 0; ++v) {
    if (!pruned[v]) start = v;
  }
  auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (!pruned[w]) out.push_back(w);
    }
    return out;
  };
  Vertex prev = -1;
  Vertex cur = start;
  do {
    d.cycle_vertices.push_back(cur);
    auto nb = cycle_neighbors(cur);  // sorted, exactly two
    Vertex next = (prev < 0) ? nb.front() : (nb[0] == prev ? nb[1] : nb[0]);
    prev = cur;
    cur = next;
  } while (cur != start);

  d.k = static_cast<int>(d.cycle_vertices.size());
  d.residue = d.k % 4;
  auto sub = induced_delete(g, d.cycle_vertices);
  d.forest = std::move(sub.graph);
  d.forest_labels = std::move(sub.label_map);
  return d;
}

Graph cycle_graph(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameters, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.push_back(make_edge(v, (v + 1) % k));
  return Graph(k, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph random_unicyclic(int n, int k, std::uint64_t seed) {
  if (k < 3 || k > n) {
    throw Error(ErrorCode::BadParameters, "need 3 <= k <= n (n=" + std::to_string(n) +
                                              ", k=" + std::to_string(k) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < k; ++v) edges.push_back(make_edge(v, (v + 1) % k));
  for (Vertex v = k; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  return Graph(n, std::move(edges));
}

LabeledUnicyclicEnumerator::LabeledUnicyclicEnumerator(int n) : n_(n) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration limited to n <= " +
                                         std::to_string(kMaxOrder));
  }
  if (n < 3) throw Error(ErrorCode::BadParameters, "unicyclic graphs need n >= 3");
  code_.assign(static_cast<std::size_t>(n - 2), 0);
  load_tree();
}

std::uint64_t LabeledUnicyclicEnumerator::raw_stream_size(int n) {
  std::uint64_t trees = 1;
  for (int i = 0; i < n - 2; ++i) trees *= static_cast<std::uint64_t>(n);
  const std::uint64_t extras = static_cast<std::uint64_t>(n) * (n - 1) / 2 - (n - 1);
  return trees * extras;
}

void LabeledUnicyclicEnumerator::load_tree() {
  // Prüfer decoding.
  std::vector<int> deg(static_cast<std::size_t>(n_), 1);
  for (int a : code_) ++deg[a];
  tree_.clear();
  for (int a : code_) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    tree_.push_back(make_edge(leaf, a));
    --deg[leaf];
    --deg[a];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n_; ++v) {
    if (deg[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        tree_.push_back(make_edge(a, v));
        break;
      }
    }
  }
  std::sort(tree_.begin(), tree_.end());
  extras_.clear();
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!std::binary_search(tree_.begin(), tree_.end(), Edge{u, v})) extras_.push_back({u, v});
    }
  }
  extra_index_ = 0;
}

std::optional<Graph> LabeledUnicyclicEnumerator::next() {
  if (trees_done_) return std::nullopt;
  if (extra_index_ == extras_.size()) {
    // Advance the Prüfer code as a base-n odometer.
    std::size_t i = 0;
    while (i < code_.size() && ++code_[i] == n_) code_[i++] = 0;
    if (i == code_.size()) {
      trees_done_ = true;
      return std::nullopt;
    }
    load_tree();
  }
  std::vector<Edge> edges = tree_;
  edges.push_back(extras_[extra_index_++]);
  return Graph(n_, std::move(edges));
}

std::string canonical_key(const Graph& g) {
  std::string key = std::to_string(g.order()) + ":";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) key += ',';
    first = false;
    key += std::to_string(e.u);
    key += '-';
    key += std::to_string(e.v);
  }
  return key;
}

std::string graph_id(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_key(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw Error(ErrorCode::TooLarge, "edge_mask needs n <= 11");
  std::uint64_t mask = 0;
  for (const auto& e : g.edges()) {
    // Column-major upper triangle, matching graph6 bit order.
    mask |= std::uint64_t{1} << (e.v * (e.v - 1) / 2 + e.u);
  }
  return mask;
}

}  // namespace sqenergy
