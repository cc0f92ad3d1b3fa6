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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "sqenergy/error.hpp"

namespace sqenergy {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sqenergy::Error";
  return ErrorCode::BadParameters;
}

TEST(ParseEdgeList, Triangle) {
  Graph g = parse_edge_list("0 1\n1 2\n2 0");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g, cycle_graph(3));
}

TEST(ParseEdgeList, PawWithDeclaredOrder) {
  Graph g = parse_edge_list("n 4\n0 1\n1 2\n2 0\n2 3");
  EXPECT_EQ(g, oracle::paw());
  EXPECT_EQ(g.degree(2), 3);
}

TEST(ParseEdgeList, CommentsBlankLinesAndIsolatedVertices) {
  Graph g = parse_edge_list("# a comment\n\nn 6\n  # indented comment\n0 1\r\n\t1 2  \n");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.degree(5), 0);
}

TEST(ParseEdgeList, Errors) {
  EXPECT_EQ(code_of([] { parse_edge_list("0 1\n0 1"); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { parse_edge_list("0 1\n1 0"); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { parse_edge_list("0 x"); }), ErrorCode::MalformedLine);
  EXPECT_EQ(code_of([] { parse_edge_list("0 1 2"); }), ErrorCode::MalformedLine);
  EXPECT_EQ(code_of([] { parse_edge_list("0 -1"); }), ErrorCode::MalformedLine);
  EXPECT_EQ(code_of([] { parse_edge_list("3 3"); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { parse_edge_list("n 3\n0 3"); }), ErrorCode::LabelOutOfRange);
}

TEST(ParseEdgeList, ErrorMessageCarriesLineNumber) {
  try {
    parse_edge_list("0 1\n# c\n1 oops\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseGraph6, HandDecodedExamples) {
  // 'B' = 3 vertices; 'w' = 63+56 -> bits 111 for (0,1),(0,2),(1,2).
  EXPECT_EQ(parse_graph6("Bw"), parse_edge_list("0 1\n1 2\n2 0"));
  // 'A' = 2 vertices; '_' = 63+32 -> bit (0,1).
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), cycle_graph(3));
}

TEST(ParseGraph6, Errors) {
  EXPECT_EQ(code_of([] { parse_graph6(""); }), ErrorCode::BadHeader);
  EXPECT_EQ(code_of([] { parse_graph6("\n"); }), ErrorCode::BadHeader);
  EXPECT_EQ(code_of([] { parse_graph6(" Bw"); }), ErrorCode::BadHeader);
  EXPECT_EQ(code_of([] { parse_graph6("B"); }), ErrorCode::TruncatedPayload);
  EXPECT_EQ(code_of([] { parse_graph6("~??"); }), ErrorCode::TruncatedPayload);
  EXPECT_EQ(code_of([] { parse_graph6("Bww"); }), ErrorCode::MalformedLine);
}

TEST(ParseGraph6, AgreesWithEdgeListOnCorpus) {
  const auto corpus = oracle::load_graph6_corpus(SQENERGY_TEST_DATA "/graph6_corpus.txt");
  ASSERT_GE(corpus.size(), 20u);
  for (const auto& entry : corpus) {
    std::string text = "n " + std::to_string(entry.n) + "\n";
    for (const auto& e : entry.edges) text += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    const Graph from_list = parse_edge_list(text);
    const Graph from_g6 = parse_graph6(entry.graph6);
    EXPECT_EQ(from_g6, from_list) << entry.graph6;
    EXPECT_EQ(to_graph6(from_g6), entry.graph6);
  }
}

TEST(ParseGraph6, RoundTripsRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = static_cast<int>(seed * 7 % 90);
    const Graph g = oracle::random_gnm(n, static_cast<int>(seed * 13 % 200), seed);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g) << "seed " << seed;
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g) << "seed " << seed;
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle_graph(3)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_EQ(component_count(Graph(5)), 5);
  EXPECT_TRUE(is_forest(path_graph(6)));
  EXPECT_FALSE(is_forest(cycle_graph(6)));
}

TEST(ClassifyUnicyclic, Paw) {
  const auto d = classify_unicyclic(oracle::paw());
  EXPECT_EQ(d.k, 3);
  EXPECT_EQ(d.residue, 3);
  EXPECT_EQ(d.cycle_vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(d.forest, Graph(1));
  EXPECT_EQ(d.forest_labels, (std::vector<Vertex>{3}));
}

TEST(ClassifyUnicyclic, PureCycleHasEmptyForest) {
  const auto d = classify_unicyclic(cycle_graph(5));
  EXPECT_EQ(d.k, 5);
  EXPECT_EQ(d.residue, 1);
  EXPECT_EQ(d.forest.order(), 0);
  EXPECT_EQ(d.cycle_vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(ClassifyUnicyclic, CycleOrderStartsAtMinimumTowardSmallerNeighbour) {
  // Cycle 2-7-4-9-2 with pendant trees hanging off it.
  const Graph g(10, {{2, 7}, {7, 4}, {4, 9}, {9, 2}, {0, 2}, {1, 0}, {3, 9}, {5, 3}, {6, 4}, {8, 6}});
  const auto d = classify_unicyclic(g);
  EXPECT_EQ(d.cycle_vertices, (std::vector<Vertex>{2, 7, 4, 9}));
  EXPECT_EQ(d.residue, 0);
  EXPECT_EQ(d.forest_labels, (std::vector<Vertex>{0, 1, 3, 5, 6, 8}));
  EXPECT_EQ(d.forest.size(), 3);
}

TEST(ClassifyUnicyclic, Rejections) {
  EXPECT_EQ(code_of([] { classify_unicyclic(path_graph(4)); }), ErrorCode::WrongEdgeCount);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(code_of([&] { classify_unicyclic(two_triangles); }), ErrorCode::NotConnected);
  EXPECT_EQ(code_of([] { classify_unicyclic(Graph(0)); }), ErrorCode::WrongEdgeCount);
}

TEST(InducedDelete, Examples) {
  const Vertex tri[] = {0, 1, 2};
  EXPECT_EQ(induced_delete(cycle_graph(3), tri).graph.order(), 0);
  EXPECT_EQ(induced_delete(oracle::paw(), tri).graph, Graph(1));
  const Vertex zero[] = {0};
  const auto p = induced_delete(cycle_graph(5), zero);
  EXPECT_EQ(p.graph, path_graph(4));
  EXPECT_EQ(p.label_map, (std::vector<Vertex>{1, 2, 3, 4}));
  const Vertex bad[] = {5};
  EXPECT_EQ(code_of([&] { induced_delete(cycle_graph(5), bad); }), ErrorCode::VertexOutOfRange);
}

TEST(RandomUnicyclic, Examples) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) EXPECT_EQ(random_unicyclic(5, 5, seed), cycle_graph(5));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_unicyclic(4, 3, seed);
    EXPECT_EQ(classify_unicyclic(g).k, 3);
    EXPECT_EQ(random_unicyclic(4, 3, seed), g);
  }
  EXPECT_EQ(code_of([] { random_unicyclic(3, 4, 0); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([] { random_unicyclic(5, 2, 0); }), ErrorCode::BadParameters);
}

TEST(RandomUnicyclic, ClassificationRecoversCycleLength) {
  for (int n = 3; n <= 50; ++n) {
    for (int k = 3; k <= n; ++k) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_unicyclic(n, k, seed * 1000003 + n * 31 + k);
        ASSERT_TRUE(is_connected(g));
        ASSERT_EQ(g.size(), n);
        const auto d = classify_unicyclic(g);
        ASSERT_EQ(d.k, k) << "n=" << n << " seed=" << seed;
        ASSERT_EQ(d.k + d.forest.order(), n);
        ASSERT_TRUE(is_forest(d.forest));
        for (int i = 0; i < k; ++i) {
          ASSERT_TRUE(g.has_edge(d.cycle_vertices[i], d.cycle_vertices[(i + 1) % k]));
        }
      }
    }
  }
}

TEST(Enumerator, OrderThreeIsTheTriangleThreeTimes) {
  LabeledUnicyclicEnumerator gen(3);
  int raw = 0;
  while (auto g = gen.next()) {
    EXPECT_EQ(*g, cycle_graph(3));
    ++raw;
  }
  EXPECT_EQ(raw, 3);
  EXPECT_EQ(LabeledUnicyclicEnumerator::raw_stream_size(3), 3u);
}

TEST(Enumerator, OrderFourCounts) {
  LabeledUnicyclicEnumerator gen(4);
  std::map<std::string, int> seen;
  while (auto g = gen.next()) ++seen[canonical_key(*g)];
  EXPECT_EQ(seen.size(), 15u);
  int k3 = 0, k4 = 0;
  for (const auto& [key, mult] : seen) {
    (mult == 3 ? k3 : k4) += 1;
  }
  EXPECT_EQ(k3, 12);
  EXPECT_EQ(k4, 3);
}

TEST(Enumerator, MatchesSubsetScanAndMultiplicityIsCycleLength) {
  for (int n = 3; n <= 7; ++n) {
    const auto expected = oracle::unicyclic_masks_by_subsets(n);
    std::map<std::uint64_t, int> mult;
    std::map<std::uint64_t, int> cycle_length;
    std::uint64_t raw = 0;
    LabeledUnicyclicEnumerator gen(n);
    while (auto g = gen.next()) {
      ++raw;
      const auto key = edge_mask(*g);
      if (mult[key]++ == 0) cycle_length[key] = classify_unicyclic(*g).k;
    }
    EXPECT_EQ(raw, LabeledUnicyclicEnumerator::raw_stream_size(n));
    std::set<std::uint64_t> got;
    for (const auto& [key, m] : mult) {
      got.insert(key);
      EXPECT_EQ(m, cycle_length[key]);
    }
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Enumerator, SizeLimits) {
  EXPECT_EQ(code_of([] { LabeledUnicyclicEnumerator gen(9); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { LabeledUnicyclicEnumerator gen(2); }), ErrorCode::BadParameters);
}

TEST(GraphId, StableAndLabelSensitive) {
  EXPECT_EQ(graph_id(cycle_graph(3)), graph_id(parse_graph6("Bw")));
  EXPECT_EQ(graph_id(cycle_graph(3)).size(), 16u);
  EXPECT_NE(graph_id(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})),
            graph_id(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})));
  EXPECT_EQ(canonical_key(oracle::paw()), "4:0-1,0-2,1-2,2-3");
}

}  // namespace
}  // namespace sqenergy
