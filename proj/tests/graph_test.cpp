// Copyright 2026 The rsmc Authors
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

#include "rsmc/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "rsmc/errors.hpp"
#include "support/oracles.hpp"

namespace rsmc {
namespace {

TEST(ParseEdgeListTest, DefaultsWeightToOne) {
  ParsedGraph parsed = parse_edge_list("a\tb\t2.5\nb\tc", false);
  const Graph& g = parsed.graph;
  EXPECT_EQ(g.vertex_count(), 3u);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 2.5}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2, 1.0}));
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(2), "c");
  EXPECT_EQ(parsed.self_loops_dropped, 0u);
}

TEST(ParseEdgeListTest, DropsSelfLoopsAndCountsThem) {
  ParsedGraph parsed = parse_edge_list("a\ta\t1.0", false);
  EXPECT_EQ(parsed.graph.vertex_count(), 1u);
  EXPECT_EQ(parsed.graph.edge_count(), 0u);
  EXPECT_EQ(parsed.self_loops_dropped, 1u);
}

TEST(ParseEdgeListTest, SkipsCommentsAndBlankLines) {
  ParsedGraph parsed =
      parse_edge_list("# header\n\nx\ty\n# trailing\r\ny\tz\t3\r\n", true);
  EXPECT_EQ(parsed.graph.vertex_count(), 3u);
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
  EXPECT_TRUE(parsed.graph.directed());
}

TEST(ParseEdgeListTest, RejectsNegativeWeight) {
  EXPECT_THROW(parse_edge_list("a\tb\t-1", false), WeightError);
}

TEST(ParseEdgeListTest, RejectsZeroWeightOffDiagonal) {
  EXPECT_THROW(parse_edge_list("a\tb\t0", false), WeightError);
  // Zero is fine on a self-loop, which is dropped anyway.
  EXPECT_NO_THROW(parse_edge_list("a\ta\t0", false));
}

TEST(ParseEdgeListTest, RejectsDuplicates) {
  EXPECT_THROW(parse_edge_list("a\tb\nb\ta", false), DuplicateEdgeError);
  EXPECT_THROW(parse_edge_list("a\tb\na\tb\t2", true), DuplicateEdgeError);
  // Opposite directions are distinct ordered pairs.
  EXPECT_NO_THROW(parse_edge_list("a\tb\nb\ta", true));
}

TEST(ParseEdgeListTest, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("a\tb\n# ok\nlonely\n", false);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_edge_list("a\tb\tnotanumber", false), ParseError);
  EXPECT_THROW(parse_edge_list("a\tb\t1\textra", false), ParseError);
  EXPECT_THROW(parse_edge_list("a b", false), ParseError);
}

TEST(GraphTest, CanonicalizesUndirectedEdges) {
  Graph g(3, {{2, 0, 1.0}, {1, 0, 2.0}}, false);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2, 1.0}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 1, 2.0}));
}

TEST(GraphTest, ConstructorEnforcesInvariants) {
  EXPECT_THROW(Graph(2, {{0, 1, 0.0}}, false), WeightError);
  EXPECT_THROW(Graph(2, {{0, 0, 1.0}}, false), InputError);
  EXPECT_THROW(Graph(2, {{0, 2, 1.0}}, false), InputError);
  EXPECT_THROW(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}, false),
               DuplicateEdgeError);
  EXPECT_THROW(Graph(2, {}, false, {"only-one"}), InputError);
}

TEST(ConnectedComponentsTest, Examples) {
  EXPECT_EQ(connected_components(Graph(3, {}, false)).component_count, 3u);
  EXPECT_EQ(connected_components(testing::path_graph(3)).component_count, 1u);
  auto two = connected_components(Graph(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false));
  EXPECT_EQ(two.component_count, 2u);
  EXPECT_EQ(two.assignment, (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(ConnectedComponentsTest, InvariantUnderEdgeReversal) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 12;
    Graph g = testing::random_graph(rng, n, 0.15, true);
    std::vector<Edge> reversed;
    for (const Edge& e : g.edges()) {
      reversed.push_back({e.target, e.source, e.weight});
    }
    Graph r(n, reversed, true);
    EXPECT_EQ(connected_components(g).assignment,
              connected_components(r).assignment);
  }
}

TEST(ConnectedComponentsTest, CountEqualsVertexCountIffEdgeless) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 10;
    Graph g = testing::random_graph(rng, n, 0.1, trial % 2 == 0);
    EXPECT_EQ(connected_components(g).component_count == n,
              g.edge_count() == 0);
  }
}

TEST(ConnectedComponentsTest, SameComponentIffPathExists) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(rng, 10, 0.15, false);
    auto parts = connected_components(g);
    auto dist = testing::floyd_warshall(g);
    for (Vertex u = 0; u < 10; ++u) {
      for (Vertex v = 0; v < 10; ++v) {
        EXPECT_EQ(parts.assignment[u] == parts.assignment[v],
                  dist(static_cast<Eigen::Index>(u),
                       static_cast<Eigen::Index>(v)) < testing::kInf);
      }
    }
  }
}

TEST(ReachabilityTest, RespectsDirection) {
  Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, true);
  auto reach = reachability(g);
  EXPECT_TRUE(reach[0][2]);
  EXPECT_FALSE(reach[2][0]);
  EXPECT_TRUE(reach[1][1]);
}

// Random edge-list text -> parse -> serialize -> parse is the identity on
// graphs without isolated vertices.
TEST(SerializeEdgeListTest, RoundTripProperty) {
  testing::Rng rng(14);
  std::uniform_int_distribution<int> pick(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const bool directed = trial % 2 == 0;
    std::string text;
    std::set<std::pair<int, int>> used;
    for (int k = 0; k < 15; ++k) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      auto key = directed ? std::pair{a, b}
                          : std::pair{std::min(a, b), std::max(a, b)};
      if (!used.insert(key).second) continue;
      text += "v" + std::to_string(a) + "\tv" + std::to_string(b) + "\t" +
              std::to_string(testing::uniform(rng, 0.01, 100.0) / 3.0) + "\n";
    }
    Graph g = parse_edge_list(text, directed).graph;
    Graph again = parse_edge_list(serialize_edge_list(g), directed).graph;
    EXPECT_EQ(g, again);
  }
}

TEST(SerializeEdgeListTest, WritesFullPrecision) {
  Graph g(2, {{0, 1, 0.1 + 0.2}}, false, {"p", "q"});
  EXPECT_EQ(serialize_edge_list(g), "p\tq\t0.30000000000000004\n");
}

}  // namespace
}  // namespace rsmc
