// Copyright 2026 The horofilter Authors
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

#include <gtest/gtest.h>

#include "horofilter/generators.hpp"
#include "horofilter/graph.hpp"
#include "oracles.hpp"

namespace horofilter {
namespace {

TEST(LoadEdgeList, PathOnThreeVertices) {
  const Graph g = load_edge_list("0 1\n1 2");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(LoadEdgeList, DuplicateAndReversedPairsCollapse) {
  EXPECT_EQ(load_edge_list("0 1\n0 1").edge_count(), 1u);
  const Graph g = load_edge_list("0 1\n1 0\n");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.max_degree(), 1u);
}

TEST(LoadEdgeList, SelfLoopReportsLine) {
  try {
    load_edge_list("# header\n0 1\n0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(LoadEdgeList, RejectsNonIntegerTokens) {
  EXPECT_THROW(load_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(load_edge_list("0 1.5\n"), ParseError);
  EXPECT_THROW(load_edge_list("0 -1\n"), ParseError);
  EXPECT_THROW(load_edge_list("0 1 2\n"), ParseError);
}

TEST(LoadEdgeList, CommentsBlankLinesAndHeader) {
  const Graph g = load_edge_list("# c\n\nn=4\n0 1\n\n1 2\n2 3\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(load_edge_list("n=1\n").vertex_count(), 1u);
  EXPECT_THROW(load_edge_list("n=2\n0 5\n"), ParseError);
  EXPECT_THROW(load_edge_list(""), ParseError);
}

TEST(LoadEdgeList, DisconnectedNeedsOverride) {
  EXPECT_THROW(load_edge_list("0 1\n2 3\n"), Error);
  const Graph g = load_edge_list("0 1\n2 3\n", /*allow_disconnected=*/true);
  EXPECT_FALSE(g.connected());
  const DistanceRow row = bfs_distances(g, 0);
  EXPECT_EQ(row.dist[2], kUnreachable);
  EXPECT_THROW(row.at(2), Error);
  EXPECT_EQ(row.at(1), 1);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  const Graph g = generate(GenSpec::erdos_renyi(40, 0.15, 3));
  for (vertex_t v = 0; v < static_cast<vertex_t>(g.vertex_count()); ++v) {
    const auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (vertex_t u : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
  }
}

TEST(EdgeListRoundTrip, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(GenSpec::erdos_renyi(5 + seed, 0.5, seed));
    EXPECT_EQ(load_edge_list(save_edge_list(g)), g) << "seed " << seed;
  }
  const Graph single(1, {});
  EXPECT_EQ(save_edge_list(single), "n=1\n");
  EXPECT_EQ(load_edge_list(save_edge_list(single)), single);
}

TEST(SaveEdgeList, SortedWithLowerIdFirst) {
  const Graph g(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(save_edge_list(g), "0 1\n1 2\n");
}

TEST(BfsDistances, Examples) {
  const Graph path = generate(GenSpec::path(5));
  EXPECT_EQ(bfs_distances(path, 0).dist, (std::vector<hop_t>{0, 1, 2, 3, 4}));

  const Graph star = generate(GenSpec::star(6));
  const auto row = bfs_distances(star, 0);
  for (std::size_t leaf = 1; leaf <= 6; ++leaf) EXPECT_EQ(row.dist[leaf], 1);

  const Graph c4 = generate(GenSpec::cycle(4));
  const auto fw = oracle::floyd_warshall(c4);
  const auto bfs = bfs_distances(c4, 0);
  EXPECT_EQ(bfs.dist, (std::vector<hop_t>{0, 1, 2, 1}));
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(bfs.dist[v], fw[0][v]);
}

TEST(BfsDistances, OneLipschitzAlongEdges) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate(GenSpec::erdos_renyi(30, 0.12, seed));
    for (vertex_t s = 0; s < 30; s += 7) {
      const auto row = bfs_distances(g, s);
      EXPECT_EQ(row.dist[s], 0);
      for (const auto& e : g.edges()) EXPECT_LE(std::abs(row.dist[e.u] - row.dist[e.v]), 1);
    }
  }
}

TEST(AllPairs, SmallExamples) {
  const auto d = all_pairs_distances(generate(GenSpec::path(2)));
  EXPECT_EQ(d(0, 0), 0);
  EXPECT_EQ(d(0, 1), 1);
  EXPECT_EQ(d(1, 0), 1);
  const auto p3 = all_pairs_distances(generate(GenSpec::path(3)));
  hop_t mx = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (hop_t x : p3.row(i)) mx = std::max(mx, x);
  }
  EXPECT_EQ(mx, 2);
}

TEST(AllPairs, MatchesStackedBfsAndFloydWarshall) {
  const Graph g = generate(GenSpec::erdos_renyi(50, 0.08, 11));
  const auto d = all_pairs_distances(g);
  const auto fw = oracle::floyd_warshall(g);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto row = bfs_distances(g, static_cast<vertex_t>(i));
    for (std::size_t j = 0; j < 50; ++j) {
      EXPECT_EQ(d(i, j), row.dist[j]);
      EXPECT_EQ(d(i, j), fw[i][j]);
      EXPECT_EQ(d(i, j), d(j, i));
    }
  }
}

TEST(AllPairs, ThreadCountDoesNotChangeResult) {
  const Graph g = generate(GenSpec::random_tree(120, 5));
  EXPECT_EQ(all_pairs_distances(g, kDefaultAllPairsCap, 1),
            all_pairs_distances(g, kDefaultAllPairsCap, 4));
}

TEST(AllPairs, CapPointsAtSampledMode) {
  const Graph g = generate(GenSpec::path(20));
  try {
    all_pairs_distances(g, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("sampled"), std::string::npos);
  }
}

}  // namespace
}  // namespace horofilter
