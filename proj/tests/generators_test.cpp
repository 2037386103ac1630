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

#include "horofilter/boundary.hpp"
#include "horofilter/generators.hpp"
#include "oracles.hpp"

namespace horofilter {
namespace {

TEST(Generate, BalancedTreeSize) {
  const Graph g = generate(GenSpec::balanced_tree(2, 3));
  EXPECT_EQ(g.vertex_count(), 15u);
  EXPECT_EQ(g.edge_count(), 14u);
  EXPECT_EQ(generate(GenSpec::balanced_tree(3, 0)).vertex_count(), 1u);
}

TEST(Generate, CycleDegrees) {
  const Graph g = generate(GenSpec::cycle(4));
  EXPECT_EQ(g.vertex_count(), 4u);
  for (vertex_t v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Generate, StarAndGrid) {
  const Graph star = generate(GenSpec::star(5));
  EXPECT_EQ(star.vertex_count(), 6u);
  EXPECT_EQ(star.max_degree(), 5u);
  const Graph grid = generate(GenSpec::grid(3, 4));
  EXPECT_EQ(grid.vertex_count(), 12u);
  EXPECT_EQ(grid.edge_count(), 3u * 3 + 2u * 4);
  EXPECT_EQ(grid.max_degree(), 4u);
}

TEST(Generate, RandomFamiliesAreDeterministic) {
  const auto a = generate(GenSpec::erdos_renyi(30, 0.2, 7));
  const auto b = generate(GenSpec::erdos_renyi(30, 0.2, 7));
  EXPECT_EQ(save_edge_list(a), save_edge_list(b));
  EXPECT_NE(save_edge_list(a), save_edge_list(generate(GenSpec::erdos_renyi(30, 0.2, 8))));
  EXPECT_EQ(generate(GenSpec::random_tree(50, 3)), generate(GenSpec::random_tree(50, 3)));
}

TEST(Generate, RandomTreesAreTrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate(GenSpec::random_tree(40, seed));
    EXPECT_EQ(g.edge_count(), 39u);
    EXPECT_TRUE(g.connected());
  }
}

TEST(Generate, InvalidParamsNameTheConstraint) {
  auto message = [](const GenSpec& s) {
    try {
      generate(s);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(GenSpec::balanced_tree(1, 3)).find("branching >= 2"), std::string::npos);
  EXPECT_NE(message(GenSpec::balanced_tree(2, -1)).find("depth >= 0"), std::string::npos);
  EXPECT_NE(message(GenSpec::cycle(2)).find("n >= 3"), std::string::npos);
  EXPECT_NE(message(GenSpec::erdos_renyi(10, 0.0, 1)).find("0 < p"), std::string::npos);
  EXPECT_NE(message(GenSpec::path(0)).find("n >= 1"), std::string::npos);
}

TEST(Generate, ErdosRenyiGivesUpWhenConnectivityIsHopeless) {
  EXPECT_THROW(generate(GenSpec::erdos_renyi(200, 0.001, 1)), Error);
}

TEST(ParseFamily, AcceptsBothSpellings) {
  EXPECT_EQ(parse_family("balanced-tree"), Family::kBalancedTree);
  EXPECT_EQ(parse_family("erdos_renyi"), Family::kErdosRenyi);
  EXPECT_THROW(parse_family("hypercube"), Error);
}

// Gaps for the ray-aligned fixture, computed from Floyd-Warshall distances.
std::vector<long> oracle_gaps(const Graph& g, const Anchor& a) {
  const auto d = oracle::floyd_warshall(g);
  std::vector<long> out;
  for (const auto& e : g.edges()) {
    const long bu = d[e.u][a.target] - d[a.base][a.target];
    const long bv = d[e.v][a.target] - d[a.base][a.target];
    out.push_back(std::abs(bu - bv));
  }
  return out;
}

TEST(RayAlignedPath, Examples) {
  const auto two = ray_aligned_path(2);
  EXPECT_EQ(two.graph.edge_count(), 1u);
  EXPECT_EQ(two.anchor, (Anchor{0, 1}));

  const auto five = ray_aligned_path(5);
  EXPECT_EQ(five.anchor, (Anchor{0, 4}));
  EXPECT_EQ(oracle_gaps(five.graph, five.anchor), (std::vector<long>{1, 1, 1, 1}));

  const auto three = ray_aligned_path(3);
  EXPECT_EQ(oracle_gaps(three.graph, three.anchor), (std::vector<long>{1, 1}));

  EXPECT_THROW(ray_aligned_path(1), Error);
}

}  // namespace
}  // namespace horofilter
