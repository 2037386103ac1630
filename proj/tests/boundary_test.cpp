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

TEST(BusemannField, PathTowardFarEnd) {
  const Graph g = generate(GenSpec::path(5));
  const auto f = busemann_field(g, {0, 4});
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, -1, -2, -3, -4}));
}

TEST(BusemannField, StarFromCenter) {
  const Graph g = generate(GenSpec::star(4));
  const auto f = busemann_field(g, {0, 1});
  EXPECT_EQ(f[0], 0);
  EXPECT_EQ(f[1], -1);
  for (std::size_t leaf = 2; leaf <= 4; ++leaf) EXPECT_EQ(f[leaf], 1);
}

TEST(BusemannField, InvariantsAgainstFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = generate(GenSpec::erdos_renyi(25, 0.18, seed));
    const auto d = oracle::floyd_warshall(g);
    for (vertex_t o = 0; o < 25; o += 6) {
      for (vertex_t z = 1; z < 25; z += 5) {
        if (o == z) continue;
        const auto f = busemann_field(g, {o, z});
        EXPECT_EQ(f[o], 0);
        EXPECT_EQ(f[z], -d[o][z]);
        for (std::size_t v = 0; v < 25; ++v) EXPECT_EQ(f[v], d[v][z] - d[o][z]);
      }
    }
  }
}

TEST(BusemannField, OneLipschitzForRandomPairs) {
  const Graph g = generate(GenSpec::grid(5, 7));
  const auto d = oracle::floyd_warshall(g);
  const auto f = busemann_field(g, {3, 31});
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto u = rng.below(35), v = rng.below(35);
    EXPECT_LE(std::abs(f[u] - f[v]), d[u][v]);
  }
}

TEST(BusemannField, RejectsBadAnchors) {
  const Graph g = generate(GenSpec::path(4));
  EXPECT_THROW(busemann_field(g, {1, 1}), Error);
  EXPECT_THROW(busemann_field(g, {0, 9}), Error);
  const Graph split = load_edge_list("0 1\n2 3\n", true);
  EXPECT_THROW(busemann_field(split, {0, 3}), Error);
}

TEST(EdgeGaps, Examples) {
  const Graph p5 = generate(GenSpec::path(5));
  const auto gaps = edge_gaps(p5, busemann_field(p5, {0, 4}));
  EXPECT_EQ(gaps.gap, (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_EQ(gaps.min_gap, 1);
  EXPECT_EQ(gaps.max_gap, 1);

  const BusemannField constant({0, 1}, std::vector<std::int64_t>(5, 0));
  const auto zero = edge_gaps(p5, constant);
  EXPECT_EQ(zero.max_gap, 0);
  EXPECT_EQ(zero.min_gap, 0);

  // C4 edges in sorted order are (0,1), (0,3), (1,2), (2,3).
  const Graph c4 = generate(GenSpec::cycle(4));
  const auto f = busemann_field(c4, {0, 2});
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, -1, -2, -1}));
  EXPECT_EQ(edge_gaps(c4, f).gap, (std::vector<std::int64_t>{1, 1, 1, 1}));
}

TEST(EdgeGaps, SizeMismatch) {
  const Graph g = generate(GenSpec::path(3));
  const BusemannField wrong({0, 1}, {0, 1});
  EXPECT_THROW(edge_gaps(g, wrong), Error);
}

TEST(EdgeGaps, GapAtMostOneForEveryTarget) {
  std::vector<GenSpec> specs = {GenSpec::cycle(9), GenSpec::grid(4, 6), GenSpec::star(7),
                                GenSpec::balanced_tree(3, 2)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    specs.push_back(GenSpec::erdos_renyi(30, 0.15, seed));
    specs.push_back(GenSpec::random_tree(30, seed));
  }
  for (const auto& s : specs) {
    const Graph g = generate(s);
    for (vertex_t z = 1; z < static_cast<vertex_t>(g.vertex_count()); ++z) {
      EXPECT_LE(edge_gaps(g, busemann_field(g, {0, z})).max_gap, 1) << s.id();
    }
  }
}

TEST(EdgeGaps, EdgesOnShortestBaseTargetPathsHaveUnitGap) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = generate(GenSpec::erdos_renyi(30, 0.12, seed));
    const auto d = oracle::floyd_warshall(g);
    const Anchor a = diameter_anchor(g);
    const auto f = busemann_field(g, a);
    for (const auto& e : g.edges()) {
      const bool on_geodesic = d[a.base][e.u] + 1 + d[e.v][a.target] == d[a.base][a.target] ||
                               d[a.base][e.v] + 1 + d[e.u][a.target] == d[a.base][a.target];
      if (on_geodesic) {
        EXPECT_EQ(std::abs(f[e.u] - f[e.v]), 1);
      }
    }
  }
}

TEST(SuggestAnchor, Examples) {
  EXPECT_EQ(suggest_anchor(generate(GenSpec::path(5)), AnchorStrategy::kDiameterEndpoints),
            (Anchor{0, 4}));
  EXPECT_EQ(suggest_anchor(generate(GenSpec::star(5)), AnchorStrategy::kEccentricFrom, {0, 0}),
            (Anchor{0, 1}));
  EXPECT_EQ(suggest_anchor(generate(GenSpec::path(2)), AnchorStrategy::kDiameterEndpoints),
            (Anchor{0, 1}));
  EXPECT_EQ(suggest_anchor(generate(GenSpec::path(4)), AnchorStrategy::kExplicit, {2, 0}),
            (Anchor{2, 0}));
  EXPECT_THROW(suggest_anchor(Graph(1, {}), AnchorStrategy::kDiameterEndpoints), Error);
  EXPECT_THROW(suggest_anchor(generate(GenSpec::path(4)), AnchorStrategy::kExplicit, {1, 1}),
               Error);
}

TEST(SuggestAnchor, DiameterMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = generate(GenSpec::erdos_renyi(20, 0.2, seed));
    const auto d = oracle::floyd_warshall(g);
    long diam = 0;
    for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
    Anchor first{-1, -1};
    for (std::size_t o = 0; o < 20 && first.base < 0; ++o) {
      for (std::size_t z = o + 1; z < 20; ++z) {
        if (d[o][z] == diam) {
          first = {static_cast<vertex_t>(o), static_cast<vertex_t>(z)};
          break;
        }
      }
    }
    EXPECT_EQ(diameter_anchor(g), first);
  }
}

TEST(MultiAnchorConfig, Validation) {
  MultiAnchorConfig cfg{0, {{4, 0.5}, {2, 0.5}}};
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_DOUBLE_EQ(cfg.bar_alpha(), 0.5);
  cfg.anchors[1].alpha = 0.4;
  try {
    cfg.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("sum to 0.9"), std::string::npos);
  }
  EXPECT_THROW((MultiAnchorConfig{0, {}}).validate(), Error);
  EXPECT_THROW((MultiAnchorConfig{0, {{0, 1.0}}}).validate(), Error);
  EXPECT_THROW((MultiAnchorConfig{0, {{1, 1.5}, {2, -0.5}}}).validate(), Error);
}

}  // namespace
}  // namespace horofilter
