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

// Seeded graph families. Random families draw from Rng (mt19937_64), so a
// spec and seed reproduce the same edge list on every platform.

#ifndef HOROFILTER_GENERATORS_HPP_
#define HOROFILTER_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "horofilter/boundary.hpp"
#include "horofilter/graph.hpp"

namespace horofilter {

enum class Family { kPath, kCycle, kStar, kBalancedTree, kGrid, kRandomTree, kErdosRenyi };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kBalancedTree: return "balanced_tree";
    case Family::kGrid: return "grid";
    case Family::kRandomTree: return "random_tree";
    case Family::kErdosRenyi: return "erdos_renyi";
  }
  return "?";
}

/// Accepts both "balanced_tree" and "balanced-tree" spellings.
inline Family parse_family(std::string_view name) {
  std::string s(name);
  for (char& c : s) {
    if (c == '-') c = '_';
  }
  for (Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kBalancedTree,
                   Family::kGrid, Family::kRandomTree, Family::kErdosRenyi}) {
    if (s == to_string(f)) return f;
  }
  throw Error("unknown graph family \"" + std::string(name) + "\"");
}

/// Family plus parameters. Fields that a family does not use are ignored.
///   path, cycle, random_tree: n
///   star: leaves (the center is vertex 0)
///   balanced_tree: branching, depth
///   grid: rows, cols
///   erdos_renyi: n, p
struct GenSpec {
  Family family = Family::kPath;
  std::int64_t n = 0;
  std::int64_t leaves = 0;
  std::int64_t branching = 0;
  std::int64_t depth = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  static GenSpec path(std::int64_t n) { return {.family = Family::kPath, .n = n}; }
  static GenSpec cycle(std::int64_t n) { return {.family = Family::kCycle, .n = n}; }
  static GenSpec star(std::int64_t leaves) {
    return {.family = Family::kStar, .leaves = leaves};
  }
  static GenSpec balanced_tree(std::int64_t branching, std::int64_t depth) {
    return {.family = Family::kBalancedTree, .branching = branching, .depth = depth};
  }
  static GenSpec grid(std::int64_t rows, std::int64_t cols) {
    return {.family = Family::kGrid, .rows = rows, .cols = cols};
  }
  static GenSpec random_tree(std::int64_t n, std::uint64_t seed) {
    return {.family = Family::kRandomTree, .n = n, .seed = seed};
  }
  static GenSpec erdos_renyi(std::int64_t n, double p, std::uint64_t seed) {
    return {.family = Family::kErdosRenyi, .n = n, .p = p, .seed = seed};
  }

  /// Stable human-readable id, e.g. "balanced_tree(b=2,h=3)".
  std::string id() const {
    const std::string name = to_string(family);
    switch (family) {
      case Family::kPath:
      case Family::kCycle:
        return name + "(n=" + std::to_string(n) + ")";
      case Family::kStar:
        return name + "(m=" + std::to_string(leaves) + ")";
      case Family::kBalancedTree:
        return name + "(b=" + std::to_string(branching) + ",h=" + std::to_string(depth) + ")";
      case Family::kGrid:
        return name + "(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
      case Family::kRandomTree:
        return name + "(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
      case Family::kErdosRenyi:
        return name + "(n=" + std::to_string(n) + ",p=" + format_double(p) +
               ",seed=" + std::to_string(seed) + ")";
    }
    return name;
  }

  void validate() const {
    auto require = [&](bool ok, const std::string& constraint) {
      if (!ok) throw Error(std::string(to_string(family)) + ": requires " + constraint);
    };
    constexpr std::int64_t kMaxVertices = 1 << 30;
    switch (family) {
      case Family::kPath:
      case Family::kRandomTree:
        require(n >= 1 && n <= kMaxVertices, "n >= 1");
        break;
      case Family::kCycle:
        require(n >= 3 && n <= kMaxVertices, "n >= 3");
        break;
      case Family::kStar:
        require(leaves >= 1 && leaves < kMaxVertices, "leaves >= 1");
        break;
      case Family::kBalancedTree: {
        require(branching >= 2, "branching >= 2");
        require(depth >= 0, "depth >= 0");
        std::int64_t total = 1, level = 1;
        for (std::int64_t h = 0; h < depth; ++h) {
          level *= branching;
          total += level;
          require(total <= kMaxVertices, "fewer than 2^30 vertices");
        }
        break;
      }
      case Family::kGrid:
        require(rows >= 1 && cols >= 1, "rows >= 1 and cols >= 1");
        require(rows * cols <= kMaxVertices, "fewer than 2^30 vertices");
        break;
      case Family::kErdosRenyi:
        require(n >= 1 && n <= 100000, "1 <= n <= 100000");
        require(p > 0.0 && p <= 1.0, "0 < p <= 1");
        break;
    }
  }
};

inline constexpr int kErdosRenyiMaxAttempts = 1000;

inline Graph generate(const GenSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  auto vid = [](std::int64_t x) { return static_cast<vertex_t>(x); };

  switch (spec.family) {
    case Family::kPath:
      for (std::int64_t i = 0; i + 1 < spec.n; ++i) edges.push_back({vid(i), vid(i + 1)});
      return Graph(spec.n, std::move(edges));

    case Family::kCycle:
      for (std::int64_t i = 0; i < spec.n; ++i) {
        edges.push_back({vid(i), vid((i + 1) % spec.n)});
      }
      return Graph(spec.n, std::move(edges));

    case Family::kStar:
      for (std::int64_t i = 1; i <= spec.leaves; ++i) edges.push_back({0, vid(i)});
      return Graph(spec.leaves + 1, std::move(edges));

    case Family::kBalancedTree: {
      // Heap numbering: children of i are b*i + 1 .. b*i + b.
      std::int64_t total = 1, level = 1;
      for (std::int64_t h = 0; h < spec.depth; ++h) total += (level *= spec.branching);
      for (std::int64_t child = 1; child < total; ++child) {
        edges.push_back({vid((child - 1) / spec.branching), vid(child)});
      }
      return Graph(total, std::move(edges));
    }

    case Family::kGrid:
      for (std::int64_t r = 0; r < spec.rows; ++r) {
        for (std::int64_t c = 0; c < spec.cols; ++c) {
          const std::int64_t v = r * spec.cols + c;
          if (c + 1 < spec.cols) edges.push_back({vid(v), vid(v + 1)});
          if (r + 1 < spec.rows) edges.push_back({vid(v), vid(v + spec.cols)});
        }
      }
      return Graph(spec.rows * spec.cols, std::move(edges));

    case Family::kRandomTree: {
      // Random recursive tree: vertex i attaches to a uniform earlier vertex.
      Rng rng(spec.seed);
      for (std::int64_t i = 1; i < spec.n; ++i) {
        edges.push_back({vid(static_cast<std::int64_t>(rng.below(i))), vid(i)});
      }
      return Graph(spec.n, std::move(edges));
    }

    case Family::kErdosRenyi: {
      Rng rng(spec.seed);
      for (int attempt = 0; attempt < kErdosRenyiMaxAttempts; ++attempt) {
        edges.clear();
        for (std::int64_t u = 0; u < spec.n; ++u) {
          for (std::int64_t v = u + 1; v < spec.n; ++v) {
            if (rng.uniform() < spec.p) edges.push_back({vid(u), vid(v)});
          }
        }
        Graph g(spec.n, edges, /*allow_disconnected=*/true);
        if (g.connected()) return g;
      }
      throw Error("erdos_renyi: no connected sample after " +
                  std::to_string(kErdosRenyiMaxAttempts) + " attempts (n=" +
                  std::to_string(spec.n) + ", p=" + format_double(spec.p) + ")");
    }
  }
  throw Error("unknown family");
}

struct RayAlignedPath {
  Graph graph;
  Anchor anchor;
};

/// Path 0 - 1 - ... - (n-1) with anchor (0, n-1): every edge lies on the
/// base-to-target geodesic, so every Busemann gap is exactly 1.
inline RayAlignedPath ray_aligned_path(std::int64_t n) {
  if (n < 2) throw Error("ray_aligned_path: requires n >= 2");
  return {generate(GenSpec::path(n)), Anchor{0, static_cast<vertex_t>(n - 1)}};
}

}  // namespace horofilter

#endif  // HOROFILTER_GENERATORS_HPP_
