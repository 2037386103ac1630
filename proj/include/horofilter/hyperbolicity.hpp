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

// Four-point Gromov hyperbolicity.
//
// For a quadruple {x, y, u, v} let S1 >= S2 >= S3 be the three pair sums
// d(x,y)+d(u,v), d(x,u)+d(y,v), d(x,v)+d(y,u). The graph's four-point delta
// is the maximum of (S1 - S2) / 2 over all quadruples. Values are kept
// doubled so half-integers stay exact.

#ifndef HOROFILTER_HYPERBOLICITY_HPP_
#define HOROFILTER_HYPERBOLICITY_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "horofilter/graph.hpp"

namespace horofilter {

enum class DeltaMode { kExact, kSampled };

inline const char* to_string(DeltaMode m) {
  return m == DeltaMode::kExact ? "exact" : "sampled";
}

struct HyperbolicityReport {
  std::int64_t twice_delta = 0;
  DeltaMode mode = DeltaMode::kExact;
  std::uint64_t quadruples_checked = 0;
  std::array<vertex_t, 4> witness{0, 0, 0, 0};
  bool degenerate = false;  // fewer than four vertices

  double delta() const { return static_cast<double>(twice_delta) / 2.0; }
};

/// Twice the four-point value of one quadruple.
inline std::int64_t four_point_twice(const DistanceMatrix& d, std::size_t x, std::size_t y,
                                     std::size_t u, std::size_t v) {
  std::int64_t s[3] = {std::int64_t{d(x, y)} + d(u, v), std::int64_t{d(x, u)} + d(y, v),
                       std::int64_t{d(x, v)} + d(y, u)};
  if (s[0] < s[1]) std::swap(s[0], s[1]);
  if (s[1] < s[2]) std::swap(s[1], s[2]);
  if (s[0] < s[1]) std::swap(s[0], s[1]);
  return s[0] - s[1];
}

namespace detail {

inline void require_connected(const Graph& g) {
  if (!g.connected()) throw Error("hyperbolicity requires a connected graph");
}

}  // namespace detail

/// Exhaustive maximum over all C(n,4) quadruples, parallel over the outer
/// index. The witness is the lexicographically smallest maximizer.
inline HyperbolicityReport delta_exact(const Graph& g, std::size_t threads = default_threads(),
                                       std::size_t cap = kDefaultAllPairsCap) {
  detail::require_connected(g);
  HyperbolicityReport report;
  report.mode = DeltaMode::kExact;
  const std::size_t n = g.vertex_count();
  if (n < 4) {
    report.degenerate = true;
    return report;
  }
  const DistanceMatrix d = all_pairs_distances(g, cap, threads);

  struct Best {
    std::int64_t value = -1;
    std::array<vertex_t, 4> witness{};
    std::uint64_t checked = 0;
  };
  std::vector<Best> per_outer(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      Best best;
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t e = c + 1; e < n; ++e) {
            const std::int64_t value = four_point_twice(d, a, b, c, e);
            ++best.checked;
            if (value > best.value) {
              best.value = value;
              best.witness = {static_cast<vertex_t>(a), static_cast<vertex_t>(b),
                              static_cast<vertex_t>(c), static_cast<vertex_t>(e)};
            }
          }
        }
      }
      per_outer[a] = best;
    }
  });

  report.twice_delta = -1;
  for (const auto& best : per_outer) {
    report.quadruples_checked += best.checked;
    if (best.value > report.twice_delta) {
      report.twice_delta = best.value;
      report.witness = best.witness;
    }
  }
  return report;
}

/// Maximum over `samples` uniformly drawn quadruples of distinct vertices;
/// a lower bound on delta_exact. Distances come from BFS rows computed on
/// demand, so no dense matrix is required.
inline HyperbolicityReport delta_sampled(const Graph& g, std::uint64_t samples,
                                         std::uint64_t seed) {
  detail::require_connected(g);
  if (samples == 0) throw Error("delta_sampled: samples must be >= 1");
  HyperbolicityReport report;
  report.mode = DeltaMode::kSampled;
  const std::size_t n = g.vertex_count();
  if (n < 4) {
    report.degenerate = true;
    return report;
  }

  Rng rng(seed);
  std::vector<std::vector<hop_t>> cache(n);
  auto dist = [&](vertex_t a, vertex_t b) -> std::int64_t {
    if (cache[a].empty()) cache[a] = bfs_distances(g, a).dist;
    return cache[a][b];
  };

  report.twice_delta = -1;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::array<vertex_t, 4> q{};
    for (int k = 0; k < 4; ++k) {
      bool fresh;
      do {
        q[k] = static_cast<vertex_t>(rng.below(n));
        fresh = true;
        for (int j = 0; j < k; ++j) fresh = fresh && q[j] != q[k];
      } while (!fresh);
    }
    std::sort(q.begin(), q.end());
    std::int64_t sums[3] = {dist(q[0], q[1]) + dist(q[2], q[3]),
                            dist(q[0], q[2]) + dist(q[1], q[3]),
                            dist(q[0], q[3]) + dist(q[1], q[2])};
    std::sort(sums, sums + 3);
    const std::int64_t value = sums[2] - sums[1];
    ++report.quadruples_checked;
    if (value > report.twice_delta ||
        (value == report.twice_delta && q < report.witness)) {
      report.twice_delta = value;
      report.witness = q;
    }
  }
  return report;
}

}  // namespace horofilter

#endif  // HOROFILTER_HYPERBOLICITY_HPP_
