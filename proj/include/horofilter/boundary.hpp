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

// Busemann (horofunction) fields on finite graphs.
//
// A finite graph has no geodesic rays, so the boundary direction is stood in
// for by a target vertex z and the field is the horofunction based at z,
// normalized to vanish at the base o:
//
//   beta(v) = d(v, z) - d(o, z).
//
// Under unit edge lengths the field is integer valued, 1-Lipschitz along
// edges, and decreases at unit speed along every shortest o -> z path.

#ifndef HOROFILTER_BOUNDARY_HPP_
#define HOROFILTER_BOUNDARY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "horofilter/graph.hpp"

namespace horofilter {

struct Anchor {
  vertex_t base = 0;
  vertex_t target = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

inline void validate_anchor(const Graph& g, const Anchor& a) {
  g.check_vertex(a.base);
  g.check_vertex(a.target);
  if (a.base == a.target) {
    throw Error("anchor base and target must differ (both are " +
                std::to_string(a.base) + ")");
  }
}

class BusemannField {
 public:
  BusemannField(Anchor anchor, std::vector<std::int64_t> beta)
      : anchor_(anchor), beta_(std::move(beta)) {}

  const Anchor& anchor() const noexcept { return anchor_; }
  std::size_t size() const noexcept { return beta_.size(); }
  std::int64_t operator[](std::size_t v) const { return beta_[v]; }
  const std::vector<std::int64_t>& values() const noexcept { return beta_; }

 private:
  Anchor anchor_;
  std::vector<std::int64_t> beta_;
};

inline BusemannField busemann_field(const Graph& g, const Anchor& a) {
  validate_anchor(g, a);
  const DistanceRow from_target = bfs_distances(g, a.target);
  if (from_target.dist[a.base] == kUnreachable) {
    throw Error("target " + std::to_string(a.target) + " is unreachable from base " +
                std::to_string(a.base));
  }
  const std::int64_t offset = from_target.dist[a.base];
  std::vector<std::int64_t> beta(g.vertex_count());
  for (std::size_t v = 0; v < beta.size(); ++v) {
    if (from_target.dist[v] == kUnreachable) {
      throw Error("vertex " + std::to_string(v) + " is unreachable from target " +
                  std::to_string(a.target));
    }
    beta[v] = static_cast<std::int64_t>(from_target.dist[v]) - offset;
  }
  return BusemannField(a, std::move(beta));
}

/// Per-edge |beta(u) - beta(v)|, aligned with g.edges().
struct EdgeGaps {
  std::vector<std::int64_t> gap;
  std::int64_t min_gap = 0;
  std::int64_t max_gap = 0;
};

inline EdgeGaps edge_gaps(const Graph& g, const BusemannField& f) {
  if (f.size() != g.vertex_count()) {
    throw Error("field has " + std::to_string(f.size()) + " values but the graph has " +
                std::to_string(g.vertex_count()) + " vertices");
  }
  EdgeGaps out;
  out.gap.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const std::int64_t d = f[e.u] - f[e.v];
    out.gap.push_back(d < 0 ? -d : d);
  }
  if (!out.gap.empty()) {
    const auto [lo, hi] = std::minmax_element(out.gap.begin(), out.gap.end());
    out.min_gap = *lo;
    out.max_gap = *hi;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Anchor selection

enum class AnchorStrategy { kDiameterEndpoints, kEccentricFrom, kExplicit };

inline const char* to_string(AnchorStrategy s) {
  switch (s) {
    case AnchorStrategy::kDiameterEndpoints: return "diameter_endpoints";
    case AnchorStrategy::kEccentricFrom: return "eccentric_from";
    case AnchorStrategy::kExplicit: return "explicit";
  }
  return "?";
}

inline AnchorStrategy parse_anchor_strategy(std::string_view s) {
  if (s == "diameter_endpoints" || s == "diameter-endpoints" || s == "diameter") {
    return AnchorStrategy::kDiameterEndpoints;
  }
  if (s == "eccentric_from" || s == "eccentric-from" || s == "eccentric") {
    return AnchorStrategy::kEccentricFrom;
  }
  if (s == "explicit") return AnchorStrategy::kExplicit;
  throw Error("unknown anchor strategy \"" + std::string(s) + "\"");
}

/// Farthest vertex from o; ties go to the smallest id.
inline Anchor eccentric_anchor(const Graph& g, vertex_t base) {
  if (g.vertex_count() < 2) throw Error("anchor selection needs at least 2 vertices");
  const auto row = bfs_distances(g, base);
  vertex_t best = -1;
  for (std::size_t v = 0; v < row.dist.size(); ++v) {
    if (row.dist[v] == kUnreachable) continue;
    if (best < 0 || row.dist[v] > row.dist[best]) best = static_cast<vertex_t>(v);
  }
  if (best == base) throw Error("base vertex has no reachable neighbors");
  return {base, best};
}

/// Lexicographically smallest (o, z), o < z, with d(o, z) equal to the
/// diameter. Runs one BFS per vertex.
inline Anchor diameter_anchor(const Graph& g) {
  if (g.vertex_count() < 2) throw Error("anchor selection needs at least 2 vertices");
  Anchor best{0, 0};
  hop_t best_d = -1;
  for (std::size_t o = 0; o < g.vertex_count(); ++o) {
    const auto row = bfs_distances(g, static_cast<vertex_t>(o));
    for (std::size_t z = o + 1; z < row.dist.size(); ++z) {
      if (row.dist[z] != kUnreachable && row.dist[z] > best_d) {
        best_d = row.dist[z];
        best = {static_cast<vertex_t>(o), static_cast<vertex_t>(z)};
      }
    }
  }
  return best;
}

/// `explicit_anchor` is used by kExplicit and its base by kEccentricFrom.
inline Anchor suggest_anchor(const Graph& g, AnchorStrategy strategy,
                             Anchor explicit_anchor = {0, 0}) {
  if (g.vertex_count() < 2) throw Error("anchor selection needs at least 2 vertices");
  switch (strategy) {
    case AnchorStrategy::kDiameterEndpoints:
      return diameter_anchor(g);
    case AnchorStrategy::kEccentricFrom:
      g.check_vertex(explicit_anchor.base);
      return eccentric_anchor(g, explicit_anchor.base);
    case AnchorStrategy::kExplicit:
      validate_anchor(g, explicit_anchor);
      return explicit_anchor;
  }
  throw Error("unknown anchor strategy");
}

// ---------------------------------------------------------------------------
// Multi-anchor mixtures

struct WeightedTarget {
  vertex_t target = 0;
  double alpha = 0.0;
};

struct MultiAnchorConfig {
  vertex_t base = 0;
  std::vector<WeightedTarget> anchors;

  double bar_alpha() const {
    double m = 0.0;
    for (const auto& a : anchors) m = std::max(m, a.alpha);
    return m;
  }

  /// Throws unless M >= 1, every coefficient is positive, targets differ
  /// from the base, and the coefficients sum to 1 within 1e-12.
  void validate() const {
    if (anchors.empty()) throw Error("multi-anchor config needs at least one anchor");
    double sum = 0.0;
    for (const auto& a : anchors) {
      if (!(a.alpha > 0.0) || !std::isfinite(a.alpha)) {
        throw Error("anchor coefficient " + format_double(a.alpha) + " is not positive");
      }
      if (a.target == base) {
        throw Error("anchor target " + std::to_string(a.target) + " equals the base");
      }
      sum += a.alpha;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw Error("anchor coefficients sum to " + format_double(sum) +
                  ", expected 1 within 1e-12");
    }
  }
};

inline std::vector<BusemannField> busemann_fields(const Graph& g,
                                                  const MultiAnchorConfig& cfg) {
  cfg.validate();
  std::vector<BusemannField> fields;
  fields.reserve(cfg.anchors.size());
  for (const auto& a : cfg.anchors) fields.push_back(busemann_field(g, {cfg.base, a.target}));
  return fields;
}

}  // namespace horofilter

#endif  // HOROFILTER_BOUNDARY_HPP_
