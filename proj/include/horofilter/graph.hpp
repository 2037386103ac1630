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

// Undirected simple graph with unit edge lengths, stored as compressed
// adjacency, plus hop-distance queries and the edge-list text format.

#ifndef HOROFILTER_GRAPH_HPP_
#define HOROFILTER_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horofilter/common.hpp"

namespace horofilter {

struct Edge {
  vertex_t u;
  vertex_t v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  /// Builds the graph from an arbitrary edge list. Reversed and duplicate
  /// pairs collapse to one edge. Throws Error on self-loops, out-of-range
  /// ids, or (unless allow_disconnected) a disconnected result.
  Graph(std::size_t n, std::vector<Edge> edges, bool allow_disconnected = false)
      : n_(n) {
    if (n == 0) throw Error("graph must have at least one vertex");
    if (n > static_cast<std::size_t>(std::numeric_limits<vertex_t>::max())) {
      throw Error("too many vertices");
    }
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
          static_cast<std::size_t>(e.v) >= n) {
        throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") has a vertex id outside [0, " + std::to_string(n) + ")");
      }
      if (e.u == e.v) {
        throw Error("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    neighbors_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      neighbors_[cursor[e.u]++] = e.v;
      neighbors_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
      max_degree_ = std::max(max_degree_, offsets_[v + 1] - offsets_[v]);
    }

    connected_ = count_reachable(0) == n;
    if (!connected_ && !allow_disconnected) {
      throw Error("graph is disconnected");
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool connected() const noexcept { return connected_; }

  /// Edges with u < v in lexicographic order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Offset of v's first neighbor in the flat adjacency array; row v of any
  /// adjacency-patterned sparse matrix starts here.
  std::size_t row_offset(vertex_t v) const { return offsets_[v]; }
  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const vertex_t> adjacency() const noexcept { return neighbors_; }

  bool has_edge(vertex_t u, vertex_t v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void check_vertex(vertex_t v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) {
      throw Error("vertex " + std::to_string(v) + " out of range [0, " +
                  std::to_string(n_) + ")");
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t count_reachable(vertex_t source) const {
    std::vector<char> seen(n_, 0);
    std::vector<vertex_t> stack{source};
    seen[source] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const vertex_t v = stack.back();
      stack.pop_back();
      for (vertex_t u : neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count;
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<vertex_t> neighbors_;
  std::size_t max_degree_ = 0;
  bool connected_ = true;
};

// ---------------------------------------------------------------------------
// Distances

using hop_t = std::int32_t;
inline constexpr hop_t kUnreachable = std::numeric_limits<hop_t>::max();

struct DistanceRow {
  vertex_t source = 0;
  std::vector<hop_t> dist;

  /// Distance to v; throws if v lies in another component.
  hop_t at(vertex_t v) const {
    const hop_t d = dist.at(static_cast<std::size_t>(v));
    if (d == kUnreachable) {
      throw Error("vertex " + std::to_string(v) + " is unreachable from " +
                  std::to_string(source));
    }
    return d;
  }
};

inline DistanceRow bfs_distances(const Graph& g, vertex_t source) {
  g.check_vertex(source);
  DistanceRow row{source, std::vector<hop_t>(g.vertex_count(), kUnreachable)};
  std::vector<vertex_t> queue;
  queue.reserve(g.vertex_count());
  queue.push_back(source);
  row.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t v = queue[head];
    const hop_t next = row.dist[v] + 1;
    for (vertex_t u : g.neighbors(v)) {
      if (row.dist[u] == kUnreachable) {
        row.dist[u] = next;
        queue.push_back(u);
      }
    }
  }
  return row;
}

/// Dense n x n hop-count matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  hop_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  hop_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const hop_t> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<hop_t> data_;
};

inline constexpr std::size_t kDefaultAllPairsCap = 2000;

/// One BFS per source, parallel over sources. Rows are written
/// independently, so the result is identical for any thread count.
inline DistanceMatrix all_pairs_distances(const Graph& g,
                                          std::size_t cap = kDefaultAllPairsCap,
                                          std::size_t threads = default_threads()) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw Error("all-pairs distances requested for " + std::to_string(n) +
                " vertices, above the cap of " + std::to_string(cap) +
                "; use the sampled mode instead");
  }
  DistanceMatrix out(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const auto row = bfs_distances(g, static_cast<vertex_t>(s));
      for (std::size_t t = 0; t < n; ++t) out(s, t) = row.dist[t];
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment
//   n=<k>          optional, first non-comment line
//   u v            one edge per line

inline Graph load_edge_list(std::string_view text, bool allow_disconnected = false) {
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  bool has_declared_n = false;
  bool seen_content = false;
  vertex_t max_id = -1;
  std::size_t line_no = 0;

  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("n=")) {
      if (seen_content) throw ParseError("\"n=\" header must precede edges", line_no);
      if (!parse_number(line.substr(2), declared_n) || declared_n == 0) {
        throw ParseError("invalid vertex count \"" + std::string(line) + "\"", line_no);
      }
      has_declared_n = true;
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<std::string_view> tokens;
    for (std::string_view tok : split(line, ' ')) {
      for (std::string_view t : split(tok, '\t')) {
        if (!t.empty()) tokens.push_back(t);
      }
    }
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids, got \"" + std::string(line) + "\"",
                       line_no);
    }
    vertex_t ids[2];
    for (int k = 0; k < 2; ++k) {
      if (!parse_number(tokens[k], ids[k]) || ids[k] < 0) {
        throw ParseError("invalid vertex id \"" + std::string(tokens[k]) + "\"",
                         line_no);
      }
    }
    if (ids[0] == ids[1]) {
      throw ParseError("self-loop at vertex " + std::to_string(ids[0]), line_no);
    }
    max_id = std::max({max_id, ids[0], ids[1]});
    edges.push_back({ids[0], ids[1]});
  }

  std::size_t n = static_cast<std::size_t>(max_id + 1);
  if (has_declared_n) {
    if (declared_n < n) {
      throw ParseError("declared n=" + std::to_string(declared_n) +
                           " but vertex id " + std::to_string(max_id) + " appears",
                       0);
    }
    n = declared_n;
  }
  if (n == 0) throw ParseError("empty edge list without an \"n=\" header", 0);
  return Graph(n, std::move(edges), allow_disconnected);
}

/// Sorted "u v" lines with u < v. An "n=<k>" header is written only when the
/// vertex count is not implied by the largest id.
inline std::string save_edge_list(const Graph& g) {
  std::string out;
  vertex_t max_id = -1;
  for (const auto& e : g.edges()) max_id = std::max(max_id, e.v);
  if (static_cast<std::size_t>(max_id + 1) != g.vertex_count()) {
    out += "n=" + std::to_string(g.vertex_count()) + "\n";
  }
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace horofilter

#endif  // HOROFILTER_GRAPH_HPP_
