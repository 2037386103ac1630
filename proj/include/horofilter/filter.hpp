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

// Boundary-weighted filter.
//
// Each edge is scaled by an exponential of its Busemann gap,
//
//   w(u, v) = exp(-alpha * |beta(u) - beta(v)|),
//
// or, for M anchors sharing one base, by the convex mixture
//
//   w(u, v) = sum_m alpha_m * exp(-alpha_m * |beta_m(u) - beta_m(v)|).
//
// The layer sends features along edges and mixes channels with a d x d
// matrix A:
//
//   (T f)(v) = sum_{u in N(v)} w(u, v) * A f(u).
//
// W is stored receiver-major: row v holds the weights of messages into v.

#ifndef HOROFILTER_FILTER_HPP_
#define HOROFILTER_FILTER_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "horofilter/boundary.hpp"
#include "horofilter/graph.hpp"
#include "horofilter/sparse.hpp"

namespace horofilter {

enum class Normalize { kNone, kRowStochastic };

inline const char* to_string(Normalize n) {
  return n == Normalize::kNone ? "none" : "row";
}

inline Normalize parse_normalize(std::string_view s) {
  if (s == "none") return Normalize::kNone;
  if (s == "row" || s == "row_stochastic" || s == "row-stochastic") {
    return Normalize::kRowStochastic;
  }
  throw Error("unknown normalize mode \"" + std::string(s) + "\"");
}

// ---------------------------------------------------------------------------
// Edge weights

enum class WeightMode { kSingle, kMulti };

struct EdgeWeights {
  WeightMode mode = WeightMode::kSingle;
  /// Aligned with Graph::edges().
  std::vector<double> weight;
  /// gaps[m][e]: Busemann gap of edge e under anchor m. One row in single
  /// mode.
  std::vector<std::vector<std::int64_t>> gaps;
  /// Per-anchor scale: {alpha} in single mode, the mixture coefficients in
  /// multi mode.
  std::vector<double> alphas;
  double min_weight = 1.0;
  double max_weight = 1.0;
};

namespace detail {

inline void summarize(EdgeWeights& ew) {
  if (ew.weight.empty()) return;
  const auto [lo, hi] = std::minmax_element(ew.weight.begin(), ew.weight.end());
  ew.min_weight = *lo;
  ew.max_weight = *hi;
}

}  // namespace detail

inline EdgeWeights edge_weights_single(const Graph& g, const BusemannField& field,
                                       double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error("alpha must be positive, got " + format_double(alpha));
  }
  EdgeGaps gaps = edge_gaps(g, field);
  EdgeWeights ew;
  ew.mode = WeightMode::kSingle;
  ew.alphas = {alpha};
  ew.weight.reserve(gaps.gap.size());
  for (std::int64_t gap : gaps.gap) {
    ew.weight.push_back(std::exp(-alpha * static_cast<double>(gap)));
  }
  ew.gaps.push_back(std::move(gaps.gap));
  detail::summarize(ew);
  return ew;
}

inline EdgeWeights edge_weights_multi(const Graph& g, const std::vector<BusemannField>& fields,
                                      const MultiAnchorConfig& cfg) {
  cfg.validate();
  if (fields.size() != cfg.anchors.size()) {
    throw Error("got " + std::to_string(fields.size()) + " fields for " +
                std::to_string(cfg.anchors.size()) + " anchors");
  }
  EdgeWeights ew;
  ew.mode = WeightMode::kMulti;
  for (std::size_t m = 0; m < fields.size(); ++m) {
    const Anchor expected{cfg.base, cfg.anchors[m].target};
    if (!(fields[m].anchor() == expected)) {
      throw Error("field " + std::to_string(m) + " does not match anchor (" +
                  std::to_string(expected.base) + "," + std::to_string(expected.target) +
                  ")");
    }
    ew.gaps.push_back(edge_gaps(g, fields[m]).gap);
    ew.alphas.push_back(cfg.anchors[m].alpha);
  }
  ew.weight.assign(g.edge_count(), 0.0);
  for (std::size_t e = 0; e < ew.weight.size(); ++e) {
    double w = 0.0;
    for (std::size_t m = 0; m < ew.alphas.size(); ++m) {
      w += ew.alphas[m] * std::exp(-ew.alphas[m] * static_cast<double>(ew.gaps[m][e]));
    }
    ew.weight[e] = w;
  }
  detail::summarize(ew);
  return ew;
}

// ---------------------------------------------------------------------------
// Mixing matrix

enum class NormPolicy {
  kAccept,   // take A as given
  kEnforce,  // reject if ||A||_2 > 1 + 1e-9
  kRescale,  // divide by ||A||_2 when it exceeds 1
};

inline constexpr double kUnitNormSlack = 1e-9;

inline double dense_spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

class MixingMatrix {
 public:
  static MixingMatrix identity(std::size_t d) {
    if (d == 0) throw Error("mixing matrix dimension must be >= 1");
    return MixingMatrix(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                  static_cast<Eigen::Index>(d)),
                        1.0, true);
  }

  static MixingMatrix from_dense(Eigen::MatrixXd a, NormPolicy policy) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
      throw Error("mixing matrix must be square and non-empty");
    }
    if (!a.allFinite()) throw Error("mixing matrix has non-finite entries");
    double norm = dense_spectral_norm(a);
    if (norm > 1.0 + kUnitNormSlack) {
      if (policy == NormPolicy::kEnforce) {
        throw Error("mixing matrix has spectral norm " + format_double(norm) +
                    " > 1 (unit-norm contract)");
      }
      if (policy == NormPolicy::kRescale) {
        a /= norm;
        norm = dense_spectral_norm(a);
      }
    }
    const bool is_identity = a.isIdentity(0.0);
    return MixingMatrix(std::move(a), norm, is_identity);
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return a_; }
  double spectral_norm() const noexcept { return norm_; }
  bool is_identity() const noexcept { return identity_; }

 private:
  MixingMatrix(Eigen::MatrixXd a, double norm, bool identity)
      : a_(std::move(a)), norm_(norm), identity_(identity) {}

  Eigen::MatrixXd a_;
  double norm_;
  bool identity_;
};

// ---------------------------------------------------------------------------
// Signals

/// n x d feature matrix, row-major.
class Signal {
 public:
  Signal(std::size_t n, std::size_t d) : n_(n), d_(d), values_(n * d, 0.0) {}
  Signal(std::size_t n, std::size_t d, std::vector<double> values)
      : n_(n), d_(d), values_(std::move(values)) {
    if (values_.size() != n * d) throw Error("signal value count does not match n*d");
    for (double x : values_) {
      if (!std::isfinite(x)) throw Error("signal has non-finite entries");
    }
  }

  std::size_t vertices() const noexcept { return n_; }
  std::size_t channels() const noexcept { return d_; }
  double& operator()(std::size_t v, std::size_t c) { return values_[v * d_ + c]; }
  double operator()(std::size_t v, std::size_t c) const { return values_[v * d_ + c]; }
  std::span<const double> row(std::size_t v) const { return {values_.data() + v * d_, d_}; }
  std::span<double> row(std::size_t v) { return {values_.data() + v * d_, d_}; }
  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double norm() const {
    double s = 0.0;
    for (double x : values_) s += x * x;
    return std::sqrt(s);
  }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> values_;
};

inline Signal random_signal(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Signal s(n, d);
  for (double& x : s.values()) x = rng.normal();
  return s;
}

// ---------------------------------------------------------------------------
// Operator

struct FilterOperator {
  CsrMatrix weights;  // receiver-major W
  MixingMatrix mixing = MixingMatrix::identity(1);
  Normalize normalize = Normalize::kNone;

  std::size_t vertices() const noexcept { return weights.n; }
  std::size_t channels() const noexcept { return mixing.dim(); }
};

inline FilterOperator build_operator(const Graph& g, const EdgeWeights& ew, MixingMatrix mixing,
                                     Normalize normalize = Normalize::kNone) {
  if (ew.weight.size() != g.edge_count()) {
    throw Error("edge weight count " + std::to_string(ew.weight.size()) +
                " does not match edge count " + std::to_string(g.edge_count()));
  }
  const std::size_t n = g.vertex_count();
  CsrMatrix w;
  w.n = n;
  w.offsets.assign(g.row_offsets().begin(), g.row_offsets().end());
  w.cols.assign(g.adjacency().begin(), g.adjacency().end());
  w.values.assign(w.cols.size(), 0.0);

  // Edges are sorted (u < v); each lands in row u at column v and row v at
  // column u. Locate positions by binary search in the sorted rows.
  const auto edges = g.edges();
  auto slot = [&](vertex_t row, vertex_t col) {
    const auto begin = w.cols.begin() + static_cast<std::ptrdiff_t>(w.offsets[row]);
    const auto end = w.cols.begin() + static_cast<std::ptrdiff_t>(w.offsets[row + 1]);
    return static_cast<std::size_t>(std::lower_bound(begin, end, col) - w.cols.begin());
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    w.values[slot(edges[e].u, edges[e].v)] = ew.weight[e];
    w.values[slot(edges[e].v, edges[e].u)] = ew.weight[e];
  }

  if (normalize == Normalize::kRowStochastic) {
    for (std::size_t v = 0; v < n; ++v) {
      const double s = w.row_sum(v);
      if (s <= 0.0) continue;  // isolated vertex (single-vertex graph)
      for (std::size_t k = w.offsets[v]; k < w.offsets[v + 1]; ++k) w.values[k] /= s;
    }
  }
  return FilterOperator{std::move(w), std::move(mixing), normalize};
}

inline constexpr std::size_t kPrefetchDistance = 16;

/// out(v) = sum_{u in N(v)} W[v,u] * A f(u). A f(u) is formed once per
/// vertex, then neighbors are summed in increasing id order. Writes into
/// caller-owned buffers; `mixed` holds A f and is untouched when A = I.
/// `out` must not alias `f`.
inline void apply_into(const FilterOperator& op, const Signal& f, Signal& out, Signal& mixed,
                       std::size_t threads = default_threads()) {
  const std::size_t n = op.vertices();
  const std::size_t d = op.channels();
  if (f.vertices() != n || f.channels() != d) {
    throw Error("signal shape " + std::to_string(f.vertices()) + "x" +
                std::to_string(f.channels()) + " does not match operator " +
                std::to_string(n) + "x" + std::to_string(d));
  }
  if (&out == &f) throw Error("apply_into: output aliases input");
  if (out.vertices() != n || out.channels() != d) out = Signal(n, d);

  const double* in = f.values().data();
  if (!op.mixing.is_identity()) {
    if (mixed.vertices() != n || mixed.channels() != d) mixed = Signal(n, d);
    const Eigen::MatrixXd& a = op.mixing.matrix();
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t u = begin; u < end; ++u) {
        const double* src = f.values().data() + u * d;
        double* dst = mixed.values().data() + u * d;
        for (std::size_t i = 0; i < d; ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            acc += a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * src[j];
          }
          dst[i] = acc;
        }
      }
    });
    in = mixed.values().data();
  }

  const CsrMatrix& w = op.weights;
  const std::size_t row_bytes = d * sizeof(double);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    const std::size_t last = w.offsets[end];
    for (std::size_t v = begin; v < end; ++v) {
      double* dst = out.values().data() + v * d;
      std::fill(dst, dst + d, 0.0);
      for (std::size_t k = w.offsets[v]; k < w.offsets[v + 1]; ++k) {
        // Neighbor rows are scattered; fetch a few entries ahead.
        if (k + kPrefetchDistance < last) {
          const char* ahead = reinterpret_cast<const char*>(
              in + static_cast<std::size_t>(w.cols[k + kPrefetchDistance]) * d);
          for (std::size_t b = 0; b < row_bytes; b += 64) __builtin_prefetch(ahead + b);
        }
        const double weight = w.values[k];
        const double* src = in + static_cast<std::size_t>(w.cols[k]) * d;
        for (std::size_t c = 0; c < d; ++c) dst[c] += weight * src[c];
      }
    }
  });
}

inline Signal apply(const FilterOperator& op, const Signal& f,
                    std::size_t threads = default_threads()) {
  Signal out(op.vertices(), op.channels());
  Signal mixed(0, 0);
  apply_into(op, f, out, mixed, threads);
  return out;
}

/// k successive applications with no nonlinearity in between; k = 0 returns
/// the input.
inline Signal apply_stacked(const FilterOperator& op, const Signal& f, std::size_t k,
                            std::size_t threads = default_threads()) {
  Signal current = f;
  Signal next(0, 0), mixed(0, 0);
  for (std::size_t i = 0; i < k; ++i) {
    apply_into(op, current, next, mixed, threads);
    std::swap(current, next);
  }
  return current;
}

}  // namespace horofilter

#endif  // HOROFILTER_FILTER_HPP_
