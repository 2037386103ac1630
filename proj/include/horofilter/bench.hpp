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

// Timing harness for apply(). Graph generation, the Busemann field, the
// operator, and the output buffers are set up outside the timed region; only
// the layer application is measured.

#ifndef HOROFILTER_BENCH_HPP_
#define HOROFILTER_BENCH_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "horofilter/boundary.hpp"
#include "horofilter/filter.hpp"
#include "horofilter/generators.hpp"

namespace horofilter {

struct BenchConfig {
  Family family = Family::kRandomTree;
  std::vector<std::int64_t> sizes;  // vertex counts
  std::vector<std::size_t> dims{16};
  double alpha = 1.0;
  std::size_t repeats = 9;
  bool dense_mixing = false;  // random unit-norm A instead of the identity
  double p = 0.1;             // erdos_renyi only
  std::uint64_t seed = 1;
  std::size_t threads = default_threads();
};

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t d = 0;
  double median_ns = 0.0;
  double per_edge_per_channel_ns = 0.0;
  std::uint64_t output_hash = 0;
};

/// FNV-1a over the bytes of the output values.
inline std::uint64_t signal_hash(const Signal& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : s.values()) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

/// Random d x d matrix scaled to spectral norm 1.
inline MixingMatrix random_unit_mixing(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = rng.normal();
  return MixingMatrix::from_dense(std::move(a), NormPolicy::kRescale);
}

inline GenSpec bench_spec(const BenchConfig& cfg, std::int64_t n) {
  switch (cfg.family) {
    case Family::kPath: return GenSpec::path(n);
    case Family::kCycle: return GenSpec::cycle(n);
    case Family::kStar: return GenSpec::star(n - 1);
    case Family::kRandomTree: return GenSpec::random_tree(n, cfg.seed);
    case Family::kErdosRenyi: return GenSpec::erdos_renyi(n, cfg.p, cfg.seed);
    case Family::kGrid: {
      const auto side = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
      return GenSpec::grid(side, side);
    }
    case Family::kBalancedTree:
      break;
  }
  throw Error(std::string("bench does not support family ") + to_string(cfg.family));
}

inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.sizes.empty() || cfg.dims.empty()) throw Error("bench needs sizes and dims");
  if (cfg.repeats == 0) throw Error("bench needs repeats >= 1");
  for (std::size_t i = 1; i < cfg.sizes.size(); ++i) {
    if (cfg.sizes[i] <= cfg.sizes[i - 1]) throw Error("bench sizes must be increasing");
  }
  for (std::size_t d : cfg.dims) {
    if (d == 0) throw Error("bench dims must be >= 1");
  }

  std::vector<BenchRow> rows;
  for (std::int64_t n : cfg.sizes) {
    const Graph g = generate(bench_spec(cfg, n));
    const Anchor anchor = eccentric_anchor(g, 0);
    const BusemannField field = busemann_field(g, anchor);
    const EdgeWeights ew = edge_weights_single(g, field, cfg.alpha);
    for (std::size_t d : cfg.dims) {
      MixingMatrix a = cfg.dense_mixing ? random_unit_mixing(d, cfg.seed) : MixingMatrix::identity(d);
      const FilterOperator op = build_operator(g, ew, std::move(a));
      const Signal f = random_signal(g.vertex_count(), d, cfg.seed);
      Signal out(g.vertex_count(), d), mixed(g.vertex_count(), d);

      std::vector<double> times;
      times.reserve(cfg.repeats);
      std::uint64_t hash = 0;
      for (std::size_t r = 0; r < cfg.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        apply_into(op, f, out, mixed, cfg.threads);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
        const std::uint64_t h = signal_hash(out);
        if (r > 0 && h != hash) throw Error("apply output changed between repeats");
        hash = h;
      }
      std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
      BenchRow row;
      row.family = to_string(cfg.family);
      row.n = g.vertex_count();
      row.edges = g.edge_count();
      row.d = d;
      row.median_ns = times[times.size() / 2];
      row.per_edge_per_channel_ns =
          row.edges ? row.median_ns / static_cast<double>(row.edges * d) : 0.0;
      row.output_hash = hash;
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = "family,n,edges,d,median_ns,per_edge_per_channel_ns\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.d) + "," + format_double(r.median_ns) + "," +
           format_double(r.per_edge_per_channel_ns) + "\n";
  }
  return out;
}

/// Least-squares slope of log(median_ns) against log(edges) for one d.
inline double loglog_slope(const std::vector<BenchRow>& rows, std::size_t d) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.d != d || r.edges == 0 || r.median_ns <= 0.0) continue;
    xs.push_back(std::log(static_cast<double>(r.edges)));
    ys.push_back(std::log(r.median_ns));
  }
  if (xs.size() < 2) throw Error("slope needs at least two sizes");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace horofilter

#endif  // HOROFILTER_BENCH_HPP_
