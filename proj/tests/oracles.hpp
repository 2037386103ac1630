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

// Reference computations used only by tests. Each works from first
// principles (edge lists, dense matrices) and shares no code path with the
// library routine it checks.

#ifndef HOROFILTER_TESTS_ORACLES_HPP_
#define HOROFILTER_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "horofilter/graph.hpp"

namespace oracle {

using horofilter::Graph;

inline constexpr long kInf = std::numeric_limits<long>::max() / 4;

/// Floyd-Warshall over the raw edge list.
inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) {
    d[e.u][e.v] = 1;
    d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// Twice the Gromov-product form of delta: maximum over ordered (x,y,z,w)
/// of min((x|z)_w, (y|z)_w) - (x|y)_w, everything doubled.
inline long twice_delta_gromov_product(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.vertex_count();
  auto twice_product = [&](std::size_t x, std::size_t y, std::size_t w) {
    return d[x][w] + d[y][w] - d[x][y];
  };
  long best = 0;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const long v = std::min(twice_product(x, z, w), twice_product(y, z, w)) -
                         twice_product(x, y, w);
          best = std::max(best, v);
        }
      }
    }
  }
  return best;
}

/// Dense W[v][u] = exp(-alpha |beta(u) - beta(v)|) with beta from
/// Floyd-Warshall distances to the target, optionally row-normalized.
inline Eigen::MatrixXd dense_filter_matrix(const Graph& g, int base, int target, double alpha,
                                           bool row_stochastic) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.vertex_count();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double bu = static_cast<double>(d[e.u][target] - d[base][target]);
    const double bv = static_cast<double>(d[e.v][target] - d[base][target]);
    const double x = std::exp(-alpha * std::abs(bu - bv));
    w(e.u, e.v) = x;
    w(e.v, e.u) = x;
  }
  if (row_stochastic) {
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      const double s = w.row(r).sum();
      if (s > 0) w.row(r) /= s;
    }
  }
  return w;
}

inline double largest_singular_value(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

/// Kronecker product W (x) A, the layer on the vertex-major flattening.
inline Eigen::MatrixXd kronecker(const Eigen::MatrixXd& w, const Eigen::MatrixXd& a) {
  Eigen::MatrixXd out(w.rows() * a.rows(), w.cols() * a.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      out.block(i * a.rows(), j * a.cols(), a.rows(), a.cols()) = w(i, j) * a;
    }
  }
  return out;
}

}  // namespace oracle

#endif  // HOROFILTER_TESTS_ORACLES_HPP_
