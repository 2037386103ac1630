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

#ifndef HOROFILTER_SPARSE_HPP_
#define HOROFILTER_SPARSE_HPP_

#include <algorithm>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "horofilter/common.hpp"

namespace horofilter {

/// Square compressed-row matrix. Column indices within a row are sorted.
struct CsrMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;  // n + 1 entries
  std::vector<vertex_t> cols;
  std::vector<double> values;

  static CsrMatrix zero(std::size_t n) {
    return {n, std::vector<std::size_t>(n + 1, 0), {}, {}};
  }

  std::size_t nonzeros() const noexcept { return values.size(); }

  double row_sum(std::size_t r) const {
    double s = 0.0;
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) s += values[k];
    return s;
  }

  /// y = M x. Rows are independent; summation follows column order.
  void multiply(std::span<const double> x, std::span<double> y,
                std::size_t threads = 1) const {
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) {
        double acc = 0.0;
        for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) {
          acc += values[k] * x[cols[k]];
        }
        y[r] = acc;
      }
    });
  }

  /// y = M^T x, scattered in row order.
  void multiply_transpose(std::span<const double> x, std::span<double> y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) {
        y[cols[k]] += values[k] * x[r];
      }
    }
  }

  Eigen::MatrixXd to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) {
        m(static_cast<Eigen::Index>(r), cols[k]) = values[k];
      }
    }
    return m;
  }
};

}  // namespace horofilter

#endif  // HOROFILTER_SPARSE_HPP_
