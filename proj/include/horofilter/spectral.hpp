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

// Operator norms of the filter matrix W and the contraction certificates
// built from them.
//
// Two independent engines compute ||W||_2: a dense singular value
// decomposition (n <= 500) and power iteration on W^T W. Up to 200 vertices
// both run and their relative disagreement is recorded.

#ifndef HOROFILTER_SPECTRAL_HPP_
#define HOROFILTER_SPECTRAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "horofilter/filter.hpp"
#include "horofilter/graph.hpp"
#include "horofilter/sparse.hpp"

namespace horofilter {

inline constexpr std::size_t kDenseLimit = 500;
inline constexpr std::size_t kCrossCheckLimit = 200;
inline constexpr double kCertificateSlack = 1e-9;

enum class NormMethod { kAuto, kDenseExact, kPowerIteration };

inline const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::kAuto: return "auto";
    case NormMethod::kDenseExact: return "dense_exact";
    case NormMethod::kPowerIteration: return "power_iteration";
  }
  return "?";
}

struct PowerOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
  std::size_t block_size = 4;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::kDenseExact;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

struct InducedNorms {
  double norm_1 = 0.0;    // max column sum of |W|
  double norm_inf = 0.0;  // max row sum of |W|
};

inline InducedNorms induced_norms(const CsrMatrix& w) {
  InducedNorms out;
  std::vector<double> col(w.n, 0.0);
  for (std::size_t r = 0; r < w.n; ++r) {
    double row = 0.0;
    for (std::size_t k = w.offsets[r]; k < w.offsets[r + 1]; ++k) {
      row += std::abs(w.values[k]);
      col[w.cols[k]] += std::abs(w.values[k]);
    }
    out.norm_inf = std::max(out.norm_inf, row);
  }
  for (double c : col) out.norm_1 = std::max(out.norm_1, c);
  return out;
}

// ---------------------------------------------------------------------------
// Engines

/// sqrt of the top eigenvalue of M^T M from a full symmetric
/// eigendecomposition. Eigen 3.4.0's BDCSVD misreports the top singular
/// value when singular values cluster (W^3 on a 4x4 grid), so it is avoided.
inline double dense_norm_2(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues()(es.eigenvalues().size() - 1)));
}

inline double dense_spectral_radius(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

/// Largest singular value of a linear map given by `apply` (y = M x) and
/// `apply_t` (y = M^T x) on R^n. Block power iteration: X <- orth(M^T M X)
/// on a seeded Gaussian n x b block, with a Rayleigh-Ritz step each sweep.
/// Stops when the top Ritz value changes by less than tolerance (relative).
/// The block resolves clustered top singular values (odd cycles give
/// sigma_1 / sigma_2 - 1 around 1e-5), where a single vector stalls.
template <typename Apply, typename ApplyT>
NormResult power_norm_2(std::size_t n, Apply&& apply, ApplyT&& apply_t,
                        const PowerOptions& options = {}) {
  NormResult result;
  result.method = NormMethod::kPowerIteration;
  if (n == 0) return result;

  const auto rows = static_cast<Eigen::Index>(n);
  const auto b = static_cast<Eigen::Index>(std::min(n, std::max<std::size_t>(options.block_size, 1)));
  Rng rng(options.seed);
  Eigen::MatrixXd x(rows, b), y(rows, b), z(rows, b);
  for (Eigen::Index j = 0; j < b; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = rng.normal();
  }
  auto orthonormalize = [&](const Eigen::MatrixXd& m) -> Eigen::MatrixXd {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ() * Eigen::MatrixXd::Identity(rows, b);
  };
  x = orthonormalize(x);

  double previous = -1.0;
  result.converged = false;
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (Eigen::Index j = 0; j < b; ++j) {
      apply(std::span<const double>(x.col(j).data(), n), std::span<double>(y.col(j).data(), n));
      apply_t(std::span<const double>(y.col(j).data(), n), std::span<double>(z.col(j).data(), n));
    }
    result.iterations = it;
    const Eigen::MatrixXd h = x.transpose() * z;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(0.5 * (h + h.transpose()));
    const double lambda = ritz.eigenvalues()(b - 1);
    if (z.norm() == 0.0) {
      result.value = 0.0;
      result.residual = 0.0;
      result.converged = true;
      return result;
    }
    const Eigen::VectorXd v = ritz.eigenvectors().col(b - 1);
    const Eigen::VectorXd r = z * v - lambda * (x * v);
    result.residual = r.norm() / std::max(lambda, std::numeric_limits<double>::min());
    result.value = std::sqrt(std::max(lambda, 0.0));
    if (previous >= 0.0 && std::abs(lambda - previous) <= options.tolerance * lambda) {
      result.converged = true;
      break;
    }
    previous = lambda;
    x = orthonormalize(z);
  }
  return result;
}

inline NormMethod resolve(NormMethod method, std::size_t n) {
  if (method == NormMethod::kAuto) {
    return n <= kDenseLimit ? NormMethod::kDenseExact : NormMethod::kPowerIteration;
  }
  if (method == NormMethod::kDenseExact && n > kDenseLimit) {
    throw Error("dense engine limited to " + std::to_string(kDenseLimit) + " vertices, got " +
                std::to_string(n));
  }
  return method;
}

inline NormResult norm_2(const CsrMatrix& w, NormMethod method = NormMethod::kAuto,
                         const PowerOptions& options = {}) {
  method = resolve(method, w.n);
  if (method == NormMethod::kDenseExact) {
    return {dense_norm_2(w.to_dense()), NormMethod::kDenseExact, 0, 0.0, true};
  }
  return power_norm_2(
      w.n, [&](std::span<const double> x, std::span<double> y) { w.multiply(x, y); },
      [&](std::span<const double> x, std::span<double> y) { w.multiply_transpose(x, y); },
      options);
}

/// Perron root of a nonnegative W. The power engine iterates on W + I from
/// the all-ones vector and stops when the Collatz-Wielandt bounds
/// min_i (Bx)_i / x_i <= rho(B) <= max_i (Bx)_i / x_i meet within tolerance.
/// The shift keeps bipartite (periodic) patterns convergent.
inline NormResult spectral_radius(const CsrMatrix& w, NormMethod method = NormMethod::kAuto,
                                  const PowerOptions& options = {}) {
  method = resolve(method, w.n);
  if (method == NormMethod::kDenseExact) {
    return {dense_spectral_radius(w.to_dense()), NormMethod::kDenseExact, 0, 0.0, true};
  }
  for (double v : w.values) {
    if (v < 0.0) throw Error("power-iteration spectral radius needs a nonnegative matrix");
  }
  NormResult result;
  result.method = NormMethod::kPowerIteration;
  result.converged = false;
  if (w.n == 0) {
    result.converged = true;
    return result;
  }
  std::vector<double> x(w.n, 1.0 / std::sqrt(static_cast<double>(w.n))), y(w.n);
  for (int it = 1; it <= options.max_iterations; ++it) {
    w.multiply(x, y);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, s = 0.0;
    for (std::size_t i = 0; i < w.n; ++i) {
      y[i] += x[i];
      const double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      s += y[i] * y[i];
    }
    result.iterations = it;
    result.value = 0.5 * (lo + hi) - 1.0;
    result.residual = (hi - lo) / hi;
    if (!(s > 0.0) || !std::isfinite(lo)) break;  // x lost positivity (reducible W)
    if (hi - lo <= options.tolerance * hi) {
      result.converged = true;
      break;
    }
    const double scale = 1.0 / std::sqrt(s);
    for (std::size_t i = 0; i < w.n; ++i) x[i] = y[i] * scale;
  }
  result.value = std::max(result.value, 0.0);
  return result;
}

// ---------------------------------------------------------------------------
// Reports

struct SpectralReport {
  std::size_t n = 0;
  double norm_1 = 0.0;
  double norm_inf = 0.0;
  double norm_2 = 0.0;
  double spectral_radius = 0.0;
  NormMethod method = NormMethod::kDenseExact;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  /// |power - dense| / dense for norm_2, when both engines ran.
  std::optional<double> cross_check_rel_diff;
  /// ||A||_2 and the block-operator norm ||W||_2 * ||A||_2.
  double mixing_norm = 1.0;
  double operator_norm = 0.0;
};

inline SpectralReport spectral_report(const FilterOperator& op,
                                      NormMethod method = NormMethod::kAuto,
                                      const PowerOptions& options = {}) {
  const CsrMatrix& w = op.weights;
  SpectralReport r;
  r.n = w.n;
  const InducedNorms in = induced_norms(w);
  r.norm_1 = in.norm_1;
  r.norm_inf = in.norm_inf;

  const NormResult n2 = norm_2(w, method, options);
  r.norm_2 = n2.value;
  r.method = n2.method;
  r.iterations = n2.iterations;
  r.residual = n2.residual;
  r.converged = n2.converged;

  const NormResult rad = spectral_radius(w, n2.method, options);
  r.spectral_radius = rad.value;
  r.converged = r.converged && rad.converged;

  if (w.n <= kCrossCheckLimit && w.n > 0) {
    const NormMethod other = n2.method == NormMethod::kDenseExact ? NormMethod::kPowerIteration
                                                                  : NormMethod::kDenseExact;
    const NormResult alt = norm_2(w, other, options);
    r.converged = r.converged && alt.converged;
    const double dense = other == NormMethod::kDenseExact ? alt.value : n2.value;
    const double power = other == NormMethod::kDenseExact ? n2.value : alt.value;
    r.cross_check_rel_diff = dense > 0.0 ? std::abs(power - dense) / dense : std::abs(power);
  }

  r.mixing_norm = op.mixing.spectral_norm();
  r.operator_norm = r.norm_2 * r.mixing_norm;
  return r;
}

/// Single-anchor (alpha) or multi-anchor (MultiAnchorConfig) setting plus the
/// normalization mode.
struct FilterConfig {
  double alpha = 1.0;
  std::optional<MultiAnchorConfig> multi;
  Normalize normalize = Normalize::kNone;

  /// alpha in single mode, max_m alpha_m in multi mode.
  double effective_alpha() const { return multi ? multi->bar_alpha() : alpha; }
};

struct StackedEntry {
  std::size_t k = 0;
  double power_norm = 0.0;        // ||W^k||_2
  double norm_2_pow = 0.0;        // ||W||_2^k
  bool holds = true;              // power_norm <= norm_2_pow + slack
  std::optional<double> decay_bound;  // exp(-k * alpha * delta), when delta given
};

/// Every certificate is recorded, none is enforced. Flags that do not apply
/// to the normalization mode are left empty.
struct CertificateReport {
  std::size_t max_degree = 0;
  double alpha = 0.0;  // effective alpha
  std::int64_t c_min = 0;
  std::int64_t c_max = 0;
  double rho_paper = 0.0;     // Delta * exp(-alpha)
  double rho_measured = 0.0;  // Delta * exp(-alpha * c_min); Delta * max w in multi mode
  double interpolation_bound = 0.0;     // sqrt(norm_1 * norm_inf)
  bool interpolation_holds = true;
  std::optional<bool> bound_rho_holds;        // none mode: norm_2 <= rho_measured
  std::optional<bool> rho_paper_holds;        // none mode: norm_2 <= rho_paper
  std::optional<bool> bound_one_holds;        // row mode: norm_2 <= 1
  bool radius_bound_holds = true;             // spectral_radius <= 1
  std::optional<bool> row_sums_ok;            // row mode: all row sums 1 within 1e-12
  bool conditional_applies = false;           // alpha >= log Delta
  double conditional_bound = 0.0;             // exp(-(alpha - log Delta))
  std::optional<bool> conditional_holds;
  std::optional<double> delta_four_point;
  std::optional<double> abstract_bound;       // exp(-alpha * delta)
  std::optional<bool> abstract_bound_holds;
  std::vector<StackedEntry> stacked;
  bool stacked_holds = true;
};

inline double matrix_power_norm(const CsrMatrix& w, std::size_t k, NormMethod method,
                                const PowerOptions& options) {
  method = resolve(method, w.n);
  if (method == NormMethod::kDenseExact) {
    const Eigen::MatrixXd d = w.to_dense();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i) p = p * d;
    return dense_norm_2(p);
  }
  std::vector<double> tmp(w.n);
  return power_norm_2(
             w.n,
             [&](std::span<const double> x, std::span<double> y) {
               std::copy(x.begin(), x.end(), y.begin());
               for (std::size_t i = 0; i < k; ++i) {
                 w.multiply(y, tmp);
                 std::copy(tmp.begin(), tmp.end(), y.begin());
               }
             },
             [&](std::span<const double> x, std::span<double> y) {
               std::copy(x.begin(), x.end(), y.begin());
               for (std::size_t i = 0; i < k; ++i) {
                 w.multiply_transpose(y, tmp);
                 std::copy(tmp.begin(), tmp.end(), y.begin());
               }
             },
             options)
      .value;
}

inline CertificateReport evaluate_certificates(const Graph& g, const FilterConfig& cfg,
                                               const EdgeWeights& ew, const FilterOperator& op,
                                               const SpectralReport& report,
                                               std::size_t k_max = 5,
                                               std::optional<double> delta = std::nullopt,
                                               NormMethod method = NormMethod::kAuto,
                                               const PowerOptions& options = {}) {
  CertificateReport c;
  const double big_delta = static_cast<double>(g.max_degree());
  c.max_degree = g.max_degree();
  c.alpha = cfg.effective_alpha();

  bool first = true;
  for (const auto& row : ew.gaps) {
    for (std::int64_t gap : row) {
      c.c_min = first ? gap : std::min(c.c_min, gap);
      c.c_max = first ? gap : std::max(c.c_max, gap);
      first = false;
    }
  }

  c.rho_paper = big_delta * std::exp(-c.alpha);
  if (ew.mode == WeightMode::kSingle) {
    c.rho_measured = big_delta * std::exp(-c.alpha * static_cast<double>(c.c_min));
  } else {
    c.rho_measured = big_delta * (ew.weight.empty() ? 0.0 : ew.max_weight);
  }

  c.interpolation_bound = std::sqrt(report.norm_1 * report.norm_inf);
  c.interpolation_holds = report.norm_2 <= c.interpolation_bound + kCertificateSlack;
  c.radius_bound_holds = report.spectral_radius <= 1.0 + kCertificateSlack;

  if (cfg.normalize == Normalize::kNone) {
    c.bound_rho_holds = report.norm_2 <= c.rho_measured + kCertificateSlack;
    c.rho_paper_holds = report.norm_2 <= c.rho_paper + kCertificateSlack;
  } else {
    c.bound_one_holds = report.norm_2 <= 1.0 + kCertificateSlack;
    bool ok = true;
    for (std::size_t v = 0; v < op.weights.n; ++v) {
      if (op.weights.offsets[v] == op.weights.offsets[v + 1]) continue;
      ok = ok && std::abs(op.weights.row_sum(v) - 1.0) <= 1e-12;
    }
    c.row_sums_ok = ok;
  }

  c.conditional_bound = big_delta > 0.0 ? std::exp(-(c.alpha - std::log(big_delta))) : 0.0;
  c.conditional_applies = big_delta > 0.0 && c.alpha >= std::log(big_delta);
  if (c.conditional_applies) {
    c.conditional_holds = report.norm_2 <= c.conditional_bound + kCertificateSlack;
  }

  if (delta) {
    c.delta_four_point = *delta;
    c.abstract_bound = std::exp(-c.alpha * *delta);
    c.abstract_bound_holds = report.norm_2 <= *c.abstract_bound + kCertificateSlack;
  }

  for (std::size_t k = 1; k <= k_max; ++k) {
    StackedEntry s;
    s.k = k;
    s.power_norm = matrix_power_norm(op.weights, k, method, options);
    s.norm_2_pow = std::pow(report.norm_2, static_cast<double>(k));
    s.holds = s.power_norm <= std::pow(report.norm_2 + kCertificateSlack, static_cast<double>(k));
    if (delta) s.decay_bound = std::exp(-static_cast<double>(k) * c.alpha * *delta);
    c.stacked_holds = c.stacked_holds && s.holds;
    c.stacked.push_back(s);
  }
  return c;
}

}  // namespace horofilter

#endif  // HOROFILTER_SPECTRAL_HPP_
