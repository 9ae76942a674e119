// Copyright 2026 The hdconc Authors.
//
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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hdconc/errors.hpp"
#include "hdconc/samplers.hpp"

namespace hdconc {

/// Largest point count accepted by the O(n^2) pair kernels.
inline constexpr Eigen::Index kMaxPairwisePoints = 20000;

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; NaN when count < 2
  double min = 0.0;
  double max = 0.0;
};

struct Histogram {
  std::vector<double> bin_edges;  // m + 1 ascending edges
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;

  std::size_t total() const;
  double bin_center(std::size_t bin) const {
    return 0.5 * (bin_edges[bin] + bin_edges[bin + 1]);
  }
  /// Index of the first bin with the largest count.
  std::size_t modal_bin() const;
};

/// Uniformly spaced samples of a density: values[i] = f(x0 + i*dx).
struct DensityGrid {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  /// Linear interpolation; zero outside the grid.
  double at(double x) const;
  double trapezoid_mass() const;
};

namespace detail {

inline Eigen::Index pair_count(Eigen::Index n) { return n * (n - 1) / 2; }

inline void check_pairwise(Eigen::Index n) {
  require(n >= 2, "pairwise statistics need at least 2 points");
  if (n > kMaxPairwisePoints) {
    throw ResourceError("pairwise kernels are capped at " +
                        std::to_string(kMaxPairwisePoints) + " points (got " +
                        std::to_string(n) + ")");
  }
}

}  // namespace detail

/// Euclidean norm of each row.
template <typename Derived>
Eigen::VectorXd norms(const Eigen::MatrixBase<Derived>& points) {
  return points.rowwise().norm();
}

inline Eigen::VectorXd norms(const PointCloud& cloud) {
  return norms(cloud.points);
}

/// All n(n-1)/2 distances ||x_i - x_j||, i < j in lexicographic order.
template <typename Derived>
Eigen::VectorXd pairwise_distances(const Eigen::MatrixBase<Derived>& points) {
  const Eigen::Index n = points.rows();
  detail::check_pairwise(n);
  Eigen::VectorXd out(detail::pair_count(n));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out[k++] = (points.row(i) - points.row(j)).norm();
    }
  }
  return out;
}

inline Eigen::VectorXd pairwise_distances(const PointCloud& cloud) {
  return pairwise_distances(cloud.points);
}

/// All n(n-1)/2 scalar products <x_i, x_j>, i < j, optionally of the
/// normalized points. Normalizing a zero point throws DegenerateInputError.
template <typename Derived>
Eigen::VectorXd pairwise_dots(const Eigen::MatrixBase<Derived>& points,
                              bool normalized) {
  const Eigen::Index n = points.rows();
  detail::check_pairwise(n);
  RowMatrixXd work = points;
  if (normalized) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double norm = work.row(i).norm();
      if (norm == 0.0) {
        throw DegenerateInputError("cannot normalize zero point at row " +
                                   std::to_string(i));
      }
      work.row(i) /= norm;
    }
  }
  // Gram matrix blocks are exact enough for dots (no cancellation issue).
  const Eigen::MatrixXd gram = work * work.transpose();
  Eigen::VectorXd out(detail::pair_count(n));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) out[k++] = gram(i, j);
  }
  return out;
}

inline Eigen::VectorXd pairwise_dots(const PointCloud& cloud, bool normalized) {
  return pairwise_dots(cloud.points, normalized);
}

/// Two-pass mean and unbiased variance.
SummaryStats summarize(std::span<const double> values);

inline SummaryStats summarize(const Eigen::VectorXd& values) {
  return summarize(std::span<const double>(values.data(),
                                           static_cast<std::size_t>(values.size())));
}

/// Uniform bins on [lo, hi]; bins are left-closed right-open except the last,
/// which also holds `hi`.
Histogram histogram(std::span<const double> values, double lo, double hi,
                    std::size_t bins);

inline Histogram histogram(const Eigen::VectorXd& values, double lo, double hi,
                           std::size_t bins) {
  return histogram(std::span<const double>(values.data(),
                                           static_cast<std::size_t>(values.size())),
                   lo, hi, bins);
}

/// N(0, sigma^2) density.
std::function<double(double)> gaussian_density(double sigma);

/// Tabulates f on [lo, hi] with step dx (both ends included).
DensityGrid tabulate_density(const std::function<double(double)>& f, double lo,
                             double hi, double dx);

/// Discrete convolution scaled by dx. Output starts at f.x0 + g.x0 and has
/// f.size() + g.size() - 1 samples.
DensityGrid convolve_densities(const DensityGrid& f, const DensityGrid& g);

/// max |grid(x_i) - f(x_i)| over the grid nodes.
double sup_distance(const DensityGrid& grid, const std::function<double(double)>& f);

}  // namespace hdconc
