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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "hdconc/rng.hpp"

namespace hdconc {

/// Row-major dense matrix; one point (or one projection row) per row.
template <typename Scalar>
using RowMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RowMatrixXd = RowMatrix<double>;

enum class Distribution {
  GaussianSpherical,
  BallUniform,
  HypercubeUniform,
};

std::string_view to_string(Distribution kind);
/// Accepts the CLI spellings (gaussian, ball, cube) and the long names.
Distribution parse_distribution(std::string_view name);

struct DistributionSpec {
  Distribution kind = Distribution::GaussianSpherical;
  int dimension = 1;
  double sigma = 1.0;  // GaussianSpherical only

  /// Throws ArgumentError unless dimension >= 1 and sigma > 0.
  void validate() const;

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

/// n x d sample with its sampling metadata. `spec` is empty for clouds read from a CSV
/// without sidecar metadata; `projection_seed` is set on projected clouds.
struct PointCloud {
  RowMatrixXd points;
  std::optional<DistributionSpec> spec;
  std::optional<RandomSeed> seed;
  std::optional<RandomSeed> projection_seed;

  Eigen::Index n() const { return points.rows(); }
  Eigen::Index dimension() const { return points.cols(); }
};

/// Writes point `index` of the stream (spec, seed) into `out` (length d).
/// Point i is drawn from its own Philox substream child_seed(seed, i), so any
/// block of rows can be generated independently of the others.
void sample_point(const DistributionSpec& spec, RandomSeed seed,
                  std::uint64_t index, Eigen::Ref<Eigen::VectorXd> out);

/// Rows [first, first + count) of the stream; identical to the same rows of
/// sample(spec, first + count, seed).
RowMatrixXd sample_rows(const DistributionSpec& spec, RandomSeed seed,
                        std::uint64_t first, std::size_t count);

/// n i.i.d. draws from `spec`.
///
/// Gaussian: d independent N(0, sigma^2) coordinates. Hypercube: d independent
/// U([-1, 1]) coordinates. Ball: Gaussian direction normalized to the sphere
/// times radius U^(1/d); an all-zero direction is redrawn.
PointCloud sample(const DistributionSpec& spec, std::size_t n, RandomSeed seed);

}  // namespace hdconc
