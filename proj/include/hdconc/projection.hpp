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

#include <cstdint>

#include <Eigen/Core>

#include "hdconc/bound_result.hpp"
#include "hdconc/rng.hpp"
#include "hdconc/samplers.hpp"

namespace hdconc {

/// k x d Gaussian matrix U; row i is u_i. When `scaled`, application
/// multiplies by 1/sqrt(k) (the Johnson-Lindenstrauss map T_U).
struct RandomProjection {
  RowMatrixXd matrix;
  int d = 0;
  int k = 0;
  RandomSeed seed;
  bool scaled = true;
};

struct DistortionReport {
  Eigen::Index n = 0;
  Eigen::Index d = 0;
  Eigen::Index k = 0;
  double epsilon_observed = 0.0;
  double ratio_min = 1.0;
  double ratio_max = 1.0;
  std::uint64_t pairs_evaluated = 0;
  std::uint64_t pairs_skipped_zero = 0;
};

/// Smallest integer k >= 48 ln(n) / eps^2.
int jl_dimension(int n, double epsilon);

/// k*d i.i.d. N(0, 1) entries; row i comes from substream child_seed(seed, i).
RandomProjection make_projection(int d, int k, RandomSeed seed);

/// Wraps an explicit matrix (fixtures, matrices loaded from disk).
RandomProjection projection_from_matrix(RowMatrixXd matrix, RandomSeed seed,
                                        bool scaled = true);

/// Applies the projection to every row: (1/sqrt(k)) U x when scaled.
template <typename Derived>
RowMatrixXd apply_projection(const RandomProjection& proj,
                             const Eigen::MatrixBase<Derived>& points) {
  RowMatrixXd out = points * proj.matrix.transpose();
  if (proj.scaled) out /= std::sqrt(static_cast<double>(proj.k));
  return out;
}

/// Projects a cloud; the result records the projection seed.
PointCloud project(const RandomProjection& proj, const PointCloud& cloud);

/// 2 exp(-k eps^2 / 16) on P[| ||Ux|| - sqrt(k)||x|| | >= eps sqrt(k) ||x||].
BoundResult rp_bound(double epsilon, int k);

/// Worst pairwise distance distortion between a cloud and its scaled
/// projection. Pairs with coincident originals are skipped and counted.
DistortionReport max_distortion(const PointCloud& original,
                                const PointCloud& projected);

/// Distortion-free probability 1 - 1/n at k = jl_dimension(n, eps).
BoundResult jl_guarantee(int n, double epsilon);

}  // namespace hdconc
