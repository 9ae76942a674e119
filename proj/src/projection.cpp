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

#include "hdconc/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hdconc/errors.hpp"
#include "hdconc/stats.hpp"

namespace hdconc {

namespace {

void check_open_unit(double epsilon) {
  detail::require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
}

}  // namespace

int jl_dimension(int n, double epsilon) {
  detail::require(n >= 2, "n must be >= 2");
  check_open_unit(epsilon);
  const double k = 48.0 * std::log(static_cast<double>(n)) / (epsilon * epsilon);
  return static_cast<int>(std::ceil(k));
}

RandomProjection make_projection(int d, int k, RandomSeed seed) {
  detail::require(d >= 1, "source dimension d must be >= 1");
  detail::require(k >= 1, "target dimension k must be >= 1");
  detail::require(k <= d, "target dimension k=" + std::to_string(k) +
                              " exceeds source dimension d=" + std::to_string(d));
  const DistributionSpec gaussian{Distribution::GaussianSpherical, d, 1.0};
  return RandomProjection{sample_rows(gaussian, seed, 0, static_cast<std::size_t>(k)),
                          d, k, seed, true};
}

RandomProjection projection_from_matrix(RowMatrixXd matrix, RandomSeed seed,
                                        bool scaled) {
  detail::require(matrix.rows() >= 1 && matrix.cols() >= 1,
                  "projection matrix must be non-empty");
  detail::require(matrix.rows() <= matrix.cols(),
                  "projection matrix must have k <= d");
  detail::require(matrix.allFinite(), "projection matrix must be finite");
  const auto k = static_cast<int>(matrix.rows());
  const auto d = static_cast<int>(matrix.cols());
  return RandomProjection{std::move(matrix), d, k, seed, scaled};
}

PointCloud project(const RandomProjection& proj, const PointCloud& cloud) {
  if (cloud.dimension() != proj.d) {
    throw ArgumentError("cloud dimension " + std::to_string(cloud.dimension()) +
                        " does not match projection source dimension " +
                        std::to_string(proj.d));
  }
  PointCloud out;
  out.points = apply_projection(proj, cloud.points);
  out.spec = cloud.spec;
  if (out.spec) out.spec->dimension = proj.k;
  out.seed = cloud.seed;
  out.projection_seed = proj.seed;
  return out;
}

BoundResult rp_bound(double epsilon, int k) {
  check_open_unit(epsilon);
  detail::require(k >= 1, "k must be >= 1");
  BoundResult r;
  r.name = "random_projection";
  r.inputs = {{"epsilon", epsilon}, {"k", k}};
  r.value = 2.0 * std::exp(-k * epsilon * epsilon / 16.0);
  r.valid = informative_upper(r.value);
  r.note = "non-trivial for k*epsilon^2 > 16 ln 2";
  return r;
}

DistortionReport max_distortion(const PointCloud& original,
                                const PointCloud& projected) {
  const Eigen::Index n = original.n();
  if (projected.n() != n) {
    throw ArgumentError("point counts differ: " + std::to_string(n) + " vs " +
                        std::to_string(projected.n()));
  }
  if (n < 2) throw DegenerateInputError("distortion needs at least 2 points");
  detail::check_pairwise(n);

  DistortionReport report;
  report.n = n;
  report.d = original.dimension();
  report.k = projected.dimension();
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = -std::numeric_limits<double>::infinity();
  const auto& x = original.points;
  const auto& y = projected.points;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double before = (x.row(i) - x.row(j)).norm();
      if (before == 0.0) {
        ++report.pairs_skipped_zero;
        continue;
      }
      const double ratio = (y.row(i) - y.row(j)).norm() / before;
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
      ++report.pairs_evaluated;
    }
  }
  if (report.pairs_evaluated == 0) {
    throw DegenerateInputError("all point pairs coincide");
  }
  report.ratio_min = ratio_min;
  report.ratio_max = ratio_max;
  report.epsilon_observed = std::max({1.0 - ratio_min, ratio_max - 1.0, 0.0});
  return report;
}

BoundResult jl_guarantee(int n, double epsilon) {
  const int k = jl_dimension(n, epsilon);
  BoundResult r;
  r.name = "jl_guarantee";
  r.inputs = {{"n", n}, {"epsilon", epsilon}, {"k", k}};
  r.value = 1.0 - 1.0 / n;
  r.valid = true;
  r.note = "P[all pairwise distances preserved to 1 +- epsilon] at k";
  return r;
}

}  // namespace hdconc
