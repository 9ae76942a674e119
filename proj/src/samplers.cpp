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

#include "hdconc/samplers.hpp"

#include <cmath>

#include "hdconc/errors.hpp"

namespace hdconc {

std::string_view to_string(Distribution kind) {
  switch (kind) {
    case Distribution::GaussianSpherical:
      return "gaussian";
    case Distribution::BallUniform:
      return "ball";
    case Distribution::HypercubeUniform:
      return "cube";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "gaussian" || name == "GaussianSpherical") {
    return Distribution::GaussianSpherical;
  }
  if (name == "ball" || name == "BallUniform") return Distribution::BallUniform;
  if (name == "cube" || name == "HypercubeUniform") {
    return Distribution::HypercubeUniform;
  }
  throw ArgumentError("unknown distribution '" + std::string(name) +
                      "' (expected gaussian, ball or cube)");
}

void DistributionSpec::validate() const {
  detail::require(dimension >= 1, "dimension must be >= 1");
  detail::require(std::isfinite(sigma) && sigma > 0.0, "sigma must be > 0");
}

void sample_point(const DistributionSpec& spec, RandomSeed seed,
                  std::uint64_t index, Eigen::Ref<Eigen::VectorXd> out) {
  Philox rng(child_seed(seed, index));
  const Eigen::Index d = out.size();
  switch (spec.kind) {
    case Distribution::GaussianSpherical:
      for (Eigen::Index j = 0; j < d; ++j) out[j] = spec.sigma * rng.normal();
      break;
    case Distribution::HypercubeUniform:
      for (Eigen::Index j = 0; j < d; ++j) out[j] = 2.0 * rng.uniform() - 1.0;
      break;
    case Distribution::BallUniform: {
      double norm = 0.0;
      do {
        for (Eigen::Index j = 0; j < d; ++j) out[j] = rng.normal();
        norm = out.norm();
      } while (norm == 0.0);
      const double radius =
          std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
      out *= radius / norm;
      break;
    }
  }
}

RowMatrixXd sample_rows(const DistributionSpec& spec, RandomSeed seed,
                        std::uint64_t first, std::size_t count) {
  spec.validate();
  RowMatrixXd rows(static_cast<Eigen::Index>(count), spec.dimension);
  Eigen::VectorXd point(spec.dimension);
  for (std::size_t i = 0; i < count; ++i) {
    sample_point(spec, seed, first + i, point);
    rows.row(static_cast<Eigen::Index>(i)) = point.transpose();
  }
  return rows;
}

PointCloud sample(const DistributionSpec& spec, std::size_t n, RandomSeed seed) {
  spec.validate();
  detail::require(n >= 1, "sample size n must be >= 1");
  PointCloud cloud;
  cloud.points = sample_rows(spec, seed, 0, n);
  cloud.spec = spec;
  cloud.seed = seed;
  return cloud;
}

}  // namespace hdconc
