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

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hdconc/bound_result.hpp"
#include "hdconc/projection.hpp"
#include "hdconc/samplers.hpp"
#include "hdconc/stats.hpp"

namespace hdconc {

using json = nlohmann::ordered_json;

/// Version tag written as "schema" into every JSON document.
inline constexpr int kSchemaVersion = 1;

/// %.17g: round-trip safe for doubles.
std::string format_double(double value);

void to_json(json& j, const BoundResult& r);
void to_json(json& j, const SummaryStats& s);
void to_json(json& j, const DistortionReport& r);

/// Sidecar metadata {schema, kind, d, sigma, n, seed[, projection_seed]}.
json cloud_metadata(const PointCloud& cloud);

/// `x1,...,xd` header, one point per row, 17 significant digits.
void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_point_cloud_csv(std::istream& in);

/// Writes `path` and the sidecar `path`.json.
void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path);
/// Reads `path`; metadata from `path`.json is attached when present.
PointCloud load_point_cloud(const std::filesystem::path& path);

std::filesystem::path sidecar_path(const std::filesystem::path& path);

/// `bin_left,bin_right,count` rows.
void write_histogram_csv(std::ostream& out, const Histogram& h);

/// Raw little-endian float64 k x d row-major matrix at `path` plus a JSON
/// header {schema, d, k, seed, scaled, format} at `path`.json.
void save_projection(const RandomProjection& proj, const std::filesystem::path& path);
RandomProjection load_projection(const std::filesystem::path& path);

}  // namespace hdconc
