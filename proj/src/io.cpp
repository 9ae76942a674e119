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

#include "hdconc/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "hdconc/errors.hpp"

namespace hdconc {

namespace {

std::ofstream open_out(const std::filesystem::path& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ArgumentError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw ArgumentError("cannot open '" + path.string() + "'");
  return in;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_field(const std::string& text, std::size_t line_number) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  while (end && (*end == ' ' || *end == '\r')) ++end;
  if (end == begin || (end && *end != '\0') || !std::isfinite(value)) {
    throw ArgumentError("line " + std::to_string(line_number) +
                        ": not a finite number '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void to_json(json& j, const BoundResult& r) {
  j = json{{"schema", kSchemaVersion},
           {"name", r.name},
           {"inputs", json(r.inputs)},
           {"value", r.value},
           {"valid", r.valid},
           {"note", r.note}};
}

void to_json(json& j, const SummaryStats& s) {
  j = json{{"count", s.count}, {"mean", s.mean}};
  if (std::isfinite(s.variance)) {
    j["variance"] = s.variance;
  } else {
    j["variance"] = nullptr;
  }
  j["min"] = s.min;
  j["max"] = s.max;
}

void to_json(json& j, const DistortionReport& r) {
  j = json{{"schema", kSchemaVersion},
           {"n", r.n},
           {"d", r.d},
           {"k", r.k},
           {"epsilon_observed", r.epsilon_observed},
           {"ratio_min", r.ratio_min},
           {"ratio_max", r.ratio_max},
           {"pairs_evaluated", r.pairs_evaluated},
           {"pairs_skipped_zero", r.pairs_skipped_zero}};
}

json cloud_metadata(const PointCloud& cloud) {
  json j{{"schema", kSchemaVersion}};
  if (cloud.spec) {
    j["kind"] = std::string(to_string(cloud.spec->kind));
    j["sigma"] = cloud.spec->sigma;
  } else {
    j["kind"] = nullptr;
    j["sigma"] = nullptr;
  }
  j["d"] = cloud.dimension();
  j["n"] = cloud.n();
  j["seed"] = cloud.seed ? json(cloud.seed->value) : json(nullptr);
  if (cloud.projection_seed) j["projection_seed"] = cloud.projection_seed->value;
  return j;
}

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  const Eigen::Index d = cloud.dimension();
  if (!cloud.points.allFinite()) {
    throw ArgumentError("point cloud contains non-finite coordinates");
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    out << (j ? ",x" : "x") << (j + 1);
  }
  out << '\n';
  std::string line;
  for (Eigen::Index i = 0; i < cloud.n(); ++i) {
    line.clear();
    for (Eigen::Index j = 0; j < d; ++j) {
      if (j) line += ',';
      line += format_double(cloud.points(i, j));
    }
    line += '\n';
    out << line;
  }
}

PointCloud read_point_cloud_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ArgumentError("empty point-cloud CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_commas(line);
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] != "x" + std::to_string(j + 1)) {
      throw ArgumentError("bad CSV header: expected x1,...,xd");
    }
  }
  const auto d = static_cast<Eigen::Index>(header.size());
  detail::require(d >= 1, "CSV header names no columns");

  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (static_cast<Eigen::Index>(fields.size()) != d) {
      throw ArgumentError("line " + std::to_string(line_number) + ": expected " +
                          std::to_string(d) + " fields");
    }
    for (const auto& f : fields) values.push_back(parse_field(f, line_number));
    ++rows;
  }
  if (rows == 0) throw DegenerateInputError("point-cloud CSV has no points");
  PointCloud cloud;
  cloud.points = Eigen::Map<const RowMatrixXd>(values.data(),
                                               static_cast<Eigen::Index>(rows), d);
  return cloud;
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".json");
}

void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path) {
  {
    auto out = open_out(path);
    write_point_cloud_csv(out, cloud);
  }
  auto meta = open_out(sidecar_path(path));
  meta << cloud_metadata(cloud).dump(2) << '\n';
}

PointCloud load_point_cloud(const std::filesystem::path& path) {
  auto in = open_in(path);
  PointCloud cloud = read_point_cloud_csv(in);
  const auto meta_path = sidecar_path(path);
  if (!std::filesystem::exists(meta_path)) return cloud;

  auto meta_in = open_in(meta_path);
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::exception& e) {
    throw ArgumentError("bad sidecar '" + meta_path.string() + "': " + e.what());
  }
  if (meta.contains("kind") && meta["kind"].is_string()) {
    DistributionSpec spec;
    spec.kind = parse_distribution(meta["kind"].get<std::string>());
    spec.dimension = static_cast<int>(cloud.dimension());
    if (meta.contains("sigma") && meta["sigma"].is_number()) {
      spec.sigma = meta["sigma"].get<double>();
    }
    cloud.spec = spec;
  }
  if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
    cloud.seed = RandomSeed{meta["seed"].get<std::uint64_t>()};
  }
  if (meta.contains("projection_seed") && meta["projection_seed"].is_number_unsigned()) {
    cloud.projection_seed = RandomSeed{meta["projection_seed"].get<std::uint64_t>()};
  }
  return cloud;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_left,bin_right,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << format_double(h.bin_edges[b]) << ',' << format_double(h.bin_edges[b + 1])
        << ',' << h.counts[b] << '\n';
  }
}

void save_projection(const RandomProjection& proj, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little,
                "matrix dump assumes a little-endian host");
  {
    auto out = open_out(path, true);
    out.write(reinterpret_cast<const char*>(proj.matrix.data()),
              static_cast<std::streamsize>(proj.matrix.size() * sizeof(double)));
  }
  json header{{"schema", kSchemaVersion}, {"d", proj.d},           {"k", proj.k},
              {"seed", proj.seed.value},  {"scaled", proj.scaled}, {"format", "f64le-row-major"}};
  auto meta = open_out(sidecar_path(path));
  meta << header.dump(2) << '\n';
}

RandomProjection load_projection(const std::filesystem::path& path) {
  auto meta_in = open_in(sidecar_path(path));
  json header;
  try {
    header = json::parse(meta_in);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad projection header: ") + e.what());
  }
  const int d = header.at("d").get<int>();
  const int k = header.at("k").get<int>();
  detail::require(d >= 1 && k >= 1 && k <= d, "projection header has invalid d/k");
  RowMatrixXd matrix(k, d);
  auto in = open_in(path, true);
  in.read(reinterpret_cast<char*>(matrix.data()),
          static_cast<std::streamsize>(matrix.size() * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(matrix.size() * sizeof(double))) {
    throw ArgumentError("projection matrix file is truncated");
  }
  return projection_from_matrix(std::move(matrix),
                                RandomSeed{header.at("seed").get<std::uint64_t>()},
                                header.value("scaled", true));
}

}  // namespace hdconc
