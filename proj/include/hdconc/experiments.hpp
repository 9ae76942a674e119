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
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdconc/io.hpp"
#include "hdconc/rng.hpp"
#include "hdconc/samplers.hpp"

namespace hdconc {

/// Largest n*d a single experiment run may draw.
inline constexpr double kMaxDraws = 1e9;

/// Registered names: norm_table, distance_table, dot_table, norm_histogram,
/// ball, annulus, gaussian_angle, jl_curve, dice.
struct ExperimentConfig {
  std::string name;
  std::vector<int> dims;
  std::size_t n = 100;
  RandomSeed seed{42};
  std::vector<double> epsilon_grid;
  std::vector<int> k_grid;
  std::size_t repetitions = 1;
  std::string output_path;
  /// Per-experiment knobs: histogram lo/hi/bins, dice p/threshold_fraction.
  std::map<std::string, double> params;

  double param(const std::string& key) const;
};

/// Numeric table: one row per grid element, columns fixed per experiment.
struct ExperimentReport {
  std::string name;
  ExperimentConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  double wall_time = 0.0;

  /// Value of `column` in row `row`; throws if the column does not exist.
  double at(std::size_t row, std::string_view column) const;
  double summary_value(std::string_view key) const;
};

std::vector<std::string> experiment_names();

/// Defaults for a registered experiment (throws ArgumentError otherwise).
ExperimentConfig default_config(std::string_view name);

/// Throws ArgumentError/ResourceError for malformed or oversize configs.
void validate(const ExperimentConfig& cfg);

json config_to_json(const ExperimentConfig& cfg);
/// Overlays `j` on default_config(name). `name` comes from the argument when
/// non-empty, else from j["name"]. Unknown keys are rejected.
ExperimentConfig config_from_json(const json& j, std::string_view name = {});

json report_to_json(const ExperimentReport& report, bool include_timing = true);
/// Header of column names, then one line per row, 17 significant digits.
void write_report_csv(std::ostream& out, const ExperimentReport& report);

ExperimentReport run_norm_table(const ExperimentConfig& cfg);
ExperimentReport run_distance_table(const ExperimentConfig& cfg);
ExperimentReport run_dot_table(const ExperimentConfig& cfg);
ExperimentReport run_norm_histogram(const ExperimentConfig& cfg);
ExperimentReport run_ball_experiments(const ExperimentConfig& cfg);
ExperimentReport run_annulus_violation(const ExperimentConfig& cfg);
ExperimentReport run_gaussian_angle(const ExperimentConfig& cfg);
ExperimentReport run_jl_curve(const ExperimentConfig& cfg);
ExperimentReport run_dice_chernoff(const ExperimentConfig& cfg);

/// Dispatches on cfg.name.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Gram matrix X X^T of sample({Gaussian, d, sigma}, n, seed), accumulated
/// over coordinate chunks so the n x d cloud is never materialized.
Eigen::MatrixXd gaussian_gram(const DistributionSpec& spec, std::size_t n,
                              RandomSeed seed);

/// 4-sigma binomial slack 4 sqrt(v (1 - v) / trials), v clamped to [0, 1].
double binomial_slack(double v, std::size_t trials);

}  // namespace hdconc
