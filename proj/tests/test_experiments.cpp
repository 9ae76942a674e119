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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hdconc/errors.hpp"
#include "hdconc/experiments.hpp"
#include "hdconc/tailbounds.hpp"

using namespace hdconc;
using doctest::Approx;

namespace {

ExperimentConfig small_config(const std::string& name) {
  ExperimentConfig cfg = default_config(name);
  if (name == "norm_table" || name == "distance_table" || name == "dot_table") {
    cfg.dims = {1, 10, 300};
    cfg.n = 60;
  } else if (name == "norm_histogram") {
    cfg.n = 2000;
  } else if (name == "ball") {
    cfg.dims = {20, 100};
    cfg.repetitions = 40;
  } else if (name == "annulus") {
    cfg.n = 3000;
  } else if (name == "gaussian_angle") {
    cfg.dims = {100, 1000};
    cfg.n = 500;
  } else if (name == "jl_curve") {
    cfg.dims = {200};
    cfg.n = 40;
    cfg.k_grid = {10, 50, 150};
  } else if (name == "dice") {
    cfg.repetitions = 2000;
  }
  return cfg;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text,
                                                std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream head(line);
  for (std::string cell; std::getline(head, cell, ',');) header.push_back(cell);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::vector<double> row;
    for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("every experiment runs on a small config and is deterministic") {
  for (const auto& name : experiment_names()) {
    CAPTURE(name);
    const auto cfg = small_config(name);
    const auto first = run_experiment(cfg);
    const auto second = run_experiment(cfg);
    CHECK(first.name == name);
    CHECK_FALSE(first.rows.empty());
    for (const auto& row : first.rows) CHECK(row.size() == first.columns.size());
    CHECK(report_to_json(first, false).dump() == report_to_json(second, false).dump());
    CHECK(report_to_json(first).contains("wall_time"));
    CHECK_FALSE(report_to_json(first, false).contains("wall_time"));
    CHECK(report_to_json(first).at("schema") == kSchemaVersion);

    auto other = cfg;
    other.seed = RandomSeed{cfg.seed.value + 1};
    if (name != "dice") {
      CHECK(report_to_json(run_experiment(other), false).dump() !=
            report_to_json(first, false).dump());
    }

    std::ostringstream csv;
    write_report_csv(csv, first);
    std::vector<std::string> header;
    const auto rows = parse_csv_rows(csv.str(), header);
    CHECK(header == first.columns);
    CHECK(rows == first.rows);
  }
}

TEST_CASE("config json round trip and validation") {
  for (const auto& name : experiment_names()) {
    auto cfg = small_config(name);
    cfg.seed = RandomSeed{987654321};
    const json j = config_to_json(cfg);
    const auto back = config_from_json(j);
    CHECK(config_to_json(back).dump() == j.dump());
  }
  json bad = config_to_json(default_config("annulus"));
  bad["bogus"] = 1;
  CHECK_THROWS_AS(config_from_json(bad), ArgumentError);
  json bad_param = {{"params", {{"nope", 1.0}}}};
  CHECK_THROWS_AS(config_from_json(bad_param, "dice"), ArgumentError);
  CHECK_THROWS_AS(config_from_json(json{{"name", "dice"}}, "ball"), ArgumentError);
  CHECK_THROWS_AS(default_config("unknown"), ArgumentError);
  const auto partial = config_from_json(json{{"n", 7}}, "dice");
  CHECK(partial.n == 7);
  CHECK(partial.repetitions == default_config("dice").repetitions);
}

TEST_CASE("resource caps are enforced") {
  auto cfg = default_config("norm_table");
  cfg.dims = {1000000};
  cfg.n = 2000;
  CHECK_THROWS_AS(validate(cfg), ResourceError);
  auto pairwise = default_config("distance_table");
  pairwise.dims = {2};
  pairwise.n = 20001;
  CHECK_THROWS_AS(validate(pairwise), ResourceError);
  auto jl = default_config("jl_curve");
  jl.k_grid = {1001};
  CHECK_THROWS_AS(validate(jl), ArgumentError);
  auto empty = default_config("annulus");
  empty.n = 0;
  CHECK_THROWS_AS(validate(empty), ArgumentError);
}

TEST_CASE("gaussian gram equals the explicit gram matrix") {
  const DistributionSpec spec{Distribution::GaussianSpherical, 700, 1.0};
  const auto cloud = sample(spec, 9, RandomSeed{17});
  const Eigen::MatrixXd explicit_gram = cloud.points * cloud.points.transpose();
  const Eigen::MatrixXd gram = gaussian_gram(spec, 9, RandomSeed{17});
  CHECK((gram - explicit_gram).cwiseAbs().maxCoeff() <= 1e-10 * explicit_gram.cwiseAbs().maxCoeff());
}

TEST_CASE("norm table tracks sqrt(d)") {
  auto cfg = default_config("norm_table");
  cfg.dims = {1, 100, 10000};
  cfg.n = 1000;
  const auto report = run_norm_table(cfg);
  CHECK(std::abs(report.at(0, "mean_norm") - std::sqrt(2.0 / M_PI)) <= 0.1);
  for (std::size_t r = 1; r < 3; ++r) {
    CHECK(std::abs(report.at(r, "mean_norm") - report.at(r, "sqrt_d")) <= 0.5);
  }
  for (std::size_t r = 0; r < 3; ++r) CHECK(report.at(r, "variance") <= 1.0);
}

TEST_CASE("distance and dot tables") {
  auto cfg = default_config("distance_table");
  cfg.dims = {100};
  cfg.n = 200;
  const auto dist = run_distance_table(cfg);
  CHECK(dist.at(0, "pairs") == 19900);
  CHECK(std::abs(dist.at(0, "relative_gap")) <= 0.02);
  cfg.name = "dot_table";
  const auto dots = run_dot_table(cfg);
  CHECK(std::abs(dots.at(0, "mean_dot")) <= dots.at(0, "raw_gate"));
  CHECK(std::abs(dots.at(0, "mean_normalized_dot")) <= 5.0 * dots.at(0, "stderr_normalized"));
  CHECK(dots.at(0, "raw_gate") == Approx(3.0 * std::sqrt(100.0 / 19900.0)));
}

TEST_CASE("norm histogram") {
  const auto report = run_norm_histogram(small_config("norm_histogram"));
  CHECK(report.rows.size() == 63);
  CHECK(report.summary_value("total") + report.summary_value("underflow") +
            report.summary_value("overflow") == 2000);
  CHECK(report.summary_value("modal_bin_center") >= 9.7);
  CHECK(report.summary_value("modal_bin_center") <= 10.3);
  CHECK(report.summary_value("fraction_outside_band") <= 0.01);
}

TEST_CASE("annulus experiment flags vacuous rows") {
  const auto report = run_annulus_violation(small_config("annulus"));
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    CHECK(report.at(r, "sound") == 1.0);
    CHECK(report.at(r, "empirical") <= report.at(r, "bound") + report.at(r, "slack"));
  }
  CHECK(report.at(0, "valid") == 0.0);   // eps = 1
  CHECK(report.at(5, "valid") == 1.0);   // eps = 10
  CHECK(report.at(5, "violations") == 0.0);
  auto zero = small_config("annulus");
  zero.epsilon_grid = {0.0};
  const auto z = run_annulus_violation(zero);
  CHECK(z.at(0, "empirical") == 1.0);
  CHECK(z.at(0, "bound") == 2.0);
}

TEST_CASE("dice experiment") {
  const auto report = run_dice_chernoff(small_config("dice"));
  CHECK(report.at(0, "qualifying") == 0.0);
  CHECK(report.at(0, "threshold") == 70.0);
  CHECK(report.at(0, "markov") == Approx(0.23809523809523808));
  CHECK(report.at(0, "chebyshev") == Approx(0.0048828125));
  CHECK(report.at(0, "chernoff") == Approx(3.4270626223598639e-21).epsilon(1e-9));

  auto certain = small_config("dice");
  certain.params["p"] = 1.0;
  const auto all = run_dice_chernoff(certain);
  CHECK(all.at(0, "qualifying") == 2000.0);
  CHECK(all.at(0, "empirical") == 1.0);
}

TEST_CASE("ball experiment thresholds") {
  const auto report = run_ball_experiments(small_config("ball"));
  CHECK(report.at(1, "guarantee") == Approx(0.9));
  CHECK(report.at(1, "norm_threshold") == Approx(1.0 - 0.04605170185988091));
  auto small = small_config("ball");
  small.dims = {2};
  CHECK_THROWS_AS(run_ball_experiments(small), ArgumentError);
  small.dims = {3};
  const auto tiny = run_ball_experiments(small);
  CHECK(tiny.at(0, "normalized_applicable") == 0.0);
}

TEST_CASE("binomial slack") {
  CHECK(binomial_slack(0.1, 500) == Approx(4.0 * std::sqrt(0.09 / 500)));
  CHECK(binomial_slack(-1.0, 10) == 0.0);
  CHECK(binomial_slack(1.5, 10) == 0.0);
}
