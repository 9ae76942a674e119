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

#include "hdconc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>

#include "hdconc/errors.hpp"
#include "hdconc/projection.hpp"
#include "hdconc/stats.hpp"
#include "hdconc/tailbounds.hpp"

namespace hdconc {

namespace {

using Runner = std::function<ExperimentReport(const ExperimentConfig&)>;

std::vector<int> table_dims() { return {1, 10, 100, 1000, 10000, 100000, 1000000}; }

const std::map<std::string, double>& default_params(std::string_view name) {
  static const std::map<std::string, double> none;
  static const std::map<std::string, double> histogram{
      {"lo", 6.8}, {"hi", 13.1}, {"bins", 63}};
  static const std::map<std::string, double> dice{
      {"p", 1.0 / 6.0}, {"threshold_fraction", 0.7}};
  if (name == "norm_histogram") return histogram;
  if (name == "dice") return dice;
  return none;
}

void check_draws(double n, double d, const std::string& what) {
  if (n * d > kMaxDraws) {
    throw ResourceError(what + ": n*d = " + format_double(n * d) +
                        " exceeds the cap of 1e9 draws");
  }
}

DistributionSpec gaussian(int d) {
  return DistributionSpec{Distribution::GaussianSpherical, d, 1.0};
}

// Seed of the sub-experiment for grid value `key` (a dimension or a k).
RandomSeed grid_seed(const ExperimentConfig& cfg, std::uint64_t key) {
  return child_seed(cfg.seed, key);
}

class ReportBuilder {
 public:
  ReportBuilder(const ExperimentConfig& cfg, std::vector<std::string> columns)
      : start_(std::chrono::steady_clock::now()) {
    report_.name = cfg.name;
    report_.config = cfg;
    report_.columns = std::move(columns);
  }

  void row(std::vector<double> cells) {
    if (cells.size() != report_.columns.size()) {
      throw std::logic_error("row width does not match the column count");
    }
    report_.rows.push_back(std::move(cells));
  }

  void summary(std::string key, double value) {
    report_.summary.emplace_back(std::move(key), value);
  }

  ExperimentReport finish() {
    for (const auto& row : report_.rows) {
      for (const double cell : row) {
        if (!std::isfinite(cell)) {
          throw std::logic_error(report_.name + ": non-finite report cell");
        }
      }
    }
    report_.wall_time = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    return std::move(report_);
  }

 private:
  ExperimentReport report_;
  std::chrono::steady_clock::time_point start_;
};

// Norms of sample(spec, n, seed), generated point by point.
Eigen::VectorXd streamed_norms(const DistributionSpec& spec, std::size_t n,
                               RandomSeed seed) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(n));
  Eigen::VectorXd point(spec.dimension);
  for (std::size_t i = 0; i < n; ++i) {
    sample_point(spec, seed, i, point);
    out[static_cast<Eigen::Index>(i)] = point.norm();
  }
  return out;
}

Eigen::VectorXd upper_triangle(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd out(detail::pair_count(n));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) out[k++] = m(i, j);
  }
  return out;
}

double fraction(std::size_t hits, std::size_t trials) {
  return static_cast<double>(hits) / static_cast<double>(trials);
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"norm_table", run_norm_table},
      {"distance_table", run_distance_table},
      {"dot_table", run_dot_table},
      {"norm_histogram", run_norm_histogram},
      {"ball", run_ball_experiments},
      {"annulus", run_annulus_violation},
      {"gaussian_angle", run_gaussian_angle},
      {"jl_curve", run_jl_curve},
      {"dice", run_dice_chernoff},
  };
  return table;
}

}  // namespace

double ExperimentConfig::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it != params.end()) return it->second;
  const auto& defaults = default_params(name);
  const auto fallback = defaults.find(key);
  if (fallback == defaults.end()) {
    throw ArgumentError("experiment '" + name + "' has no parameter '" + key + "'");
  }
  return fallback->second;
}

double ExperimentReport::at(std::size_t row, std::string_view column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) {
    throw ArgumentError("report has no column '" + std::string(column) + "'");
  }
  return rows.at(row).at(static_cast<std::size_t>(it - columns.begin()));
}

double ExperimentReport::summary_value(std::string_view key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  throw ArgumentError("report has no summary entry '" + std::string(key) + "'");
}

std::vector<std::string> experiment_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : runners()) names.push_back(name);
  return names;
}

ExperimentConfig default_config(std::string_view name) {
  ExperimentConfig cfg;
  cfg.name = std::string(name);
  if (name == "norm_table" || name == "distance_table" || name == "dot_table") {
    cfg.dims = table_dims();
    cfg.n = 100;
  } else if (name == "norm_histogram") {
    cfg.dims = {100};
    cfg.n = 50000;
  } else if (name == "ball") {
    cfg.dims = {100, 500};
    cfg.n = 10;
    cfg.repetitions = 500;
  } else if (name == "annulus") {
    cfg.dims = {200};
    cfg.n = 100000;
    cfg.epsilon_grid = {1, 2, 4, 6, 8, 10};
  } else if (name == "gaussian_angle") {
    cfg.dims = {100, 1000, 10000};
    cfg.n = 10000;
    cfg.epsilon_grid = {0.1};
  } else if (name == "jl_curve") {
    cfg.dims = {1000};
    cfg.n = 300;
    for (int k = 20; k <= 960; k += 20) cfg.k_grid.push_back(k);
  } else if (name == "dice") {
    cfg.dims = {};
    cfg.n = 100;
    cfg.repetitions = 1000000;
  } else {
    throw ArgumentError("unknown experiment '" + std::string(name) + "'");
  }
  cfg.params = default_params(name);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (!runners().count(cfg.name)) {
    throw ArgumentError("unknown experiment '" + cfg.name + "'");
  }
  for (const int d : cfg.dims) {
    detail::require(d >= 1 && d <= 1000000, "dims must lie in [1, 1e6]");
  }
  detail::require(cfg.repetitions >= 1, "repetitions must be >= 1");
  for (const double eps : cfg.epsilon_grid) {
    detail::require(std::isfinite(eps) && eps >= 0.0, "epsilon_grid entries must be >= 0");
  }
  const bool needs_dims = cfg.name != "dice";
  if (needs_dims) detail::require(!cfg.dims.empty(), cfg.name + " needs dims");
  if (cfg.name == "annulus" || cfg.name == "gaussian_angle") {
    detail::require(!cfg.epsilon_grid.empty(), cfg.name + " needs epsilon_grid");
  }
  if (cfg.name == "gaussian_angle") {
    for (const double eps : cfg.epsilon_grid) {
      detail::require(eps > 0.0, "gaussian_angle needs epsilon > 0");
    }
  }
  if (cfg.name == "jl_curve") {
    detail::require(!cfg.k_grid.empty(), "jl_curve needs k_grid");
    detail::require(cfg.dims.size() == 1, "jl_curve takes exactly one dimension");
    for (const int k : cfg.k_grid) {
      detail::require(k >= 1, "k_grid entries must be >= 1");
      detail::require(k <= cfg.dims.front(),
                      "k=" + std::to_string(k) + " exceeds d=" +
                          std::to_string(cfg.dims.front()));
    }
  }
  detail::require(cfg.n >= (cfg.name == "dice" || cfg.name == "norm_histogram" ? 1u : 2u),
                  "n too small for " + cfg.name);
  const double n = static_cast<double>(cfg.n);
  for (const int d : cfg.dims) {
    const double reps = cfg.name == "ball" ? static_cast<double>(cfg.repetitions) : 1.0;
    const double per_point = cfg.name == "gaussian_angle" ? 2.0 : 1.0;
    check_draws(n * reps * per_point, d, cfg.name);
  }
  if (cfg.name == "dice") check_draws(n, static_cast<double>(cfg.repetitions), "dice");
  const bool pairwise = cfg.name == "distance_table" || cfg.name == "dot_table" ||
                        cfg.name == "ball" || cfg.name == "jl_curve";
  if (pairwise && cfg.n > static_cast<std::size_t>(kMaxPairwisePoints)) {
    throw ResourceError("pairwise experiments are capped at 20000 points");
  }
  if (cfg.name == "norm_histogram") {
    detail::require(cfg.param("lo") < cfg.param("hi"), "histogram needs lo < hi");
    detail::require(cfg.param("bins") >= 1, "histogram needs bins >= 1");
  }
  if (cfg.name == "dice") {
    const double p = cfg.param("p");
    const double t = cfg.param("threshold_fraction");
    detail::require(p >= 0.0 && p <= 1.0, "dice p must lie in [0, 1]");
    detail::require(t > 0.0 && t <= 1.0, "dice threshold_fraction must lie in (0, 1]");
  }
}

json config_to_json(const ExperimentConfig& cfg) {
  json j{{"name", cfg.name},
         {"dims", cfg.dims},
         {"n", cfg.n},
         {"seed", cfg.seed.value},
         {"epsilon_grid", cfg.epsilon_grid},
         {"k_grid", cfg.k_grid},
         {"repetitions", cfg.repetitions},
         {"output_path", cfg.output_path},
         {"params", json(cfg.params)}};
  return j;
}

ExperimentConfig config_from_json(const json& j, std::string_view name) {
  detail::require(j.is_object(), "experiment config must be a JSON object");
  std::string resolved(name);
  if (resolved.empty()) {
    detail::require(j.contains("name") && j["name"].is_string(),
                    "experiment config needs a name");
    resolved = j["name"].get<std::string>();
  } else if (j.contains("name")) {
    detail::require(j["name"] == resolved, "config name does not match the experiment");
  }
  ExperimentConfig cfg = default_config(resolved);
  static const std::set<std::string> known{"schema", "name",     "dims",
                                           "n",      "seed",     "epsilon_grid",
                                           "k_grid", "repetitions", "output_path",
                                           "params"};
  try {
    for (const auto& [key, value] : j.items()) {
      if (!known.count(key)) throw ArgumentError("unknown config key '" + key + "'");
      if (key == "dims") cfg.dims = value.get<std::vector<int>>();
      if (key == "n") cfg.n = value.get<std::size_t>();
      if (key == "seed") cfg.seed = RandomSeed{value.get<std::uint64_t>()};
      if (key == "epsilon_grid") cfg.epsilon_grid = value.get<std::vector<double>>();
      if (key == "k_grid") cfg.k_grid = value.get<std::vector<int>>();
      if (key == "repetitions") cfg.repetitions = value.get<std::size_t>();
      if (key == "output_path") cfg.output_path = value.get<std::string>();
      if (key == "params") {
        for (const auto& [pk, pv] : value.items()) {
          if (!default_params(resolved).count(pk)) {
            throw ArgumentError("experiment '" + resolved + "' has no parameter '" +
                                pk + "'");
          }
          cfg.params[pk] = pv.get<double>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad experiment config: ") + e.what());
  }
  return cfg;
}

json report_to_json(const ExperimentReport& report, bool include_timing) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json record = json::object();
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      record[report.columns[c]] = row[c];
    }
    rows.push_back(std::move(record));
  }
  json summary = json::object();
  for (const auto& [key, value] : report.summary) summary[key] = value;
  json j{{"schema", kSchemaVersion},
         {"name", report.name},
         {"config", config_to_json(report.config)},
         {"columns", report.columns},
         {"rows", std::move(rows)},
         {"summary", std::move(summary)}};
  if (include_timing) j["wall_time"] = report.wall_time;
  return j;
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? "," : "") << report.columns[c];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_double(row[c]);
    }
    out << '\n';
  }
}

double binomial_slack(double v, std::size_t trials) {
  const double p = std::clamp(v, 0.0, 1.0);
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

Eigen::MatrixXd gaussian_gram(const DistributionSpec& spec, std::size_t n,
                              RandomSeed seed) {
  spec.validate();
  detail::require(spec.kind == Distribution::GaussianSpherical,
                  "gaussian_gram needs a Gaussian spec");
  const auto rows = static_cast<Eigen::Index>(n);
  std::vector<Philox> streams;
  streams.reserve(n);
  for (std::size_t i = 0; i < n; ++i) streams.emplace_back(child_seed(seed, i));

  constexpr Eigen::Index kChunk = 256;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(rows, rows);
  Eigen::MatrixXd block(rows, kChunk);
  for (Eigen::Index start = 0; start < spec.dimension; start += kChunk) {
    const Eigen::Index width = std::min<Eigen::Index>(kChunk, spec.dimension - start);
    for (Eigen::Index i = 0; i < rows; ++i) {
      auto& rng = streams[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < width; ++j) block(i, j) = spec.sigma * rng.normal();
    }
    const auto chunk = block.leftCols(width);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(chunk);
  }
  gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();
  return gram;
}

ExperimentReport run_norm_table(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "n", "mean_norm", "sqrt_d", "variance", "min_norm",
                          "max_norm"});
  for (const int d : cfg.dims) {
    const auto stats = summarize(streamed_norms(gaussian(d), cfg.n, grid_seed(cfg, d)));
    out.row({double(d), double(cfg.n), stats.mean, std::sqrt(double(d)), stats.variance,
             stats.min, stats.max});
  }
  return out.finish();
}

ExperimentReport run_distance_table(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "n", "pairs", "mean_distance", "sqrt_2d",
                          "relative_gap", "variance"});
  for (const int d : cfg.dims) {
    const Eigen::MatrixXd gram = gaussian_gram(gaussian(d), cfg.n, grid_seed(cfg, d));
    const Eigen::Index n = gram.rows();
    Eigen::VectorXd distances(detail::pair_count(n));
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        distances[k++] = std::sqrt(std::max(0.0, gram(i, i) + gram(j, j) - 2.0 * gram(i, j)));
      }
    }
    const auto stats = summarize(distances);
    const double expected = std::sqrt(2.0 * d);
    out.row({double(d), double(n), double(distances.size()), stats.mean, expected,
             std::abs(stats.mean - expected) / expected, stats.variance});
  }
  return out.finish();
}

ExperimentReport run_dot_table(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "n", "pairs", "mean_dot", "variance_dot", "raw_gate",
                          "mean_normalized_dot", "variance_normalized_dot",
                          "stderr_normalized", "normalized_gate"});
  for (const int d : cfg.dims) {
    const Eigen::MatrixXd gram = gaussian_gram(gaussian(d), cfg.n, grid_seed(cfg, d));
    const Eigen::VectorXd inv_norms = gram.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd cosines = inv_norms.asDiagonal() * gram * inv_norms.asDiagonal();
    const auto raw = summarize(upper_triangle(gram));
    const auto normalized = summarize(upper_triangle(cosines));
    const double m = static_cast<double>(raw.count);
    const double stderr_normalized = std::sqrt(normalized.variance / m);
    out.row({double(d), double(cfg.n), m, raw.mean, raw.variance, 3.0 * std::sqrt(d / m),
             normalized.mean, normalized.variance, stderr_normalized,
             5.0 * stderr_normalized});
  }
  return out.finish();
}

ExperimentReport run_norm_histogram(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"bin_left", "bin_right", "bin_center", "count"});
  const int d = cfg.dims.front();
  const Eigen::VectorXd values = streamed_norms(gaussian(d), cfg.n, grid_seed(cfg, d));
  const auto h = histogram(values, cfg.param("lo"), cfg.param("hi"),
                           static_cast<std::size_t>(cfg.param("bins")));
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out.row({h.bin_edges[b], h.bin_edges[b + 1], h.bin_center(b), double(h.counts[b])});
  }
  const double center = std::sqrt(double(d));
  std::size_t outside = 0;
  for (const double v : values) outside += std::abs(v - center) >= 2.0;
  const auto modal = h.modal_bin();
  out.summary("d", d);
  out.summary("n", double(cfg.n));
  out.summary("total", double(h.total()));
  out.summary("underflow", double(h.underflow));
  out.summary("overflow", double(h.overflow));
  out.summary("modal_bin_center", h.bin_center(modal));
  out.summary("modal_count", double(h.counts[modal]));
  out.summary("fraction_outside_band", fraction(outside, cfg.n));
  out.summary("annulus_bound_band", gaussian_annulus_bound(2.0, d).value);
  return out.finish();
}

ExperimentReport run_ball_experiments(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "n", "repetitions", "norm_threshold", "angle_threshold",
                          "guarantee", "slack", "norm_event_frequency",
                          "angle_event_frequency", "normalized_angle_event_frequency",
                          "normalized_applicable"});
  const double n = static_cast<double>(cfg.n);
  const double guarantee = 1.0 - 1.0 / n;
  for (const int d : cfg.dims) {
    detail::require(d >= 3, "ball experiments need d >= 3");
    const double norm_eps = 2.0 * std::log(n) / d;
    const double angle_eps = std::sqrt(6.0 * std::log(n)) / std::sqrt(d - 1.0);
    const DistributionSpec spec{Distribution::BallUniform, d, 1.0};
    std::size_t norm_hits = 0, angle_hits = 0, normalized_hits = 0;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      const PointCloud cloud = sample(spec, cfg.n, child_seed(grid_seed(cfg, d), rep));
      norm_hits += norms(cloud).minCoeff() >= 1.0 - norm_eps;
      angle_hits += pairwise_dots(cloud, false).cwiseAbs().maxCoeff() <= angle_eps;
      normalized_hits += pairwise_dots(cloud, true).cwiseAbs().maxCoeff() <= angle_eps;
    }
    out.row({double(d), n, double(cfg.repetitions), 1.0 - norm_eps, angle_eps, guarantee,
             binomial_slack(1.0 / n, cfg.repetitions),
             fraction(norm_hits, cfg.repetitions), fraction(angle_hits, cfg.repetitions),
             fraction(normalized_hits, cfg.repetitions),
             2.0 * std::log(n) <= d ? 1.0 : 0.0});
  }
  return out.finish();
}

ExperimentReport run_annulus_violation(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "epsilon", "n", "violations", "empirical", "bound",
                          "slack", "valid", "sound"});
  for (const int d : cfg.dims) {
    const Eigen::VectorXd values = streamed_norms(gaussian(d), cfg.n, grid_seed(cfg, d));
    const double center = std::sqrt(double(d));
    for (const double eps : cfg.epsilon_grid) {
      std::size_t violations = 0;
      for (const double v : values) violations += std::abs(v - center) >= eps;
      const auto bound = gaussian_annulus_bound(eps, d);
      const double empirical = fraction(violations, cfg.n);
      const double slack = binomial_slack(bound.value, cfg.n);
      out.row({double(d), eps, double(cfg.n), double(violations), empirical, bound.value,
               slack, bound.valid ? 1.0 : 0.0,
               empirical <= bound.value + slack ? 1.0 : 0.0});
    }
  }
  return out.finish();
}

ExperimentReport run_gaussian_angle(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"d", "epsilon", "pairs", "orthogonality_frequency",
                          "orthogonality_bound", "orthogonality_slack",
                          "anticoncentration_threshold", "anticoncentration_frequency",
                          "anticoncentration_bound", "anticoncentration_slack"});
  for (const int d : cfg.dims) {
    const auto spec = gaussian(d);
    const RandomSeed seed = grid_seed(cfg, d);
    Eigen::VectorXd x(d), y(d);
    std::vector<double> cosines(cfg.n);
    for (std::size_t pair = 0; pair < cfg.n; ++pair) {
      sample_point(spec, seed, 2 * pair, x);
      sample_point(spec, seed, 2 * pair + 1, y);
      cosines[pair] = x.dot(y) / (x.norm() * y.norm());
    }
    for (const double eps : cfg.epsilon_grid) {
      const auto orth = gaussian_orthogonality_bound(eps, d);
      const auto anti = gaussian_anticoncentration_bound(eps, d);
      const double threshold = anti.inputs.at("threshold");
      std::size_t far = 0, near = 0;
      for (const double c : cosines) {
        far += std::abs(c) >= eps;
        near += std::abs(c) <= threshold;
      }
      out.row({double(d), eps, double(cfg.n), fraction(far, cfg.n), orth.value,
               binomial_slack(orth.value, cfg.n), threshold, fraction(near, cfg.n),
               anti.value, binomial_slack(anti.value, cfg.n)});
    }
  }
  return out.finish();
}

ExperimentReport run_jl_curve(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"k", "d", "n", "epsilon_observed", "ratio_min", "ratio_max",
                          "jl_bound", "bound_applicable", "within_bound"});
  const int d = cfg.dims.front();
  const PointCloud cloud = sample(gaussian(d), cfg.n, child_seed(cfg.seed, 0));
  const double log_n = std::log(static_cast<double>(cfg.n));
  for (const int k : cfg.k_grid) {
    const auto proj = make_projection(d, k, child_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    const auto report = max_distortion(cloud, project(proj, cloud));
    const double bound = std::sqrt(48.0 * log_n / k);
    const bool applicable = bound < 1.0;
    out.row({double(k), double(d), double(cfg.n), report.epsilon_observed,
             report.ratio_min, report.ratio_max, bound, applicable ? 1.0 : 0.0,
             report.epsilon_observed <= bound ? 1.0 : 0.0});
  }
  return out.finish();
}

ExperimentReport run_dice_chernoff(const ExperimentConfig& cfg) {
  validate(cfg);
  ReportBuilder out(cfg, {"rolls", "p", "trials", "threshold", "qualifying",
                          "empirical", "markov", "chebyshev", "chernoff", "slack"});
  const double p = cfg.param("p");
  const std::size_t rolls = cfg.n;
  const std::size_t trials = cfg.repetitions;
  const auto threshold = static_cast<std::size_t>(
      std::ceil(cfg.param("threshold_fraction") * static_cast<double>(rolls) - 1e-9));

  std::size_t qualifying = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Philox rng(child_seed(cfg.seed, trial));
    std::size_t sixes = 0;
    for (std::size_t r = 0; r < rolls; ++r) sixes += rng.uniform() < p;
    qualifying += sixes >= threshold;
  }

  const double mean = static_cast<double>(rolls) * p;
  const double variance = mean * (1.0 - p);
  const double a = static_cast<double>(threshold);
  // Bounds outside their preconditions are reported as the trivial value 1.
  const double markov = mean > 0.0 ? markov_bound(mean, a).value : 0.0;
  const double chebyshev =
      (variance > 0.0 && a > mean) ? chebyshev_bound(variance, a - mean).value
                                   : (a > mean ? 0.0 : 1.0);
  const double chernoff =
      (mean > 0.0 && a > mean)
          ? bernoulli_chernoff(static_cast<int>(rolls), p, a / mean - 1.0).value
          : (mean > 0.0 ? 1.0 : 0.0);
  const double empirical = fraction(qualifying, trials);

  out.row({double(rolls), p, double(trials), a, double(qualifying), empirical, markov,
           chebyshev, chernoff, binomial_slack(chernoff, trials)});
  return out.finish();
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto it = runners().find(cfg.name);
  if (it == runners().end()) throw ArgumentError("unknown experiment '" + cfg.name + "'");
  return it->second(cfg);
}

}  // namespace hdconc
