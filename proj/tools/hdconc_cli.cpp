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

// hdconc: sampling, closed-form bounds, random projections and experiment
// replication from the command line. Exit codes: 0 success, 2 argument
// error, 3 resource-cap refusal, 4 degenerate input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdconc/bound_registry.hpp"
#include "hdconc/errors.hpp"
#include "hdconc/experiments.hpp"
#include "hdconc/io.hpp"
#include "hdconc/projection.hpp"
#include "hdconc/samplers.hpp"

namespace {

using hdconc::json;

int fail(int code, const std::string& message) {
  std::cerr << "ERROR " << code << ": " << message << '\n';
  return code;
}

hdconc::RandomSeed resolve_seed(const std::optional<std::uint64_t>& seed) {
  return seed ? hdconc::RandomSeed{*seed} : hdconc::entropy_seed();
}

void echo_config(const json& config) { std::cerr << "CONFIG " << config.dump() << '\n'; }

void write_json(const std::string& path, const json& document) {
  if (path.empty() || path == "-") {
    std::cout << document.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw hdconc::ArgumentError("cannot open '" + path + "' for writing");
  out << document.dump(2) << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hdconc::ArgumentError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw hdconc::ArgumentError("bad JSON in '" + path + "': " + e.what());
  }
}

struct SampleArgs {
  std::string dist;
  int d = 0;
  std::size_t n = 0;
  double sigma = 1.0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_sample(const SampleArgs& args) {
  hdconc::DistributionSpec spec{hdconc::parse_distribution(args.dist), args.d, args.sigma};
  const auto seed = resolve_seed(args.seed);
  echo_config({{"subcommand", "sample"},
               {"dist", std::string(hdconc::to_string(spec.kind))},
               {"d", spec.dimension},
               {"n", args.n},
               {"sigma", spec.sigma},
               {"seed", seed.value},
               {"out", args.out}});
  hdconc::save_point_cloud(hdconc::sample(spec, args.n, seed), args.out);
  return 0;
}

struct BoundsArgs {
  std::string name;
  std::vector<std::string> tokens;
  std::string comma_args;
};

int run_bounds(const BoundsArgs& args) {
  auto tokens = args.tokens;
  if (!args.comma_args.empty()) tokens.push_back(args.comma_args);
  const auto parsed = hdconc::parse_bound_args(tokens);
  json config{{"subcommand", "bounds"}, {"name", args.name}, {"args", json(parsed)}};
  echo_config(config);
  std::cout << json(hdconc::evaluate_bound(args.name, parsed)).dump(2) << '\n';
  return 0;
}

struct ProjectArgs {
  std::string in;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string save_matrix;
  std::string load_matrix;
};

int run_project(const ProjectArgs& args) {
  const auto cloud = hdconc::load_point_cloud(args.in);
  hdconc::RandomProjection proj;
  if (!args.load_matrix.empty()) {
    proj = hdconc::load_projection(args.load_matrix);
  } else {
    if (!args.k) throw hdconc::ArgumentError("project needs --k or --load-matrix");
    proj = hdconc::make_projection(static_cast<int>(cloud.dimension()), *args.k,
                                   resolve_seed(args.seed));
  }
  echo_config({{"subcommand", "project"},
               {"in", args.in},
               {"d", proj.d},
               {"k", proj.k},
               {"seed", proj.seed.value},
               {"out", args.out}});
  const auto projected = hdconc::project(proj, cloud);
  hdconc::save_point_cloud(projected, args.out);
  if (!args.save_matrix.empty()) hdconc::save_projection(proj, args.save_matrix);
  return 0;
}

struct DistortArgs {
  std::string orig;
  std::string proj;
  std::string out;
};

int run_distort(const DistortArgs& args) {
  echo_config({{"subcommand", "distort"},
               {"orig", args.orig},
               {"proj", args.proj},
               {"out", args.out}});
  const auto report = hdconc::max_distortion(hdconc::load_point_cloud(args.orig),
                                             hdconc::load_point_cloud(args.proj));
  write_json(args.out, json(report));
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::string config;
  std::string out;
  std::string csv;
  std::optional<std::uint64_t> seed;
};

int run_experiment(const ExperimentArgs& args) {
  hdconc::ExperimentConfig cfg =
      args.config.empty() ? hdconc::default_config(args.name)
                          : hdconc::config_from_json(read_json(args.config), args.name);
  if (args.seed) cfg.seed = hdconc::RandomSeed{*args.seed};
  if (!args.out.empty()) cfg.output_path = args.out;
  echo_config(hdconc::config_to_json(cfg));
  const auto report = hdconc::run_experiment(cfg);
  write_json(args.out, hdconc::report_to_json(report));
  if (!args.csv.empty()) {
    std::ofstream csv(args.csv);
    if (!csv) throw hdconc::ArgumentError("cannot open '" + args.csv + "' for writing");
    hdconc::write_report_csv(csv, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-dimensional concentration toolkit"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw a seeded point cloud");
  sample->add_option("--dist", sample_args.dist, "gaussian | ball | cube")->required();
  sample->add_option("--d", sample_args.d, "Dimension")->required();
  sample->add_option("--n", sample_args.n, "Number of points")->required();
  sample->add_option("--sigma", sample_args.sigma, "Gaussian standard deviation");
  sample->add_option("--seed", sample_args.seed, "64-bit seed (default: OS entropy)");
  sample->add_option("--out", sample_args.out, "Output CSV")->required();

  BoundsArgs bounds_args;
  bool list_bounds = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  bounds->add_flag("--list", list_bounds, "List bound names");
  bounds->add_option("name", bounds_args.name, "Bound name");
  bounds->add_option("params", bounds_args.tokens, "key=value arguments");
  bounds->add_option("--args", bounds_args.comma_args, "k=v,k2=v2 arguments");

  ProjectArgs project_args;
  auto* project = app.add_subcommand("project", "Apply a Johnson-Lindenstrauss projection");
  project->add_option("--in", project_args.in, "Input point CSV")->required();
  project->add_option("--k", project_args.k, "Target dimension");
  project->add_option("--seed", project_args.seed, "Projection seed");
  project->add_option("--out", project_args.out, "Output CSV")->required();
  project->add_option("--save-matrix", project_args.save_matrix, "Dump the matrix");
  project->add_option("--load-matrix", project_args.load_matrix, "Reuse a dumped matrix");

  DistortArgs distort_args;
  auto* distort = app.add_subcommand("distort", "Worst pairwise distance distortion");
  distort->add_option("--orig", distort_args.orig, "Original point CSV")->required();
  distort->add_option("--proj", distort_args.proj, "Projected point CSV")->required();
  distort->add_option("--out", distort_args.out, "Report JSON (default stdout)");

  ExperimentArgs experiment_args;
  auto* experiment = app.add_subcommand("experiment", "Run a registered experiment");
  experiment->add_option("name", experiment_args.name, "Experiment name")->required();
  experiment->add_option("--config", experiment_args.config, "Config JSON");
  experiment->add_option("--out", experiment_args.out, "Report JSON (default stdout)");
  experiment->add_option("--csv", experiment_args.csv, "Rows CSV");
  experiment->add_option("--seed", experiment_args.seed, "Override the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }

  try {
    if (*sample) return run_sample(sample_args);
    if (*bounds) {
      if (list_bounds) {
        for (const auto& name : hdconc::bound_names()) std::cout << name << '\n';
        return 0;
      }
      if (bounds_args.name.empty()) return fail(2, "bounds needs a NAME (see --list)");
      return run_bounds(bounds_args);
    }
    if (*project) return run_project(project_args);
    if (*distort) return run_distort(distort_args);
    if (*experiment) return run_experiment(experiment_args);
  } catch (const hdconc::Error& e) {
    return fail(e.exit_code(), e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
  return 0;
}
