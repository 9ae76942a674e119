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

#include "hdconc/bound_registry.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "hdconc/errors.hpp"
#include "hdconc/geometry.hpp"
#include "hdconc/projection.hpp"
#include "hdconc/tailbounds.hpp"

namespace hdconc {

namespace {

class Args {
 public:
  Args(const std::string& bound, const std::map<std::string, std::string>& raw)
      : bound_(bound), raw_(raw) {}

  double real(const std::string& key) {
    used_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) {
      throw ArgumentError("bound '" + bound_ + "' needs " + key + "=<value>");
    }
    const char* begin = it->second.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(value)) {
      throw ArgumentError(key + "='" + it->second + "' is not a finite number");
    }
    return value;
  }

  double real_or(const std::string& key, double fallback) {
    return raw_.count(key) ? real(key) : (used_.insert(key), fallback);
  }

  int integer(const std::string& key) {
    const double value = real(key);
    if (value != std::floor(value) ||
        std::abs(value) > std::numeric_limits<int>::max()) {
      throw ArgumentError(key + " must be an integer");
    }
    return static_cast<int>(value);
  }

  std::string text(const std::string& key) {
    used_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) {
      throw ArgumentError("bound '" + bound_ + "' needs " + key + "=<value>");
    }
    return it->second;
  }

  void finish() const {
    for (const auto& [key, value] : raw_) {
      if (!used_.count(key)) {
        throw ArgumentError("bound '" + bound_ + "' does not take '" + key + "'");
      }
    }
  }

 private:
  std::string bound_;
  const std::map<std::string, std::string>& raw_;
  std::set<std::string> used_;
};

BoundResult scalar(std::string name, std::map<std::string, double> inputs,
                   double value, std::string note) {
  return BoundResult{std::move(name), std::move(inputs), value, true, std::move(note)};
}

using Evaluator = std::function<BoundResult(Args&)>;

const std::map<std::string, Evaluator>& registry() {
  static const std::map<std::string, Evaluator> table = {
      {"ball_volume",
       [](Args& a) {
         const int d = a.integer("d");
         return scalar("ball_volume", {{"d", d}, {"log_value", log_ball_volume(d)}},
                       ball_volume(d), "volume of the closed unit ball");
       }},
      {"shell",
       [](Args& a) {
         const double eps = a.real("epsilon");
         const int d = a.integer("d");
         return scalar("shell_fraction", {{"epsilon", eps}, {"d", d}},
                       shell_fraction(eps, d), "1 - (1 - epsilon)^d");
       }},
      {"corner",
       [](Args& a) {
         const double eps = a.real("epsilon");
         const int d = a.integer("d");
         return scalar("corner_volume", {{"epsilon", eps}, {"d", d}},
                       corner_volume(eps, d), "(2 epsilon)^d");
       }},
      {"surface",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return surface_concentration_bound(eps, a.integer("d"));
       }},
      {"waist",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return waist_concentration_bound(eps, a.integer("d"));
       }},
      {"slice",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return ball_slice_fraction(eps, a.integer("d"));
       }},
      {"a0",
       [](Args& a) {
         const double tol = a.real_or("tolerance", 1e-12);
         return scalar("waist_threshold_a0", {{"tolerance", tol}},
                       waist_threshold_a0(tol), "root of (2/a) exp(-a^2/2) = 1");
       }},
      {"chernoff",
       [](Args& a) {
         MgfSpec mgf;
         mgf.kind = parse_mgf_kind(a.text("mgf"));
         mgf.count = a.integer("count");
         if (mgf.kind == MgfKind::Bernoulli) mgf.p = a.real("p");
         const double threshold = a.real("a");
         return generic_chernoff(mgf, threshold, a.real_or("t_max", mgf.default_t_max()));
       }},
      {"bernstein",
       [](Args& a) {
         const double x = a.real("a");
         return bernstein_bound(x, a.integer("d"));
       }},
      {"bernoulli",
       [](Args& a) {
         const int n = a.integer("n");
         const double p = a.real("p");
         return bernoulli_chernoff(n, p, a.real("delta"));
       }},
      {"markov",
       [](Args& a) {
         const double mean = a.real("mean");
         return markov_bound(mean, a.real("a"));
       }},
      {"chebyshev",
       [](Args& a) {
         const double var = a.real("variance");
         return chebyshev_bound(var, a.real("a"));
       }},
      {"naive",
       [](Args& a) {
         const double x = a.real("a");
         return naive_exponential_bound(x, a.integer("d"));
       }},
      {"chi_square",
       [](Args& a) {
         const double x = a.real("a");
         return chi_square_chernoff(x, a.integer("d"));
       }},
      {"moment",
       [](Args& a) {
         const int k = a.integer("k");
         return scalar("gaussian_even_moment", {{"k", k}}, gaussian_even_moment(k),
                       "E X^(2k) for X ~ N(0, 1)");
       }},
      {"annulus",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return gaussian_annulus_bound(eps, a.integer("d"));
       }},
      {"ball_surface",
       [](Args& a) {
         const int n = a.integer("n");
         return ball_surface_threshold(n, a.integer("d"));
       }},
      {"ball_angle",
       [](Args& a) {
         const int n = a.integer("n");
         return ball_angle_threshold(n, a.integer("d"));
       }},
      {"orthogonality",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return gaussian_orthogonality_bound(eps, a.integer("d"));
       }},
      {"anticoncentration",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return gaussian_anticoncentration_bound(eps, a.integer("d"));
       }},
      {"rp",
       [](Args& a) {
         const double eps = a.real("epsilon");
         return rp_bound(eps, a.integer("k"));
       }},
      {"jl_dimension",
       [](Args& a) {
         const int n = a.integer("n");
         const double eps = a.real("epsilon");
         return scalar("jl_dimension", {{"n", n}, {"epsilon", eps}},
                       jl_dimension(n, eps), "smallest k >= 48 ln(n) / epsilon^2");
       }},
      {"jl_guarantee",
       [](Args& a) {
         const int n = a.integer("n");
         return jl_guarantee(n, a.real("epsilon"));
       }},
  };
  return table;
}

}  // namespace

BoundResult evaluate_bound(const std::string& name,
                           const std::map<std::string, std::string>& args) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::ostringstream msg;
    msg << "unknown bound '" << name << "'; known:";
    for (const auto& [key, _] : table) msg << ' ' << key;
    throw ArgumentError(msg.str());
  }
  Args parsed(name, args);
  BoundResult result = it->second(parsed);
  parsed.finish();
  return result;
}

std::vector<std::string> bound_names() {
  std::vector<std::string> names;
  for (const auto& [key, _] : registry()) names.push_back(key);
  return names;
}

std::map<std::string, std::string> parse_bound_args(
    const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> args;
  for (const auto& token : tokens) {
    std::istringstream stream(token);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ArgumentError("expected key=value, got '" + item + "'");
      }
      const auto key = item.substr(0, eq);
      if (!args.emplace(key, item.substr(eq + 1)).second) {
        throw ArgumentError("duplicate argument '" + key + "'");
      }
    }
  }
  return args;
}

}  // namespace hdconc
