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

#include "hdconc/tailbounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hdconc/errors.hpp"

namespace hdconc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double x, const char* name) {
  detail::require(std::isfinite(x) && x > 0.0, std::string(name) + " must be > 0");
}

void require_dimension(int d) { detail::require(d >= 1, "d must be >= 1"); }

BoundResult upper(std::string name, std::map<std::string, double> inputs,
                  double value, std::string note) {
  BoundResult r{std::move(name), std::move(inputs), value, informative_upper(value),
                std::move(note)};
  return r;
}

}  // namespace

void MgfSpec::validate() const {
  detail::require(count >= 1, "mgf count must be >= 1");
  if (kind == MgfKind::Bernoulli) {
    detail::require(p >= 0.0 && p <= 1.0, "bernoulli p must lie in [0, 1]");
  }
}

double MgfSpec::log_mgf(double t) const {
  switch (kind) {
    case MgfKind::Bernoulli:
      return p * std::expm1(t);
    case MgfKind::StdNormal:
      return 0.5 * t * t;
    case MgfKind::ChiSquare1:
      return t < 0.5 ? -0.5 * std::log1p(-2.0 * t) : kInf;
  }
  return kInf;
}

double MgfSpec::default_t_max() const {
  return kind == MgfKind::ChiSquare1 ? 0.499 : 50.0;
}

MgfKind parse_mgf_kind(std::string_view name) {
  if (name == "bernoulli") return MgfKind::Bernoulli;
  if (name == "normal" || name == "std_normal") return MgfKind::StdNormal;
  if (name == "chi2" || name == "chi_square") return MgfKind::ChiSquare1;
  throw ArgumentError("unknown mgf kind '" + std::string(name) +
                      "' (expected bernoulli, normal or chi2)");
}

double chernoff_log_objective(const MgfSpec& mgf, double a, double t) {
  return -t * a + mgf.count * mgf.log_mgf(t);
}

BoundResult generic_chernoff(const MgfSpec& mgf, double a, double t_max) {
  mgf.validate();
  require_positive(a, "a");
  require_positive(t_max, "t_max");
  if (!std::isfinite(mgf.log_mgf(t_max))) {
    std::ostringstream msg;
    msg << "mgf diverges inside the search window at t=" << t_max;
    throw ArgumentError(msg.str());
  }

  auto objective = [&](double log_t) {
    return chernoff_log_objective(mgf, a, std::exp(log_t));
  };
  // The objective is convex in t, hence unimodal in log t.
  double lo = std::log(t_max) - 60.0;
  double hi = std::log(t_max);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  double best_log_t = f1 < f2 ? x1 : x2;
  double best = std::min(f1, f2);
  while (hi - lo > 1e-10) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
      if (f1 < best) best = f1, best_log_t = x1;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
      if (f2 < best) best = f2, best_log_t = x2;
    }
  }
  // Endpoints: t_max itself and the t -> 0 limit (objective -> 0).
  const double at_max = objective(std::log(t_max));
  if (at_max < best) best = at_max, best_log_t = std::log(t_max);
  if (best > 0.0) best = 0.0, best_log_t = lo;

  BoundResult r;
  r.name = "generic_chernoff";
  r.inputs = {{"a", a},
              {"count", mgf.count},
              {"t_max", t_max},
              {"t_opt", std::exp(best_log_t)}};
  if (mgf.kind == MgfKind::Bernoulli) r.inputs["p"] = mgf.p;
  r.value = std::exp(best);
  r.valid = informative_upper(r.value);
  r.note = "inf_t exp(-t a) M(t)^count over (0, t_max)";
  return r;
}

BoundResult bernstein_bound(double a, int d) {
  require_positive(a, "a");
  require_dimension(d);
  const double exponent = 0.25 * std::min(a * a / d, a);
  return upper("bernstein", {{"a", a}, {"d", d}}, 2.0 * std::exp(-exponent),
               "P[|Y_1 + ... + Y_d| >= a] for moments |E Y^k| <= k!/2");
}

BoundResult bernoulli_chernoff(int n, double p, double delta) {
  detail::require(n >= 1, "n must be >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  require_positive(delta, "delta");
  const double np = n * p;
  const double log_value = np * (delta - (1.0 + delta) * std::log1p(delta));
  return upper("bernoulli_chernoff",
               {{"n", n}, {"p", p}, {"delta", delta}, {"threshold", (1.0 + delta) * np}},
               std::exp(log_value), "P[Y >= (1 + delta) n p]");
}

BoundResult markov_bound(double mean, double a) {
  require_positive(a, "a");
  require_positive(mean, "mean");
  return upper("markov", {{"mean", mean}, {"a", a}}, mean / a, "P[Y >= a]");
}

BoundResult chebyshev_bound(double variance, double a) {
  require_positive(a, "a");
  require_positive(variance, "variance");
  return upper("chebyshev", {{"variance", variance}, {"a", a}},
               variance / (a * a), "P[|Y - E Y| >= a]");
}

BoundResult naive_exponential_bound(double a, int d) {
  require_positive(a, "a");
  require_dimension(d);
  const double value =
      a > d ? std::exp(d * std::log(a / d) + (d - a)) : 1.0;
  return upper("naive_exponential", {{"a", a}, {"d", d}}, value,
               "P[Y_1 + ... + Y_d >= a] for moments |E Y^k| <= k!");
}

BoundResult chi_square_chernoff(double a, int d) {
  require_positive(a, "a");
  require_dimension(d);
  BoundResult r = upper("chi_square_chernoff", {{"a", a}, {"d", d}}, 1.0,
                        "P[X_1^2 + ... + X_d^2 >= a]");
  if (a > d) {
    r.inputs["t_opt"] = 0.5 * (1.0 - d / a);
    r.value = std::exp(0.5 * d * std::log(a / d) + 0.5 * (d - a));
    r.valid = informative_upper(r.value);
  }
  return r;
}

double gaussian_even_moment(int k) {
  detail::require(k >= 0, "k must be >= 0");
  if (k > 150) throw ArgumentError("gaussian_even_moment supports k <= 150");
  double moment = 1.0;
  for (int j = 1; j <= k; ++j) moment *= 2.0 * j - 1.0;
  return moment;
}

BoundResult gaussian_annulus_bound(double epsilon, int d) {
  detail::require(std::isfinite(epsilon) && epsilon >= 0.0, "epsilon must be >= 0");
  require_dimension(d);
  const bool in_window = epsilon <= std::sqrt(static_cast<double>(d));
  BoundResult r = upper("gaussian_annulus", {{"epsilon", epsilon}, {"d", d}},
                        2.0 * std::exp(-epsilon * epsilon / 16.0),
                        "P[| ||x|| - sqrt(d) | >= epsilon]");
  if (!in_window) {
    r.valid = false;
    r.note = "epsilon exceeds sqrt(d); outside the range where the bound applies";
  }
  return r;
}

BoundResult ball_surface_threshold(int n, int d) {
  detail::require(n >= 2, "n must be >= 2");
  detail::require(d >= 3, "d must be >= 3");
  const double epsilon = 2.0 * std::log(static_cast<double>(n)) / d;
  BoundResult r;
  r.name = "ball_surface_threshold";
  r.inputs = {{"n", n}, {"d", d}, {"epsilon", epsilon}};
  r.value = 1.0 - 1.0 / n;
  r.valid = epsilon < 1.0;
  r.note = "P[all ||x_j|| >= 1 - epsilon]";
  return r;
}

BoundResult ball_angle_threshold(int n, int d) {
  detail::require(n >= 2, "n must be >= 2");
  detail::require(d >= 3, "d must be >= 3");
  const double epsilon =
      std::sqrt(6.0 * std::log(static_cast<double>(n))) / std::sqrt(d - 1.0);
  BoundResult r;
  r.name = "ball_angle_threshold";
  r.inputs = {{"n", n}, {"d", d}, {"epsilon", epsilon}};
  r.value = 1.0 - 1.0 / n;
  r.valid = epsilon < 1.0;
  r.note = "P[all |<x_j, x_k>| <= epsilon]";
  return r;
}

BoundResult gaussian_orthogonality_bound(double epsilon, int d) {
  require_positive(epsilon, "epsilon");
  require_dimension(d);
  return upper("gaussian_orthogonality", {{"epsilon", epsilon}, {"d", d}},
               (2.0 / epsilon + 7.0) / std::sqrt(static_cast<double>(d)),
               "P[|<x/|x|, y/|y|>| >= epsilon]");
}

BoundResult gaussian_anticoncentration_bound(double epsilon, int d) {
  require_positive(epsilon, "epsilon");
  require_dimension(d);
  const double threshold = epsilon / (2.0 * std::sqrt(static_cast<double>(d)));
  return upper("gaussian_anticoncentration",
               {{"epsilon", epsilon}, {"d", d}, {"threshold", threshold}},
               epsilon + 2.0 * std::exp(-d / 16.0),
               "P[|<x/|x|, y/|y|>| <= threshold]");
}

}  // namespace hdconc
