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

#include "hdconc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hdconc/errors.hpp"

namespace hdconc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_epsilon(double epsilon) {
  detail::require(epsilon > 0.0 && epsilon <= 1.0, "epsilon must lie in (0, 1]");
}

void check_waist_args(double epsilon, int d) {
  detail::require(d >= 3, "dimension must be >= 3");
  detail::require(epsilon > 0.0 && std::isfinite(epsilon), "epsilon must be > 0");
}

// (2/a) exp(-a^2/2)
double waist_factor(double a) { return 2.0 / a * std::exp(-0.5 * a * a); }

}  // namespace

double ball_volume(int d) {
  detail::require(d >= 1, "dimension must be >= 1");
  double volume = (d % 2 == 1) ? 2.0 : kPi;
  for (int k = (d % 2 == 1) ? 3 : 4; k <= d; k += 2) {
    volume *= 2.0 * kPi / k;
  }
  return volume;
}

double ball_volume_gamma(int d) {
  detail::require(d >= 1, "dimension must be >= 1");
  const double half = 0.5 * d;
  return std::pow(kPi, half) / std::tgamma(half + 1.0);
}

double log_ball_volume(int d) {
  detail::require(d >= 1, "dimension must be >= 1");
  const double half = 0.5 * d;
  return half * std::log(kPi) - std::lgamma(half + 1.0);
}

double shell_fraction(double epsilon, int d) {
  check_unit_epsilon(epsilon);
  detail::require(d >= 1, "dimension must be >= 1");
  return -std::expm1(d * std::log1p(-epsilon));
}

BoundResult surface_concentration_bound(double epsilon, int d) {
  check_unit_epsilon(epsilon);
  detail::require(d >= 1, "dimension must be >= 1");
  BoundResult r;
  r.name = "surface_concentration";
  r.inputs = {{"epsilon", epsilon}, {"d", d}};
  r.value = -std::expm1(-epsilon * d);
  r.valid = informative_lower(r.value);
  r.note = "lower bound on the volume fraction within epsilon of the boundary";
  return r;
}

double corner_volume(double epsilon, int d) {
  detail::require(epsilon > 0.0 && epsilon < 0.5, "epsilon must lie in (0, 1/2)");
  detail::require(d >= 1, "dimension must be >= 1");
  return std::pow(2.0 * epsilon, d);
}

BoundResult waist_concentration_bound(double epsilon, int d) {
  check_waist_args(epsilon, d);
  const double a = epsilon * std::sqrt(d - 1.0);
  BoundResult r;
  r.name = "waist_concentration";
  r.inputs = {{"epsilon", epsilon}, {"d", d}};
  r.value = 1.0 - waist_factor(a);
  r.valid = informative_lower(r.value);
  r.note = epsilon >= 1.0
               ? "trivial regime: every point of the ball has |x1| <= 1"
               : "lower bound on the volume fraction with |x1| <= epsilon";
  return r;
}

double waist_threshold_a0(double tolerance) {
  detail::require(tolerance >= 1e-14, "tolerance must be >= 1e-14");
  double lo = 1.0;                   // factor > 1
  double hi = std::sqrt(5.0) - 1.0;  // factor < 1
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (waist_factor(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoundResult ball_slice_fraction(double epsilon, int d) {
  check_waist_args(epsilon, d);
  BoundResult r;
  r.name = "ball_slice_fraction";
  r.inputs = {{"epsilon", epsilon}, {"d", d}};
  r.value = waist_factor(epsilon * std::sqrt(d - 1.0));
  r.valid = informative_upper(r.value);
  r.note = "upper bound on the volume fraction with |x1| > epsilon";
  return r;
}

}  // namespace hdconc
