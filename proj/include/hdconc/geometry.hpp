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

#include "hdconc/bound_result.hpp"

namespace hdconc {

/// Volume of the closed unit ball in R^d by the recursion
/// V_d = (2*pi/d) * V_{d-2} from V_1 = 2, V_2 = pi. Underflows gracefully for
/// very large d; use log_ball_volume there.
double ball_volume(int d);

/// pi^(d/2) / Gamma(d/2 + 1), an independent route for cross-checking.
double ball_volume_gamma(int d);

/// log V_d, finite for every d >= 1.
double log_ball_volume(int d);

/// 1 - (1 - eps)^d: volume fraction of the eps-shell of a star-shaped body.
double shell_fraction(double epsilon, int d);

/// Lower bound 1 - exp(-eps*d) on the shell fraction.
BoundResult surface_concentration_bound(double epsilon, int d);

/// (2*eps)^d: total volume of the 2^d corner cubes of side eps in [-1, 1]^d.
double corner_volume(double epsilon, int d);

/// Lower bound on the ball volume fraction with |x_1| <= eps:
/// 1 - 2/(eps*sqrt(d-1)) * exp(-eps^2 (d-1)/2). Valid when positive.
BoundResult waist_concentration_bound(double epsilon, int d);

/// Unique root a0 of (2/a) exp(-a^2/2) = 1, bisected on [1, sqrt(5) - 1]
/// until the bracket is narrower than `tolerance` (>= 1e-14).
double waist_threshold_a0(double tolerance = 1e-12);

/// Upper bound on the ball volume fraction with |x_1| > eps.
BoundResult ball_slice_fraction(double epsilon, int d);

}  // namespace hdconc
