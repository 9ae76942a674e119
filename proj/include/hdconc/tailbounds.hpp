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

#include <string_view>

#include "hdconc/bound_result.hpp"

namespace hdconc {

enum class MgfKind {
  Bernoulli,   // majorant E e^{tY} <= exp(p (e^t - 1))
  StdNormal,   // exp(t^2 / 2)
  ChiSquare1,  // (1 - 2t)^{-1/2}, finite for t < 1/2
};

/// `count` i.i.d. summands of one kind.
struct MgfSpec {
  MgfKind kind = MgfKind::StdNormal;
  double p = 0.5;  // Bernoulli only
  int count = 1;

  void validate() const;
  /// log E exp(t Y_i) for one summand; +inf where the MGF diverges.
  double log_mgf(double t) const;
  /// Default search window (0, t_max).
  double default_t_max() const;
};

MgfKind parse_mgf_kind(std::string_view name);

/// log of exp(-t a) * M(t)^count.
double chernoff_log_objective(const MgfSpec& mgf, double a, double t);

/// inf over t in (0, t_max) of exp(-t a) * M(t)^count, by golden-section
/// search on log t. Throws ArgumentError naming t if the MGF diverges inside
/// the window. inputs["t_opt"] records the minimizer.
BoundResult generic_chernoff(const MgfSpec& mgf, double a, double t_max);

/// 2 exp(-(1/4) min(a^2/d, a)).
BoundResult bernstein_bound(double a, int d);

/// (e^delta / (1+delta)^(1+delta))^(n p) on P[Y >= (1+delta) n p].
BoundResult bernoulli_chernoff(int n, double p, double delta);

BoundResult markov_bound(double mean, double a);
BoundResult chebyshev_bound(double variance, double a);

/// (a/d)^d exp(d - a) for a > d, else 1.
BoundResult naive_exponential_bound(double a, int d);

/// Chi-square Chernoff with the closed-form minimizer t* = (1 - d/a)/2:
/// (a/d)^(d/2) exp((d - a)/2) for a > d, else 1.
BoundResult chi_square_chernoff(double a, int d);

/// E X^(2k) = (2k-1)!! for X ~ N(0, 1); k <= 150.
double gaussian_even_moment(int k);

/// 2 exp(-eps^2 / 16) on P[| ||x|| - sqrt(d) | >= eps], 0 <= eps <= sqrt(d).
BoundResult gaussian_annulus_bound(double epsilon, int d);

/// n uniform ball points all have norm >= 1 - 2 ln(n)/d with probability
/// >= 1 - 1/n.
BoundResult ball_surface_threshold(int n, int d);

/// n uniform ball points have pairwise |<x, y>| <= sqrt(6 ln n)/sqrt(d-1)
/// with probability >= 1 - 1/n.
BoundResult ball_angle_threshold(int n, int d);

/// (2/eps + 7)/sqrt(d) on P[|<x/|x|, y/|y|>| >= eps] for Gaussian x, y.
BoundResult gaussian_orthogonality_bound(double epsilon, int d);

/// eps + 2 exp(-d/16) on P[|<x/|x|, y/|y|>| <= eps/(2 sqrt(d))].
BoundResult gaussian_anticoncentration_bound(double epsilon, int d);

}  // namespace hdconc
