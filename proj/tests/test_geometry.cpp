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
#include <numbers>
#include <random>

#include "hdconc/errors.hpp"
#include "hdconc/geometry.hpp"
#include "hdconc/samplers.hpp"

using namespace hdconc;
using doctest::Approx;

TEST_CASE("ball volume base cases and recursion") {
  CHECK(ball_volume(1) == 2.0);
  CHECK(ball_volume(2) == std::numbers::pi);
  CHECK(ball_volume(4) == Approx(4.934802200544679).epsilon(1e-15));
  CHECK_THROWS_AS(ball_volume(0), ArgumentError);
}

TEST_CASE("recursion agrees with the Gamma form") {
  for (int d = 1; d <= 170; ++d) {
    CAPTURE(d);
    const double rel = std::abs(ball_volume(d) / ball_volume_gamma(d) - 1.0);
    CHECK(rel < 1e-12);
  }
  for (const int d : {200, 500, 1000, 5000}) {
    CHECK(std::isfinite(log_ball_volume(d)));
  }
  CHECK(std::log(ball_volume(300)) == Approx(log_ball_volume(300)).epsilon(1e-12));
}

TEST_CASE("ball volume peaks at d=5 and then decreases") {
  for (int d = 1; d <= 60; ++d) {
    if (d != 5) CHECK(ball_volume(d) < ball_volume(5));
  }
  for (int d = 6; d < 400; ++d) CHECK(ball_volume(d + 1) < ball_volume(d));
  CHECK(ball_volume(400) < 1e-100);
}

TEST_CASE("shell fraction") {
  CHECK(shell_fraction(1.0, 7) == 1.0);
  CHECK(shell_fraction(0.01, 100) == Approx(0.6339676587267705).epsilon(1e-14));
  CHECK(shell_fraction(0.5, 1) == 0.5);
  CHECK_THROWS_AS(shell_fraction(0.0, 3), ArgumentError);
  CHECK_THROWS_AS(shell_fraction(1.5, 3), ArgumentError);
}

TEST_CASE("surface concentration bound") {
  const auto r = surface_concentration_bound(0.01, 100);
  CHECK(r.value == Approx(0.6321205588285577).epsilon(1e-14));
  CHECK(r.valid);
  CHECK(shell_fraction(1.0, 1) >= surface_concentration_bound(1.0, 1).value);
  const double eps = 2.0 / 100 * std::log(10.0);
  CHECK(surface_concentration_bound(eps, 100).value == Approx(0.99).epsilon(1e-13));
}

TEST_CASE("exponential dominance (1 - eps)^d <= exp(-eps d)") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> eps_dist(1e-9, 1.0);
  std::uniform_int_distribution<int> d_dist(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const double eps = eps_dist(gen);
    const int d = d_dist(gen);
    CHECK(d * std::log1p(-eps) <= -eps * d);
    CHECK(shell_fraction(eps, d) >= surface_concentration_bound(eps, d).value - 1e-15);
  }
}

TEST_CASE("corner volume") {
  CHECK(corner_volume(0.25, 2) == 0.25);
  CHECK(corner_volume(0.1, 1) == Approx(0.2));
  CHECK(corner_volume(0.25, 20) == 9.5367431640625e-07);
  CHECK_THROWS_AS(corner_volume(0.5, 2), ArgumentError);
}

TEST_CASE("waist concentration bound") {
  const auto good = waist_concentration_bound(1.0, 5);
  CHECK(good.value == Approx(0.8646647167633873).epsilon(1e-14));
  CHECK(good.valid);
  const auto bad = waist_concentration_bound(1.0 / std::sqrt(8.0), 9);
  CHECK(bad.value == Approx(-0.2130613194252668).epsilon(1e-13));
  CHECK_FALSE(bad.valid);
  CHECK(waist_concentration_bound(1.5, 3).valid);
  CHECK_THROWS_AS(waist_concentration_bound(0.5, 2), ArgumentError);
}

TEST_CASE("waist threshold a0") {
  const double a0 = waist_threshold_a0(1e-12);
  CHECK(a0 == Approx(1.0964341627279966).epsilon(1e-11));
  CHECK(a0 > 1.0);
  CHECK(a0 < std::sqrt(5.0) - 1.0);
  const auto f = [](double a) { return 2.0 / a * std::exp(-a * a / 2.0); };
  CHECK(std::abs(f(a0) - 1.0) < 1e-10);
  CHECK(f(a0 + 0.1) < 1.0);
  CHECK(f(a0 - 0.1) > 1.0);
  CHECK_THROWS_AS(waist_threshold_a0(1e-16), ArgumentError);
}

TEST_CASE("ball slice fraction") {
  CHECK(ball_slice_fraction(1.0, 5).value == Approx(0.1353352832366127).epsilon(1e-14));
  CHECK(ball_slice_fraction(3.0, 1000).value < 1e-300);
  CHECK_THROWS_AS(ball_slice_fraction(1.0, 2), ArgumentError);
}

TEST_CASE("slice and waist bounds hold for sampled ball points") {
  const std::size_t n = 100000;
  const int d = 50;
  const auto cloud = sample({Distribution::BallUniform, d, 1.0}, n, RandomSeed{77});
  const auto first = cloud.points.col(0).cwiseAbs();
  for (const double eps : {0.2, 0.3, 0.4}) {
    const double outside = (first.array() > eps).count() / double(n);
    const auto slice = ball_slice_fraction(eps, d);
    CAPTURE(eps);
    CHECK(outside <= slice.value);
    const auto waist = waist_concentration_bound(eps, d);
    if (waist.valid) {
      const double p = 1.0 - outside;
      CHECK(p >= waist.value - 4.0 * std::sqrt(p * (1.0 - p) / n));
    }
  }
}
