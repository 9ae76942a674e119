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
#include <vector>

#include "hdconc/errors.hpp"
#include "hdconc/samplers.hpp"
#include "hdconc/stats.hpp"

using namespace hdconc;
using doctest::Approx;

namespace {

RowMatrixXd rows(std::initializer_list<std::initializer_list<double>> data) {
  RowMatrixXd m(static_cast<Eigen::Index>(data.size()),
                static_cast<Eigen::Index>(data.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : data) {
    Eigen::Index j = 0;
    for (const double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("norms") {
  CHECK(norms(rows({{3, 4}}))[0] == 5.0);
  CHECK(norms(rows({{0, 0, 0}}))[0] == 0.0);
  const int d = 37;
  const RowMatrixXd corner = RowMatrixXd::Ones(1, d);
  CHECK(norms(corner)[0] == Approx(std::sqrt(d)).epsilon(1e-15));
}

TEST_CASE("pairwise distances") {
  CHECK_THROWS_AS(pairwise_distances(rows({{1, 2}})), ArgumentError);
  const auto basis = pairwise_distances(rows({{1, 0, 0}, {0, 1, 0}}));
  CHECK(basis[0] == Approx(std::sqrt(2.0)).epsilon(1e-15));
  const auto dup = pairwise_distances(rows({{1, 2}, {3, 4}, {1, 2}}));
  REQUIRE(dup.size() == 3);
  CHECK(dup[1] == 0.0);  // pair (0, 2)
  const auto cloud = sample({Distribution::GaussianSpherical, 5, 1.0}, 100, RandomSeed{1});
  CHECK(pairwise_distances(cloud).size() == 4950);
}

TEST_CASE("pairwise kernels respect the point cap") {
  const RowMatrixXd big = RowMatrixXd::Zero(kMaxPairwisePoints + 1, 1);
  CHECK_THROWS_AS(pairwise_distances(big), ResourceError);
}

TEST_CASE("pairwise dots") {
  const auto ortho = pairwise_dots(rows({{1, 0}, {0, 1}}), false);
  CHECK(ortho[0] == 0.0);
  const auto cosine = pairwise_dots(rows({{1, 0}, {1, 1}}), true);
  CHECK(cosine[0] == Approx(0.7071067811865476).epsilon(1e-15));
  CHECK(pairwise_dots(rows({{1, 0}, {2, 0}, {3, 1}}), false).size() == 3);
  CHECK_THROWS_AS(pairwise_dots(rows({{1, 0}, {0, 0}}), true), DegenerateInputError);
  // Order is i<j lexicographic: (0,1), (0,2), (1,2).
  const auto ordered = pairwise_dots(rows({{1}, {2}, {3}}), false);
  CHECK(ordered[0] == 2.0);
  CHECK(ordered[1] == 3.0);
  CHECK(ordered[2] == 6.0);
}

TEST_CASE("summarize") {
  const std::vector<double> a{1, 2, 3};
  const auto s = summarize(a);
  CHECK(s.mean == 2.0);
  CHECK(s.variance == 1.0);
  CHECK(s.min == 1.0);
  CHECK(s.max == 3.0);
  const std::vector<double> constant(17, 0.1);
  CHECK(summarize(constant).variance == 0.0);
  const std::vector<double> spread{0, 10};
  CHECK(summarize(spread).mean == 5.0);
  CHECK(summarize(spread).variance == 50.0);
  CHECK(std::isnan(summarize(std::vector<double>{4.0}).variance));
  CHECK_THROWS_AS(summarize(std::vector<double>{}), ArgumentError);
}

TEST_CASE("histogram binning conventions") {
  const auto h = histogram(std::vector<double>{0.5}, 0.0, 1.0, 2);
  CHECK(h.counts == std::vector<std::size_t>{0, 1});
  const auto under = histogram(std::vector<double>{-1.0}, 0.0, 1.0, 2);
  CHECK(under.underflow == 1);
  const auto edges = histogram(std::vector<double>{0.0, 1.0, 1.5}, 0.0, 1.0, 4);
  CHECK(edges.counts.front() == 1);
  CHECK(edges.counts.back() == 1);  // hi falls into the closed last bin
  CHECK(edges.overflow == 1);
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 1.0, 1.0, 2), ArgumentError);
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 0.0, 1.0, 0), ArgumentError);
}

TEST_CASE("histogram conserves the sample count") {
  const auto cloud = sample({Distribution::GaussianSpherical, 1, 1.0}, 5000, RandomSeed{4});
  const Eigen::VectorXd v = cloud.points.col(0);
  const auto h = histogram(v, -1.0, 1.3, 23);
  CHECK(h.total() == 5000);
  for (std::size_t i = 0; i + 1 < h.bin_edges.size(); ++i) {
    CHECK(h.bin_edges[i] < h.bin_edges[i + 1]);
  }
}

TEST_CASE("Gaussian norms at d=100 peak near 10") {
  const auto cloud = sample({Distribution::GaussianSpherical, 100, 1.0}, 50000, RandomSeed{21});
  const auto h = histogram(norms(cloud), 6.8, 13.1, 63);
  const double center = h.bin_center(h.modal_bin());
  CHECK(center >= 9.7);
  CHECK(center <= 10.3);
}

TEST_CASE("norm summary concentrates near sqrt(d)") {
  for (const int d : {100, 400}) {
    const auto cloud = sample({Distribution::GaussianSpherical, d, 1.0}, 1000, RandomSeed{2});
    const auto s = summarize(norms(cloud));
    CHECK(std::abs(s.mean - std::sqrt(d)) <= 0.5);
    CHECK(s.variance <= 1.0);
  }
}

TEST_CASE("gaussian density") {
  CHECK_THROWS_AS(gaussian_density(0.0), ArgumentError);
  const auto phi = gaussian_density(1.0);
  CHECK(phi(0.0) == Approx(0.3989422804014327).epsilon(1e-15));
  for (const double x : {0.1, 0.7, 2.3, 5.0}) CHECK(phi(x) == phi(-x));
  CHECK(gaussian_density(2.0)(0.0) == Approx(phi(0.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("density grids") {
  const auto grid = tabulate_density(gaussian_density(1.0), -10.0, 10.0, 1e-3);
  CHECK(grid.values.size() == 20001);
  CHECK(std::abs(grid.trapezoid_mass() - 1.0) < 1e-6);
  CHECK(grid.at(0.0) == Approx(0.3989422804014327));
  CHECK(grid.at(-20.0) == 0.0);
}

TEST_CASE("convolution of standard normals is N(0, 2)") {
  const double dx = 1e-3;
  const auto f = tabulate_density(gaussian_density(1.0), -9.0, 9.0, dx);
  const auto conv = convolve_densities(f, f);
  const auto analytic = [](double s) {
    return std::exp(-s * s / 4.0) / std::sqrt(4.0 * std::numbers::pi);
  };
  CHECK(sup_distance(conv, analytic) < 1e-4);
  CHECK(std::abs(conv.trapezoid_mass() - 1.0) < 1e-6);
}

TEST_CASE("convolution closure N(0,a) * N(0,b) = N(0,a+b)") {
  const double dx = 2e-3;
  const double a = 0.5, b = 2.0;
  const auto f = tabulate_density(gaussian_density(std::sqrt(a)), -8.0, 8.0, dx);
  const auto g = tabulate_density(gaussian_density(std::sqrt(b)), -12.0, 12.0, dx);
  CHECK(sup_distance(convolve_densities(f, g), gaussian_density(std::sqrt(a + b))) < 1e-4);
}

TEST_CASE("convolution is commutative and associative") {
  const double dx = 5e-3;
  const auto f = tabulate_density(gaussian_density(0.7), -6.0, 6.0, dx);
  const auto g = tabulate_density([](double x) { return std::abs(x) <= 1.0 ? 0.5 : 0.0; },
                                  -1.5, 1.5, dx);
  const auto h = tabulate_density([](double x) { return x >= 0 ? std::exp(-x) : 0.0; },
                                  -1.0, 25.0, dx);
  const auto fg = convolve_densities(f, g);
  const auto gf = convolve_densities(g, f);
  CHECK(fg.values == gf.values);
  CHECK(fg.x0 == gf.x0);

  const auto left = convolve_densities(fg, h);
  const auto right = convolve_densities(f, convolve_densities(g, h));
  REQUIRE(left.values.size() == right.values.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < left.values.size(); ++i) {
    worst = std::max(worst, std::abs(left.values[i] - right.values[i]));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("narrow density acts as the identity") {
  const double dx = 1e-3;
  DensityGrid delta{0.0, dx, {1.0 / dx}};
  const auto g = tabulate_density(gaussian_density(1.0), -6.0, 6.0, dx);
  const auto out = convolve_densities(delta, g);
  CHECK(sup_distance(out, gaussian_density(1.0)) < 10 * dx);
  CHECK_THROWS_AS(convolve_densities(g, DensityGrid{0.0, 2 * dx, {1.0}}), ArgumentError);
}

TEST_CASE("linear combinations of Gaussians: variance is the sum of squares") {
  const std::vector<double> lambda{0.5, -1.5, 2.0, 0.25};
  const std::size_t n = 200000;
  const auto cloud = sample({Distribution::GaussianSpherical, 4, 1.0}, n, RandomSeed{31});
  const Eigen::Map<const Eigen::Vector4d> weights(lambda.data());
  const Eigen::VectorXd combo = cloud.points * weights;
  const auto s = summarize(combo);
  const double expected = weights.squaredNorm();
  CHECK(std::abs(s.variance - expected) <= 4.0 * std::sqrt(2.0 / n) * expected);
  CHECK(std::abs(s.mean) <= 4.0 * std::sqrt(expected / n));
}
