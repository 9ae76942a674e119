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

#include "hdconc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hdconc {

std::size_t Histogram::total() const {
  std::size_t sum = underflow + overflow;
  for (const auto c : counts) sum += c;
  return sum;
}

std::size_t Histogram::modal_bin() const {
  return static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double DensityGrid::at(double x) const {
  if (values.empty()) return 0.0;
  const double position = (x - x0) / dx;
  if (position < 0.0 || position > static_cast<double>(values.size() - 1)) {
    return 0.0;
  }
  const auto i = static_cast<std::size_t>(position);
  if (i + 1 >= values.size()) return values.back();
  const double w = position - static_cast<double>(i);
  return (1.0 - w) * values[i] + w * values[i + 1];
}

double DensityGrid::trapezoid_mass() const {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * dx;
}

SummaryStats summarize(std::span<const double> values) {
  detail::require(!values.empty(), "summarize needs at least one value");
  SummaryStats s;
  s.count = values.size();
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;

  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  // Rounding can push the mean a hair outside [min, max] for constant input.
  s.mean = std::clamp(s.mean, s.min, s.max);

  if (s.count < 2) {
    s.variance = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double squares = 0.0;
  double residual = 0.0;
  for (const double v : values) {
    const double delta = v - s.mean;
    squares += delta * delta;
    residual += delta;
  }
  const double n = static_cast<double>(s.count);
  s.variance = (squares - residual * residual / n) / (n - 1.0);
  s.variance = std::max(s.variance, 0.0);
  return s;
}

Histogram histogram(std::span<const double> values, double lo, double hi,
                    std::size_t bins) {
  detail::require(lo < hi, "histogram needs lo < hi");
  detail::require(bins >= 1, "histogram needs at least one bin");
  Histogram h;
  h.bin_edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.bin_edges[i] = lo + static_cast<double>(i) * width;
  }
  h.bin_edges.back() = hi;
  h.counts.assign(bins, 0);

  for (const double v : values) {
    if (v < lo) {
      ++h.underflow;
      continue;
    }
    if (v > hi) {
      ++h.overflow;
      continue;
    }
    auto bin = static_cast<std::size_t>((v - lo) / width);
    bin = std::min(bin, bins - 1);
    // Settle rounding against the stored edges.
    while (bin > 0 && v < h.bin_edges[bin]) --bin;
    while (bin + 1 < bins && v >= h.bin_edges[bin + 1]) ++bin;
    ++h.counts[bin];
  }
  return h;
}

std::function<double(double)> gaussian_density(double sigma) {
  detail::require(std::isfinite(sigma) && sigma > 0.0,
                  "gaussian_density needs sigma > 0");
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  const double inv_two_var = 1.0 / (2.0 * sigma * sigma);
  return [norm, inv_two_var](double x) {
    return norm * std::exp(-x * x * inv_two_var);
  };
}

DensityGrid tabulate_density(const std::function<double(double)>& f, double lo,
                             double hi, double dx) {
  detail::require(lo < hi && dx > 0.0, "tabulate_density needs lo < hi, dx > 0");
  const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / dx));
  DensityGrid grid{lo, dx, {}};
  grid.values.resize(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid.values[i] = f(grid.x(i));
  return grid;
}

DensityGrid convolve_densities(const DensityGrid& f, const DensityGrid& g) {
  detail::require(!f.values.empty() && !g.values.empty(),
                  "convolve_densities needs non-empty grids");
  const double tolerance = 1e-12 * std::max(f.dx, g.dx);
  if (std::abs(f.dx - g.dx) > tolerance) {
    throw ArgumentError("convolve_densities needs identical grid steps");
  }
  // Canonical operand order so f*g and g*f accumulate identically.
  const bool f_first =
      f.values.size() != g.values.size()
          ? f.values.size() > g.values.size()
          : (f.x0 != g.x0 ? f.x0 < g.x0
                          : !std::lexicographical_compare(
                                g.values.begin(), g.values.end(),
                                f.values.begin(), f.values.end()));
  const DensityGrid& a = f_first ? f : g;
  const DensityGrid& b = f_first ? g : f;
  const std::size_t na = a.values.size();
  const std::size_t nb = b.values.size();

  DensityGrid out{f.x0 + g.x0, f.dx, std::vector<double>(na + nb - 1, 0.0)};
  for (std::size_t j = 0; j < nb; ++j) {
    const double weight = b.values[j] * f.dx;
    if (weight == 0.0) continue;
    double* target = out.values.data() + j;
    for (std::size_t i = 0; i < na; ++i) target[i] += weight * a.values[i];
  }
  return out;
}

double sup_distance(const DensityGrid& grid,
                    const std::function<double(double)>& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    worst = std::max(worst, std::abs(grid.values[i] - f(grid.x(i))));
  }
  return worst;
}

}  // namespace hdconc
