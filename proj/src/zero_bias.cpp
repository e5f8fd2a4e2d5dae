// Copyright 2026 The miw-oscillator Authors.
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

#include "miw/zero_bias.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "miw/error.hpp"

namespace miw {

double ZeroBiasDensity::TotalMass() const {
  double total = 0;
  for (std::size_t i = 0; i < intervals(); ++i) total += heights[i] * gap(i);
  return total;
}

double ZeroBiasDensity::Moment(int k) const {
  double total = 0;
  for (std::size_t i = 0; i < intervals(); ++i) {
    total += heights[i] * (std::pow(upper(i), k + 1) - std::pow(lower(i), k + 1)) / (k + 1);
  }
  return total;
}

ZeroBiasDensity BuildDensity(const Configuration& cfg) {
  const std::size_t n = cfg.values.size();
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "density needs at least two points");
  ZeroBiasDensity d;
  d.breakpoints = cfg.values;
  d.heights.reserve(n - 1);
  d.masses.reserve(n - 1);
  const double scale = static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = cfg.values[i] - cfg.values[i + 1];
    if (!(gap > 0)) {
      throw Error(ErrorKind::kDegenerateConfiguration, "non-positive gap after index " + std::to_string(i + 1));
    }
    d.heights.push_back(1.0 / (scale * gap));
    d.masses.push_back(d.heights.back() * gap);
  }
  return d;
}

double DensityAt(const ZeroBiasDensity& density, double x) {
  const auto& b = density.breakpoints;
  if (b.size() < 2 || !(x >= b.back()) || !(x < b.front())) return 0.0;
  // First breakpoint (scanning the decreasing sequence) that is <= x.
  auto it = std::lower_bound(b.begin(), b.end(), x, [](double value, double key) { return value > key; });
  const auto lower_index = static_cast<std::size_t>(it - b.begin());
  return density.heights[lower_index - 1];
}

double SampleZeroBias(const ZeroBiasDensity& density, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, density.intervals() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t i = pick(rng);
  return density.lower(i) + unit(rng) * density.gap(i);
}

ZeroBiasCoupling::ZeroBiasCoupling(const Configuration& cfg)
    : density_(BuildDensity(cfg)), table_(CouplingMasses(cfg)) {
  const double scale = static_cast<double>(cfg.n - 1);
  lower_fraction_.reserve(table_.splits.size());
  for (const auto& split : table_.splits) lower_fraction_.push_back(split.lower * scale);
}

CoupledPair ZeroBiasCoupling::Sample(Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, density_.intervals() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t i = pick(rng);
  const double u = unit(rng);
  CoupledPair pair;
  pair.interval = i;
  pair.zero_bias = density_.lower(i) + u * density_.gap(i);
  pair.atom = u < lower_fraction_[i] ? density_.lower(i) : density_.upper(i);
  return pair;
}

double ZeroBiasCoupling::ExpectedDistance() const {
  // Within an interval of length g whose lower share is p, the distance to
  // the assigned endpoint averages g (p^2 + (1 - p)^2) / 2.
  double total = 0;
  for (std::size_t i = 0; i < density_.intervals(); ++i) {
    const double p = lower_fraction_[i];
    total += density_.masses[i] * density_.gap(i) * (p * p + (1 - p) * (1 - p)) / 2;
  }
  return total;
}

double ZeroBiasIdentityDefect(const Configuration& cfg, const std::function<double(double)>& f) {
  const ZeroBiasDensity density = BuildDensity(cfg);
  const double n = static_cast<double>(cfg.n);
  const double variance = 1.0 - 1.0 / n;
  double zero_bias_side = 0;
  for (std::size_t i = 0; i < density.intervals(); ++i) {
    zero_bias_side += density.heights[i] * (f(density.upper(i)) - f(density.lower(i)));
  }
  double atom_side = 0;
  for (double x : cfg.values) atom_side += x * f(x);
  return variance * zero_bias_side - atom_side / n;
}

}  // namespace miw
