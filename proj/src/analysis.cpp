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

#include "miw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "miw/error.hpp"
#include "miw/normal.hpp"

namespace miw {

bool PropertyReport::zero_mean_ok() const { return std::abs(sum) <= tolerance * static_cast<double>(n); }
bool PropertyReport::variance_ok() const {
  return std::abs(sum_of_squares_minus) <= tolerance * static_cast<double>(n);
}
bool PropertyReport::symmetry_ok() const { return max_symmetry_defect <= tolerance; }

bool PropertyReport::passed() const { return Failures().empty(); }

std::vector<std::string> PropertyReport::Failures() const {
  std::vector<std::string> failed;
  if (!zero_mean_ok()) failed.emplace_back("zero_mean");
  if (!variance_ok()) failed.emplace_back("variance");
  if (!symmetry_ok()) failed.emplace_back("symmetry");
  if (!monotone) failed.emplace_back("monotone");
  if (!mesh_ok()) failed.emplace_back("mesh");
  if (!x1_lower_bound_ok) failed.emplace_back("x1_lower_bound");
  return failed;
}

PropertyReport VerifyProperties(const Configuration& cfg, double tolerance) {
  PropertyReport r;
  r.n = cfg.n;
  r.tolerance = tolerance;
  const std::size_t n = cfg.n;
  const int digits = std::max(cfg.precision_digits, 17);

  // Sums use the stored working precision; the double view would add
  // rounding noise of order N * 1e-16.
  Real sum(0.0, digits), sumsq(0.0, digits);
  Real symmetry(0.0, digits);
  for (std::size_t i = 0; i < n; ++i) {
    const Real& x = cfg.exact_values[i];
    sum += x;
    sumsq += x * x;
    const Real defect = abs(x + cfg.exact_values[n - 1 - i]);
    if (defect > symmetry) symmetry = defect;
  }
  r.sum = sum.to_double();
  r.sum_of_squares_minus = (sumsq - static_cast<double>(n - 1)).to_double();
  r.max_symmetry_defect = symmetry.to_double();

  r.monotone = true;
  r.mesh = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(cfg.exact_values[i + 1] < cfg.exact_values[i])) r.monotone = false;
    r.mesh = std::max(r.mesh, cfg.values[i] - cfg.values[i + 1]);
  }
  const double log_n = std::log(static_cast<double>(n));
  r.mesh_bound = log_n > 0 ? 2.0 / std::sqrt(log_n) : std::numeric_limits<double>::infinity();
  r.x1_lower_bound = log_n > 0 ? std::sqrt(log_n) / 2.0 : 0.0;
  r.x1_lower_bound_ok = n > 0 && cfg.values.front() >= r.x1_lower_bound;
  return r;
}

HamiltonianReport Hamiltonian(std::span<const double> values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (values[i] == values[i + 1]) {
      throw Error(ErrorKind::kDegenerateConfiguration, "repeated value at index " + std::to_string(i + 1));
    }
    if (values[i] < values[i + 1]) {
      throw Error(ErrorKind::kInvalidInput, "values must be decreasing (index " + std::to_string(i + 1) + ")");
    }
  }
  // inv_gap(i) = 1 / (x_{i+1} - x_i) in 0-based terms, zero at both ends.
  auto inv_gap = [&](std::ptrdiff_t i) {
    if (i < 0 || i + 1 >= static_cast<std::ptrdiff_t>(n)) return 0.0;
    return 1.0 / (values[i + 1] - values[i]);
  };
  HamiltonianReport h;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const double term = inv_gap(k) - inv_gap(k - 1);
    h.interworld += term * term;
    h.potential += values[i] * values[i];
  }
  h.total = h.interworld + h.potential;
  h.ground_state_energy = 2.0 * (static_cast<double>(n) - 1.0);
  h.defect = std::abs(h.total - h.ground_state_energy);
  return h;
}

std::vector<QuantileRow> QuantileDeviation(const Configuration& cfg) {
  std::vector<QuantileRow> rows;
  rows.reserve(cfg.n);
  const double n = static_cast<double>(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    QuantileRow row;
    row.index = i + 1;
    row.value = cfg.values[i];
    row.quantile = NormalUpperQuantile((static_cast<double>(i) + 0.5) / n);
    row.deviation = row.value - row.quantile;
    rows.push_back(row);
  }
  return rows;
}

double MaxIntermediateDeviation(const std::vector<QuantileRow>& rows, double lo_frac, double hi_frac) {
  const double n = static_cast<double>(rows.size());
  double worst = 0;
  for (const auto& row : rows) {
    const double k = static_cast<double>(row.index);
    if (k >= lo_frac * n && k <= hi_frac * n) worst = std::max(worst, std::abs(row.deviation));
  }
  return worst;
}

}  // namespace miw
