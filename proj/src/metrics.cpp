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

#include "miw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "miw/error.hpp"
#include "miw/normal.hpp"
#include "miw/zero_bias.hpp"

namespace miw {

namespace {

std::vector<double> Ascending(const Configuration& cfg) {
  if (cfg.values.size() < 2) throw Error(ErrorKind::kInvalidInput, "configuration needs at least two points");
  std::vector<double> z(cfg.values.rbegin(), cfg.values.rend());
  if (!std::is_sorted(z.begin(), z.end())) throw Error(ErrorKind::kInvalidInput, "values must be decreasing");
  return z;
}

// Point in [a, b] where Phi crosses level c (clamped to the interval).
double CrossingPoint(double c, double a, double b) {
  return std::clamp(NormalUpperQuantile(1.0 - c), a, b);
}

double Simpson(const auto& f, double a, double b, double max_step) {
  if (!(b > a)) return 0.0;
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_step));
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = i + 1 == panels ? b : lo + h;
    total += (hi - lo) / 6.0 * (f(lo) + 4.0 * f((lo + hi) / 2.0) + f(hi));
  }
  return total;
}

// Integral of |d| for d linear from d0 to d1 over a segment of length len.
double AbsLinearIntegral(double d0, double d1, double len) {
  if ((d0 >= 0 && d1 >= 0) || (d0 <= 0 && d1 <= 0)) return len * std::abs(d0 + d1) / 2.0;
  return len * (d0 * d0 + d1 * d1) / (2.0 * (std::abs(d0) + std::abs(d1)));
}

}  // namespace

double WassersteinToNormal(const Configuration& cfg) {
  const std::vector<double> z = Ascending(cfg);
  const double n = static_cast<double>(z.size());
  // Left tail: integral of Phi up to z_0. Right tail: of 1 - Phi beyond the
  // top atom, phi(x) - x (1 - Phi(x)) = NormalCdfIntegral(-x).
  double total = NormalCdfIntegral(z.front()) + NormalCdfIntegral(-z.back());
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const double a = z[k], b = z[k + 1];
    const double c = static_cast<double>(k + 1) / n;
    const double x = CrossingPoint(c, a, b);
    total += c * (x - a) - (NormalCdfIntegral(x) - NormalCdfIntegral(a));
    total += (NormalCdfIntegral(b) - NormalCdfIntegral(x)) - c * (b - x);
  }
  return total;
}

double WassersteinToNormalQuadrature(const Configuration& cfg, double max_step) {
  if (!(max_step > 0)) throw Error(ErrorKind::kInvalidInput, "max_step must be positive");
  const std::vector<double> z = Ascending(cfg);
  const double n = static_cast<double>(z.size());
  double total = Simpson([](double x) { return NormalCdf(x); }, z.front() - 12.0, z.front(), max_step);
  total += Simpson([](double x) { return NormalSf(x); }, z.back(), z.back() + 12.0, max_step);
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const double c = static_cast<double>(k + 1) / n;
    const double x = CrossingPoint(c, z[k], z[k + 1]);
    auto gap = [c](double t) { return std::abs(c - NormalCdf(t)); };
    total += Simpson(gap, z[k], x, max_step) + Simpson(gap, x, z[k + 1], max_step);
  }
  return total;
}

double WassersteinEmpiricalToZeroBias(const Configuration& cfg) {
  const std::vector<double> z = Ascending(cfg);
  const double n = static_cast<double>(z.size());
  double total = 0;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double step_cdf = (kk + 1) / n;
    const double d0 = step_cdf - kk / (n - 1);
    const double d1 = step_cdf - (kk + 1) / (n - 1);
    total += AbsLinearIntegral(d0, d1, z[k + 1] - z[k]);
  }
  return total;
}

double SteinUpperBound(const Configuration& cfg) {
  return 4.0 * cfg.x1() / (static_cast<double>(cfg.n) - 1.0);
}

double Sawtooth(std::span<const double> values, double x) {
  if (values.size() < 2 || !(x <= values.front()) || !(x >= values.back())) return 0.0;
  auto it = std::lower_bound(values.begin(), values.end(), x, [](double v, double key) { return v > key; });
  if (*it == x) return 0.0;
  const double lower = *it;
  const double upper = *(it - 1);
  return std::min(x - lower, upper - x);
}

SawtoothBound SawtoothLowerBound(const Configuration& cfg) {
  const ZeroBiasDensity density = BuildDensity(cfg);
  SawtoothBound r;
  r.value = cfg.x1() / (2.0 * (static_cast<double>(cfg.n) - 1.0));
  for (std::size_t i = 0; i < density.intervals(); ++i) {
    const double a = density.lower(i), b = density.upper(i);
    const double mid = (a + b) / 2.0;
    const double ha = Sawtooth(cfg.values, a), hm = Sawtooth(cfg.values, mid), hb = Sawtooth(cfg.values, b);
    // h is linear on [a, mid] and [mid, b]; the trapezoid rule is exact there.
    r.zero_bias_expectation += density.heights[i] * ((mid - a) * (ha + hm) / 2.0 + (b - mid) * (hm + hb) / 2.0);
    r.max_slope = std::max({r.max_slope, std::abs(hm - ha) / (mid - a), std::abs(hb - hm) / (b - mid)});
  }
  for (double x : cfg.values) r.empirical_expectation += Sawtooth(cfg.values, x);
  r.empirical_expectation /= static_cast<double>(cfg.n);
  if (std::abs(r.zero_bias_expectation - r.value) > 1e-10) {
    throw Error(ErrorKind::kInvariant, "sawtooth expectation " + std::to_string(r.zero_bias_expectation) +
                                           " differs from x1/(2(N-1)) = " + std::to_string(r.value));
  }
  return r;
}

double KsDistanceToNormal(const Configuration& cfg) {
  const std::vector<double> z = Ascending(cfg);
  const double n = static_cast<double>(z.size());
  double sup = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double phi = NormalCdf(z[k]);
    sup = std::max({sup, std::abs(phi - static_cast<double>(k) / n), std::abs(phi - static_cast<double>(k + 1) / n)});
  }
  return sup;
}

double SupDensityGap(const Configuration& cfg) {
  const ZeroBiasDensity density = BuildDensity(cfg);
  // Outside the support the density is zero; phi is largest at the edges.
  double sup = std::max(NormalPdf(density.breakpoints.front()), NormalPdf(density.breakpoints.back()));
  for (std::size_t i = 0; i < density.intervals(); ++i) {
    const double h = density.heights[i];
    const double a = density.lower(i), b = density.upper(i);
    sup = std::max({sup, std::abs(h - NormalPdf(a)), std::abs(h - NormalPdf(b))});
    if (a <= 0.0 && 0.0 <= b) sup = std::max(sup, std::abs(h - NormalPdf(0.0)));
  }
  return sup;
}

bool DistanceReport::BoundsHold() const {
  return sawtooth_lower <= dw_empirical_to_zero_bias && dw_to_normal <= stein_upper && dw_to_normal <= 2.0 * mesh &&
         dw_to_normal <= mesh_upper;
}

DistanceReport ComputeDistances(const Configuration& cfg) {
  DistanceReport r;
  r.n = cfg.n;
  r.x1 = cfg.x1();
  r.dw_to_normal = WassersteinToNormal(cfg);
  r.dw_empirical_to_zero_bias = WassersteinEmpiricalToZeroBias(cfg);
  r.stein_upper = SteinUpperBound(cfg);
  r.sawtooth_lower = SawtoothLowerBound(cfg).value;
  for (std::size_t i = 0; i + 1 < cfg.values.size(); ++i) {
    r.mesh = std::max(r.mesh, cfg.values[i] - cfg.values[i + 1]);
  }
  r.mesh_upper = 4.0 / std::sqrt(std::log(static_cast<double>(cfg.n)));
  r.ks_to_normal = KsDistanceToNormal(cfg);
  r.sup_density_gap = SupDensityGap(cfg);
  return r;
}

}  // namespace miw
