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

#ifndef MIW_METRICS_HPP_
#define MIW_METRICS_HPP_

#include <cstddef>
#include <span>

#include "miw/solver.hpp"

namespace miw {

// d_W(P_N, N(0,1)) = integral of |F_N - Phi|, integrated in closed form
// between atoms (splitting at the crossing Phi(x) = F_N) plus analytic tails.
double WassersteinToNormal(const Configuration& cfg);

// Same integral by composite Simpson on every smooth piece, with steps no
// longer than `max_step` and tails truncated 12 units beyond the support.
// Used as a self-check of the closed form.
double WassersteinToNormalQuadrature(const Configuration& cfg, double max_step);

// d_W between P_N and the zero-bias density: both CDFs are piecewise
// linear/step, so the integrand is piecewise linear and integrated exactly.
double WassersteinEmpiricalToZeroBias(const Configuration& cfg);

// 4 x_1 / (N - 1).
double SteinUpperBound(const Configuration& cfg);

// The 1-Lipschitz tent function: zero at every x_n and outside [x_N, x_1],
// (x_n - x_{n+1})/2 at each midpoint.
double Sawtooth(std::span<const double> values, double x);

struct SawtoothBound {
  double value = 0;                   // x_1 / (2(N - 1))
  double zero_bias_expectation = 0;   // E h(X~_N), integrated segment by segment
  double empirical_expectation = 0;   // E h(X_N)
  double max_slope = 0;               // largest |slope| over the segments of h
};

// Throws Error(kInvariant) if the direct expectation differs from the closed
// form by more than 1e-10.
SawtoothBound SawtoothLowerBound(const Configuration& cfg);

// sup |F_N - Phi|, from both one-sided limits at every atom.
double KsDistanceToNormal(const Configuration& cfg);

// sup |y_N - phi|. On each interval phi is monotone apart from its peak at 0,
// so endpoints (both one-sided values) and 0 attain the supremum.
double SupDensityGap(const Configuration& cfg);

struct DistanceReport {
  std::size_t n = 0;
  double x1 = 0;
  double dw_to_normal = 0;
  double dw_empirical_to_zero_bias = 0;
  double stein_upper = 0;      // 4 x_1 / (N - 1)
  double sawtooth_lower = 0;   // x_1 / (2(N - 1))
  double mesh = 0;             // delta_N
  double mesh_upper = 0;       // 4 / sqrt(log N)
  double ks_to_normal = 0;
  double sup_density_gap = 0;

  bool BoundsHold() const;
};

DistanceReport ComputeDistances(const Configuration& cfg);

}  // namespace miw

#endif  // MIW_METRICS_HPP_
