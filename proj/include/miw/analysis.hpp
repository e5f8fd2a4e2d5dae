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

#ifndef MIW_ANALYSIS_HPP_
#define MIW_ANALYSIS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "miw/solver.hpp"

namespace miw {

// Structural checks of a decreasing configuration. The sum and sum-of-squares
// checks are scaled by N (|sum| <= tolerance * N); the symmetry check is not.
struct PropertyReport {
  std::size_t n = 0;
  double tolerance = 0;
  double sum = 0;
  double sum_of_squares_minus = 0;  // sum x^2 - (N - 1)
  double max_symmetry_defect = 0;   // max |x_n + x_{N+1-n}|
  bool monotone = false;
  double mesh = 0;        // largest consecutive gap
  double mesh_bound = 0;  // 2 / sqrt(log N)
  double x1_lower_bound = 0;  // sqrt(log N) / 2
  bool x1_lower_bound_ok = false;

  bool zero_mean_ok() const;
  bool variance_ok() const;
  bool symmetry_ok() const;
  bool mesh_ok() const { return mesh <= mesh_bound; }
  bool passed() const;
  // Names of the failing properties, in a fixed order.
  std::vector<std::string> Failures() const;
};

PropertyReport VerifyProperties(const Configuration& cfg, double tolerance);

struct HamiltonianReport {
  double potential = 0;   // V = sum x_n^2
  double interworld = 0;  // U
  double total = 0;       // H = U + V
  double ground_state_energy = 0;  // 2 (N - 1)
  double defect = 0;               // |H - 2(N - 1)|
};

// Boundary gaps to x_0 = +inf and x_{N+1} = -inf contribute exactly zero.
// Throws Error(kDegenerateConfiguration) on repeated values and
// Error(kInvalidInput) if the values are not decreasing.
HamiltonianReport Hamiltonian(std::span<const double> values);
inline HamiltonianReport Hamiltonian(const Configuration& cfg) { return Hamiltonian(cfg.values); }

struct QuantileRow {
  std::size_t index = 0;  // 1-based n
  double value = 0;       // x_n
  double quantile = 0;    // upper (n - 1/2)/N normal quantile
  double deviation = 0;   // x_n - q_n
};

std::vector<QuantileRow> QuantileDeviation(const Configuration& cfg);

// Largest |deviation| over lo_frac*N <= n <= hi_frac*N.
double MaxIntermediateDeviation(const std::vector<QuantileRow>& rows, double lo_frac = 0.1, double hi_frac = 0.9);

}  // namespace miw

#endif  // MIW_ANALYSIS_HPP_
