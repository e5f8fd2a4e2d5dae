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

#ifndef MIW_SOLVER_HPP_
#define MIW_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "miw/real.hpp"

namespace miw {

// Forward orbit of x_{n+1} = x_n - 1/S_n, S_n = x_1 + ... + x_n.
struct Trajectory {
  std::vector<Real> values;
  std::vector<Real> cumsums;
  // 1-based index k at which S_k <= 0 stopped the iteration, if it did.
  std::optional<std::size_t> cumsum_nonpositive_at;

  std::size_t n_reached() const { return values.size(); }
  bool complete() const { return !cumsum_nonpositive_at.has_value(); }
};

struct SolverOptions {
  // 0 selects DefaultPrecisionDigits(N).
  int precision_digits = 0;
  double residual_tolerance = 1e-15;
  // Multiples of the 1/(2N) upper normal quantile used as the initial lower
  // and upper brackets.
  std::pair<double, double> bracket_seed_scale{1.0, 2.0};
  int max_bisection_steps = 4000;
  int max_bracket_expansions = 200;
};

int DefaultPrecisionDigits(std::size_t n);

// A solved (or hand-built) decreasing configuration. `values` is the
// double-rounded view every analysis routine works on; `exact_values` keeps
// the full working precision for serialization.
struct Configuration {
  std::size_t n = 0;
  int precision_digits = 0;
  std::vector<Real> exact_values;
  std::vector<Real> exact_cumsums;
  std::vector<double> values;
  Real residual;
  int solver_iterations = 0;

  double x1() const { return values.front(); }

  // Wraps plain values (tests, perturbation studies, parsed files).
  static Configuration FromValues(std::vector<double> values, int precision_digits = 17);
  static Configuration FromExact(std::vector<Real> values, int precision_digits);
};

// Throws Error(kInvalidInput) for non-finite or non-positive x1 or n_max == 0.
Trajectory IterateRecursion(const Real& x1, std::size_t n_max);

// Odd N: x_m with m = (N+1)/2. Even N: x_m + x_{m+1} with m = N/2. Returns
// -inf when some S_k <= 0 stops the orbit before the needed index.
Real ShootingResidual(const Real& x1, std::size_t n);

// Largest root of the shooting residual and the orbit it generates.
Configuration SolveGroundState(std::size_t n, const SolverOptions& opts = {});

// a_n: the largest x1 with x_n(x1) = 0.
Real FindLargestRootXn(std::size_t n, const SolverOptions& opts = {});
// b_n: the largest x1 with S_n(x1) = 0.
Real FindLargestRootSn(std::size_t n, const SolverOptions& opts = {});

// Index m of the median condition: (N+1)/2 for odd N, N/2 for even N.
std::size_t MedianIndex(std::size_t n);

}  // namespace miw

#endif  // MIW_SOLVER_HPP_
