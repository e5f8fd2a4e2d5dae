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

#ifndef MIW_STATS_HPP_
#define MIW_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace miw {

struct TestResult {
  double statistic = 0;
  double p_value = 1;
};

// P(K > lambda) for the Kolmogorov distribution.
double KolmogorovSurvival(double lambda);

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
// (Stephens' small-sample correction).
TestResult TwoSampleKs(std::vector<double> a, std::vector<double> b);

// Pearson chi-square goodness of fit of `observed` counts to `probabilities`.
TestResult ChiSquareGoodnessOfFit(std::span<const std::size_t> observed, std::span<const double> probabilities);

struct MeanAndError {
  double mean = 0;
  double standard_error = 0;
};

MeanAndError SampleMean(std::span<const double> xs);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> xs, std::span<const double> ys);

}  // namespace miw

#endif  // MIW_STATS_HPP_
