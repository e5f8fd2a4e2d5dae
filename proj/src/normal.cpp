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

#include "miw/normal.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <string>

#include "miw/error.hpp"

namespace miw {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kBracketNotFound: return "bracket-not-found";
    case ErrorKind::kBisectionNotConverged: return "bisection-not-converged";
    case ErrorKind::kDegenerateConfiguration: return "degenerate-configuration";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kInvariant: return "invariant";
    case ErrorKind::kMissingDependency: return "missing-dependency";
  }
  return "unknown";
}

double NormalPdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double NormalSf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double NormalCdfIntegral(double x) {
  // For very negative x both terms are tiny and of opposite sign; use the
  // Mills-ratio form phi(x) - |x| * Phi(x) evaluated via the tail.
  if (x < 0) return NormalPdf(x) - (-x) * NormalSf(-x);
  return x * NormalCdf(x) + NormalPdf(x);
}

double NormalUpperQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorKind::kInvalidInput, "quantile level must lie in (0, 1), got " + std::to_string(p));
  }
  return std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

}  // namespace miw
