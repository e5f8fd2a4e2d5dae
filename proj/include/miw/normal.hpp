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

#ifndef MIW_NORMAL_HPP_
#define MIW_NORMAL_HPP_

namespace miw {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

// Standard normal density.
double NormalPdf(double x);
// Standard normal CDF, computed through erfc so both tails keep full
// relative accuracy.
double NormalCdf(double x);
// 1 - NormalCdf(x) without cancellation.
double NormalSf(double x);

// Antiderivative of NormalCdf: x * Phi(x) + phi(x). Its limit at -inf is 0.
double NormalCdfIntegral(double x);

// z such that 1 - Phi(z) = p. Throws Error(kInvalidInput) unless 0 < p < 1.
double NormalUpperQuantile(double p);

}  // namespace miw

#endif  // MIW_NORMAL_HPP_
