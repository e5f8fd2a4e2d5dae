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

#ifndef MIW_ZERO_BIAS_HPP_
#define MIW_ZERO_BIAS_HPP_

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "miw/solver.hpp"

namespace miw {

using Rng = std::mt19937_64;

// Piecewise-constant density with mass 1/(N-1) spread uniformly over each gap
// of the configuration. Interval i (0-based) is [x_{i+2}, x_{i+1}) in the
// 1-based decreasing indexing of the configuration, i.e. it sits between
// breakpoints[i + 1] and breakpoints[i].
struct ZeroBiasDensity {
  std::vector<double> breakpoints;  // x_1 > ... > x_N
  std::vector<double> heights;      // 1 / ((N - 1)(x_n - x_{n+1}))
  std::vector<double> masses;       // heights[i] * gap

  std::size_t intervals() const { return heights.size(); }
  double lower(std::size_t i) const { return breakpoints[i + 1]; }
  double upper(std::size_t i) const { return breakpoints[i]; }
  double gap(std::size_t i) const { return breakpoints[i] - breakpoints[i + 1]; }

  double TotalMass() const;
  // Exact integral of x^k against the density.
  double Moment(int k) const;
};

// Throws Error(kDegenerateConfiguration) unless the values strictly decrease.
ZeroBiasDensity BuildDensity(const Configuration& cfg);

// Height of the interval with x_{n+1} <= x < x_n; zero outside [x_N, x_1).
double DensityAt(const ZeroBiasDensity& density, double x);

double SampleZeroBias(const ZeroBiasDensity& density, Rng& rng);

// Mass that interval i hands to its lower and upper endpoint atoms.
template <class T>
struct IntervalSplit {
  T lower;
  T upper;
};

template <class T>
struct CouplingTableT {
  std::vector<IntervalSplit<T>> splits;  // same interval order as ZeroBiasDensity
  std::vector<T> atom_masses;            // per configuration point, decreasing order

  // Interval j to the right of zero (j = 1 is the innermost; for even N it
  // straddles zero). Returns {L_j, R_j}: mass to its left and right endpoint.
  IntervalSplit<T> positive_side(std::size_t j) const {
    const std::size_t n = atom_masses.size();
    const std::size_t innermost = n % 2 == 1 ? (n - 1) / 2 - 1 : n / 2 - 1;
    return splits[innermost + 1 - j];
  }
};

// The unique split in which every atom collects exactly 1/N: filling atoms
// from the bottom, interval k (counted upward from x_N, 0-based) gives
// (k+1)/N - k/(N-1) to its lower endpoint and (k+1)/(N(N-1)) to its upper one.
// For odd N this reproduces L_j = (2j-1)/(2N) - (j-1)/(N-1) on the positive
// side; for even N the straddling interval splits evenly about zero.
template <class T>
CouplingTableT<T> CouplingMassesFor(std::size_t n) {
  CouplingTableT<T> table;
  const T big_n = T(static_cast<long long>(n));
  const T one = T(1);
  table.splits.resize(n - 1, IntervalSplit<T>{T(0), T(0)});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const T kk = T(static_cast<long long>(k));
    IntervalSplit<T> s{(kk + one) / big_n - kk / (big_n - one), (kk + one) / (big_n * (big_n - one))};
    table.splits[n - 2 - k] = s;
  }
  table.atom_masses.assign(n, T(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    table.atom_masses[i] = table.atom_masses[i] + table.splits[i].upper;
    table.atom_masses[i + 1] = table.atom_masses[i + 1] + table.splits[i].lower;
  }
  return table;
}

using CouplingTable = CouplingTableT<double>;

inline CouplingTable CouplingMasses(const Configuration& cfg) { return CouplingMassesFor<double>(cfg.n); }

struct CoupledPair {
  double atom;       // X_N ~ P_N
  double zero_bias;  // X~_N ~ y_N
  std::size_t interval;
};

// Draws (X_N, X~_N) with |X_N - X~_N| no larger than the gap containing X~_N.
class ZeroBiasCoupling {
 public:
  explicit ZeroBiasCoupling(const Configuration& cfg);

  CoupledPair Sample(Rng& rng) const;

  const ZeroBiasDensity& density() const { return density_; }
  const CouplingTable& table() const { return table_; }

  // E|X_N - X~_N|, integrated exactly over the split intervals.
  double ExpectedDistance() const;

 private:
  ZeroBiasDensity density_;
  CouplingTable table_;
  std::vector<double> lower_fraction_;  // share of each interval sent to its lower atom
};

inline CoupledPair CoupledSample(const ZeroBiasCoupling& coupling, Rng& rng) { return coupling.Sample(rng); }

// sigma^2 E f'(X~_N) - E X_N f(X_N) with sigma^2 = 1 - 1/N, both sides as
// exact finite sums (E f'(X~) over an interval is a difference of f values).
double ZeroBiasIdentityDefect(const Configuration& cfg, const std::function<double(double)>& f);

}  // namespace miw

#endif  // MIW_ZERO_BIAS_HPP_
