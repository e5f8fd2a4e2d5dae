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

#ifndef MIW_OU_CHAIN_HPP_
#define MIW_OU_CHAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "miw/solver.hpp"
#include "miw/stats.hpp"
#include "miw/zero_bias.hpp"

namespace miw {

// Where fresh sample members come from: the standard normal law, or draws
// with replacement from a configuration (atoms of mass 1/N each).
class ChainSource {
 public:
  static ChainSource StandardNormal() { return ChainSource({}); }
  static ChainSource FromConfiguration(const Configuration& cfg) { return ChainSource(cfg.values); }

  bool is_normal() const { return atoms_.empty(); }
  // N for a configuration source, nullopt for the normal source.
  std::optional<std::size_t> n() const;
  // Variance of one draw: 1, or 1 - 1/N for a solved configuration.
  double draw_variance() const;

  double Draw(Rng& rng, std::normal_distribution<double>& normal) const;

 private:
  explicit ChainSource(std::vector<double> atoms) : atoms_(std::move(atoms)) {}
  std::vector<double> atoms_;
};

// Independent generator for replication `stream` of a run seeded with `seed`.
Rng MakeRng(std::uint64_t seed, std::uint64_t stream);

// Random single replacement over an m-sample. Y is kept incrementally and
// re-summed from the sample every kResumInterval steps.
class ReplacementChain {
 public:
  static constexpr std::uint64_t kResumInterval = 1'000'000;

  // Throws Error(kInvalidInput) if m == 0.
  ReplacementChain(ChainSource source, std::size_t m, Rng rng);
  ReplacementChain(ChainSource source, std::size_t m, std::uint64_t seed) : ReplacementChain(std::move(source), m, MakeRng(seed, 0)) {}

  void Step();

  std::size_t m() const { return sample_.size(); }
  double sum() const { return sum_; }
  std::uint64_t step_index() const { return step_index_; }
  const std::vector<double>& sample() const { return sample_; }
  const ChainSource& source() const { return source_; }
  double Resum() const;

 private:
  ChainSource source_;
  std::vector<double> sample_;
  double sum_ = 0;
  std::uint64_t step_index_ = 0;
  Rng rng_;
  std::normal_distribution<double> normal_;
};

// Y_k and X~_t = Y_[mt] / sqrt(m) on the grid t = k/m, k = 0..[mT].
struct RescaledPath {
  std::size_t m = 0;
  double horizon = 0;
  std::vector<double> sums;
  std::vector<double> rescaled;
};

std::size_t StepsForHorizon(std::size_t m, double horizon);

// Runs [mT] steps of `chain`, recording the starting state as well.
RescaledPath RunRescaled(ReplacementChain& chain, double horizon);

// Y_k = (1 - 1/m) Y_{k-1} + eps_k, eps_k ~ N(0, 2 - 1/m), Y_0 ~ N(0, m).
// Returns Y_0..Y_steps.
std::vector<double> Ar1Reference(std::size_t m, std::size_t steps, Rng& rng);
std::vector<double> Ar1Reference(std::size_t m, std::size_t steps, std::uint64_t seed);

// `reps` independent chains; replication r draws from MakeRng(seed, r).
std::vector<RescaledPath> SimulatePaths(const ChainSource& source, std::size_t m, double horizon, std::size_t reps,
                                        std::uint64_t seed);

struct Estimate {
  double value = 0;
  double standard_error = 0;
};

struct LagCorrelation {
  double lag_time = 0;
  std::size_t lag_steps = 0;
  Estimate estimate;
  double reference = 0;  // exp(-t)
};

struct PathStatistics {
  std::size_t m = 0;
  std::size_t steps = 0;
  std::size_t reps = 0;
  Estimate stationary_variance;   // of X~ over all reps and times
  Estimate early_variance;        // t in [0, T/2]
  Estimate late_variance;         // t in [T/2, T]
  std::vector<LagCorrelation> autocorrelation;
  Estimate lag1_sum_corr;
  double lag1_reference = 0;      // 1 - 1/m
};

// Pooled estimates over replications; standard errors treat replications as
// the independent units. Throws Error(kInvalidInput) for fewer than two paths
// or paths on different grids.
PathStatistics OuStatistics(std::span<const RescaledPath> paths, std::span<const double> lag_times);

// Y_k across replications.
std::vector<double> MarginalAt(std::span<const RescaledPath> paths, std::size_t k);

// Y_k from one AR(1) twin per replication, scaled to the source's draw
// variance. Twin r uses stream kTwinStreamOffset + r.
inline constexpr std::uint64_t kTwinStreamOffset = std::uint64_t{1} << 32;
std::vector<double> Ar1MarginalAt(const ChainSource& source, std::size_t m, std::size_t k, std::size_t reps,
                                  std::uint64_t seed);

// Two-sample KS of the chain marginal at step k against the AR(1) twins.
TestResult MarginalKsAgainstAr1(std::span<const RescaledPath> paths, const ChainSource& source, std::size_t k,
                                std::uint64_t seed);

// True when m <= (log N)^(1/3), the slow-growth regime in which the
// configuration-driven chain is known to approach the OU limit.
bool WithinSlowGrowthRegime(std::size_t m, std::size_t n);

}  // namespace miw

#endif  // MIW_OU_CHAIN_HPP_
