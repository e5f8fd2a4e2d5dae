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

#include "miw/ou_chain.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "miw/error.hpp"

namespace miw {

std::optional<std::size_t> ChainSource::n() const {
  if (is_normal()) return std::nullopt;
  return atoms_.size();
}

double ChainSource::draw_variance() const {
  if (is_normal()) return 1.0;
  double mean = 0, second = 0;
  for (double x : atoms_) {
    mean += x;
    second += x * x;
  }
  const double n = static_cast<double>(atoms_.size());
  mean /= n;
  return second / n - mean * mean;
}

double ChainSource::Draw(Rng& rng, std::normal_distribution<double>& normal) const {
  if (is_normal()) return normal(rng);
  std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
  return atoms_[pick(rng)];
}

Rng MakeRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ReplacementChain::ReplacementChain(ChainSource source, std::size_t m, Rng rng)
    : source_(std::move(source)), rng_(std::move(rng)) {
  if (m == 0) throw Error(ErrorKind::kInvalidInput, "sample size m must be >= 1");
  sample_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) sample_.push_back(source_.Draw(rng_, normal_));
  sum_ = Resum();
}

void ReplacementChain::Step() {
  std::uniform_int_distribution<std::size_t> pick(0, sample_.size() - 1);
  const std::size_t i = pick(rng_);
  const double fresh = source_.Draw(rng_, normal_);
  sum_ += fresh - sample_[i];
  sample_[i] = fresh;
  if (++step_index_ % kResumInterval == 0) sum_ = Resum();
}

double ReplacementChain::Resum() const { return std::accumulate(sample_.begin(), sample_.end(), 0.0); }

std::size_t StepsForHorizon(std::size_t m, double horizon) {
  if (!(horizon > 0)) throw Error(ErrorKind::kInvalidInput, "horizon T must be positive");
  // Guard against m*T landing a hair below an integer.
  return static_cast<std::size_t>(std::floor(static_cast<double>(m) * horizon * (1.0 + 1e-12)));
}

RescaledPath RunRescaled(ReplacementChain& chain, double horizon) {
  const std::size_t steps = StepsForHorizon(chain.m(), horizon);
  const double scale = 1.0 / std::sqrt(static_cast<double>(chain.m()));
  RescaledPath path;
  path.m = chain.m();
  path.horizon = horizon;
  path.sums.reserve(steps + 1);
  path.rescaled.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) chain.Step();
    path.sums.push_back(chain.sum());
    path.rescaled.push_back(chain.sum() * scale);
  }
  return path;
}

std::vector<double> Ar1Reference(std::size_t m, std::size_t steps, Rng& rng) {
  if (m == 0) throw Error(ErrorKind::kInvalidInput, "sample size m must be >= 1");
  const double lambda = 1.0 / static_cast<double>(m);
  std::normal_distribution<double> normal;
  const double innovation_sd = std::sqrt(2.0 - lambda);
  std::vector<double> y;
  y.reserve(steps + 1);
  y.push_back(std::sqrt(static_cast<double>(m)) * normal(rng));
  for (std::size_t k = 1; k <= steps; ++k) y.push_back((1.0 - lambda) * y.back() + innovation_sd * normal(rng));
  return y;
}

std::vector<double> Ar1Reference(std::size_t m, std::size_t steps, std::uint64_t seed) {
  Rng rng = MakeRng(seed, 0);
  return Ar1Reference(m, steps, rng);
}

std::vector<RescaledPath> SimulatePaths(const ChainSource& source, std::size_t m, double horizon, std::size_t reps,
                                        std::uint64_t seed) {
  std::vector<RescaledPath> paths;
  paths.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    ReplacementChain chain(source, m, MakeRng(seed, r));
    paths.push_back(RunRescaled(chain, horizon));
  }
  return paths;
}

namespace {

Estimate MeanOf(const std::vector<double>& per_rep) {
  const double n = static_cast<double>(per_rep.size());
  const double mean = std::accumulate(per_rep.begin(), per_rep.end(), 0.0) / n;
  double ss = 0;
  for (double v : per_rep) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1) / n)};
}

// Ratio of totals with the delta-method standard error.
Estimate RatioOf(const std::vector<double>& num, const std::vector<double>& den) {
  const double n = static_cast<double>(num.size());
  const double total_num = std::accumulate(num.begin(), num.end(), 0.0);
  const double total_den = std::accumulate(den.begin(), den.end(), 0.0);
  const double ratio = total_num / total_den;
  double ss = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double e = num[i] - ratio * den[i];
    ss += e * e;
  }
  const double mean_den = total_den / n;
  return {ratio, std::sqrt(ss / (n - 1) / n) / mean_den};
}

Estimate WindowVariance(std::span<const RescaledPath> paths, double mean, std::size_t first, std::size_t last) {
  std::vector<double> per_rep;
  per_rep.reserve(paths.size());
  for (const auto& p : paths) {
    double ss = 0;
    for (std::size_t k = first; k <= last; ++k) ss += (p.rescaled[k] - mean) * (p.rescaled[k] - mean);
    per_rep.push_back(ss / static_cast<double>(last - first + 1));
  }
  return MeanOf(per_rep);
}

Estimate LagCorrelationAt(std::span<const RescaledPath> paths, double mean, std::size_t lag) {
  std::vector<double> num, den;
  num.reserve(paths.size());
  den.reserve(paths.size());
  for (const auto& p : paths) {
    double cross = 0, head = 0, tail = 0;
    for (std::size_t k = 0; k + lag < p.rescaled.size(); ++k) {
      const double a = p.rescaled[k] - mean, b = p.rescaled[k + lag] - mean;
      cross += a * b;
      head += a * a;
      tail += b * b;
    }
    num.push_back(cross);
    den.push_back((head + tail) / 2.0);
  }
  return RatioOf(num, den);
}

}  // namespace

PathStatistics OuStatistics(std::span<const RescaledPath> paths, std::span<const double> lag_times) {
  if (paths.size() < 2) throw Error(ErrorKind::kInvalidInput, "need at least two paths");
  const RescaledPath& first = paths.front();
  if (first.rescaled.size() < 2) throw Error(ErrorKind::kInvalidInput, "paths need at least one step");
  for (const auto& p : paths) {
    if (p.m != first.m || p.rescaled.size() != first.rescaled.size()) {
      throw Error(ErrorKind::kInvalidInput, "paths are on different grids");
    }
  }

  PathStatistics s;
  s.m = first.m;
  s.steps = first.rescaled.size() - 1;
  s.reps = paths.size();

  double total = 0;
  for (const auto& p : paths) total += std::accumulate(p.rescaled.begin(), p.rescaled.end(), 0.0);
  const double mean = total / static_cast<double>(s.reps * first.rescaled.size());

  s.stationary_variance = WindowVariance(paths, mean, 0, s.steps);
  s.early_variance = WindowVariance(paths, mean, 0, s.steps / 2);
  s.late_variance = WindowVariance(paths, mean, s.steps / 2, s.steps);

  const double m = static_cast<double>(s.m);
  for (double t : lag_times) {
    if (!(t >= 0)) throw Error(ErrorKind::kInvalidInput, "lag times must be non-negative");
    LagCorrelation lc;
    lc.lag_time = t;
    lc.lag_steps = static_cast<std::size_t>(std::llround(t * m));
    if (lc.lag_steps > s.steps) {
      throw Error(ErrorKind::kInvalidInput, "lag " + std::to_string(t) + " exceeds the path horizon");
    }
    lc.estimate = LagCorrelationAt(paths, mean, lc.lag_steps);
    lc.reference = std::exp(-t);
    s.autocorrelation.push_back(lc);
  }
  s.lag1_sum_corr = LagCorrelationAt(paths, mean, 1);
  s.lag1_reference = 1.0 - 1.0 / m;
  return s;
}

std::vector<double> MarginalAt(std::span<const RescaledPath> paths, std::size_t k) {
  std::vector<double> ys;
  ys.reserve(paths.size());
  for (const auto& p : paths) {
    if (k >= p.sums.size()) throw Error(ErrorKind::kInvalidInput, "step index beyond the path");
    ys.push_back(p.sums[k]);
  }
  return ys;
}

std::vector<double> Ar1MarginalAt(const ChainSource& source, std::size_t m, std::size_t k, std::size_t reps,
                                  std::uint64_t seed) {
  const double scale = std::sqrt(source.draw_variance());
  std::vector<double> out;
  out.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    Rng rng = MakeRng(seed, kTwinStreamOffset + r);
    out.push_back(Ar1Reference(m, k, rng).back() * scale);
  }
  return out;
}

TestResult MarginalKsAgainstAr1(std::span<const RescaledPath> paths, const ChainSource& source, std::size_t k,
                                std::uint64_t seed) {
  if (paths.empty()) throw Error(ErrorKind::kInvalidInput, "no paths");
  return TwoSampleKs(MarginalAt(paths, k), Ar1MarginalAt(source, paths.front().m, k, paths.size(), seed));
}

bool WithinSlowGrowthRegime(std::size_t m, std::size_t n) {
  return static_cast<double>(m) <= std::cbrt(std::log(static_cast<double>(n)));
}

}  // namespace miw
