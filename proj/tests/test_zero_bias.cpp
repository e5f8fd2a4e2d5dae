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


#include <algorithm>
#include <boost/rational.hpp>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "miw/error.hpp"
#include "miw/solver.hpp"
#include "miw/stats.hpp"
#include "miw/zero_bias.hpp"

namespace {

using Rational = boost::rational<long long>;

// Fills atoms from the bottom with 1/N each, taking interval mass 1/(N-1) in
// order; returns the share of each interval (bottom first) sent downwards.
std::vector<Rational> GreedyLowerShares(long long n) {
  std::vector<Rational> lower;
  Rational need(1, n);
  for (long long k = 0; k + 1 < n; ++k) {
    Rational mass(1, n - 1);
    const Rational give = std::min(need, mass);
    lower.push_back(give);
    mass -= give;
    need = Rational(1, n) - mass;
  }
  return lower;
}

double MeanOf(const std::vector<double>& v, double (*f)(double)) {
  double s = 0;
  for (double x : v) s += f(x);
  return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("density of N=3") {
  const auto d = miw::BuildDensity(miw::SolveGroundState(3));
  REQUIRE(d.intervals() == 2);
  CHECK(d.heights[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.heights[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.TotalMass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(miw::DensityAt(d, -1.0) == doctest::Approx(0.5));
  CHECK(miw::DensityAt(d, 0.3) == doctest::Approx(0.5));
  CHECK(miw::DensityAt(d, d.breakpoints.front()) == 0.0);
  CHECK(miw::DensityAt(d, -1.5) == 0.0);
}

TEST_CASE("density mass, moments and shape") {
  for (std::size_t n : {4u, 11u, 22u, 101u, 1000u}) {
    CAPTURE(n);
    const auto cfg = miw::SolveGroundState(n);
    const auto d = miw::BuildDensity(cfg);
    CHECK(std::abs(d.TotalMass() - 1.0) <= 1e-12);
    CHECK(d.Moment(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(d.Moment(1)) <= 1e-12);

    // sigma^2 E[X~^2] = E[X^4] / 3.
    const double sigma2 = 1.0 - 1.0 / double(n);
    const double fourth = MeanOf(cfg.values, [](double x) { return x * x * x * x; });
    CHECK(sigma2 * d.Moment(2) == doctest::Approx(fourth / 3).epsilon(1e-10));

    // Unimodal: heights rise towards the middle interval and fall after it.
    const auto peak = std::max_element(d.heights.begin(), d.heights.end()) - d.heights.begin();
    for (long i = 0; i < peak; ++i) CHECK(d.heights[i] <= d.heights[i + 1]);
    for (std::size_t i = peak; i + 1 < d.intervals(); ++i) CHECK(d.heights[i] >= d.heights[i + 1]);
  }
}

TEST_CASE("build_density rejects repeated points") {
  try {
    miw::BuildDensity(miw::Configuration::FromValues({1.0, 0.0, 0.0, -1.0}));
    FAIL("expected an error");
  } catch (const miw::Error& e) {
    CHECK(e.kind() == miw::ErrorKind::kDegenerateConfiguration);
  }
}

TEST_CASE("zero-bias identity holds as an exact finite sum") {
  for (std::size_t n : {3u, 8u, 22u, 101u, 500u}) {
    CAPTURE(n);
    const auto cfg = miw::SolveGroundState(n);
    CHECK(std::abs(miw::ZeroBiasIdentityDefect(cfg, [](double x) { return x; })) <= 1e-10);
    CHECK(std::abs(miw::ZeroBiasIdentityDefect(cfg, [](double x) { return x * x; })) <= 1e-10);
    CHECK(std::abs(miw::ZeroBiasIdentityDefect(cfg, [](double x) { return x * x * x; })) <= 1e-10);
    CHECK(std::abs(miw::ZeroBiasIdentityDefect(cfg, [](double x) { return std::sin(x); })) <= 1e-10);
  }
}

TEST_CASE("coupling masses in exact arithmetic") {
  for (long long n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const auto table = miw::CouplingMassesFor<Rational>(static_cast<std::size_t>(n));
    for (const auto& m : table.atom_masses) CHECK(m == Rational(1, n));
    for (const auto& s : table.splits) {
      CHECK(s.lower + s.upper == Rational(1, n - 1));
      CHECK(s.lower >= 0);
      CHECK(s.upper >= 0);
    }
    // Against the greedy fill, bottom interval first.
    const auto greedy = GreedyLowerShares(n);
    for (long long k = 0; k + 1 < n; ++k) CHECK(table.splits[n - 2 - k].lower == greedy[k]);

    if (n % 2 == 1) {
      for (long long j = 1; j <= (n - 1) / 2; ++j) {
        CHECK(table.positive_side(j).lower == Rational(2 * j - 1, 2 * n) - Rational(j - 1, n - 1));
      }
    } else {
      const auto mid = table.positive_side(1);
      CHECK(mid.lower == mid.upper);
    }
  }
}

TEST_CASE("coupling masses in floating point") {
  for (std::size_t n : {11u, 22u, 101u, 1000u, 10000u}) {
    const auto table = miw::CouplingMassesFor<double>(n);
    for (double m : table.atom_masses) CHECK(std::abs(m - 1.0 / double(n)) <= 1e-12);
  }
}

TEST_CASE("coupled draws stay within one gap and have the right marginals") {
  const auto cfg = miw::SolveGroundState(22);
  const miw::ZeroBiasCoupling coupling(cfg);
  const auto& d = coupling.density();
  double mesh = 0;
  for (std::size_t i = 0; i < d.intervals(); ++i) mesh = std::max(mesh, d.gap(i));

  miw::Rng rng(12345);
  const std::size_t draws = 200000;
  std::vector<std::size_t> atom_counts(cfg.n, 0), interval_counts(d.intervals(), 0);
  double worst = 0, total = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto p = coupling.Sample(rng);
    const double dist = std::abs(p.atom - p.zero_bias);
    worst = std::max(worst, dist);
    total += dist;
    REQUIRE(dist <= d.gap(p.interval));
    REQUIRE(p.zero_bias >= d.lower(p.interval));
    REQUIRE(p.zero_bias <= d.upper(p.interval));
    const auto at = std::find(cfg.values.begin(), cfg.values.end(), p.atom);
    REQUIRE(at != cfg.values.end());
    ++atom_counts[at - cfg.values.begin()];
    ++interval_counts[p.interval];
  }
  CHECK(worst <= mesh);

  const std::vector<double> atom_p(cfg.n, 1.0 / double(cfg.n));
  CHECK(miw::ChiSquareGoodnessOfFit(atom_counts, atom_p).p_value > 0.01);
  CHECK(miw::ChiSquareGoodnessOfFit(interval_counts, d.masses).p_value > 0.01);

  // Exact E|X - X~| against an independent high-precision integration.
  CHECK(coupling.ExpectedDistance() == doctest::Approx(0.068896244951299123342).epsilon(1e-12));
  CHECK(total / draws == doctest::Approx(coupling.ExpectedDistance()).epsilon(0.02));
}

TEST_CASE("coupled sampling is deterministic for a seed") {
  const miw::ZeroBiasCoupling coupling(miw::SolveGroundState(11));
  miw::Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto p = miw::CoupledSample(coupling, a);
    const auto q = miw::CoupledSample(coupling, b);
    REQUIRE(p.atom == q.atom);
    REQUIRE(p.zero_bias == q.zero_bias);
  }
}

TEST_CASE("zero-bias samples follow the density") {
  const auto d = miw::BuildDensity(miw::SolveGroundState(22));
  miw::Rng rng(99);
  std::vector<std::size_t> counts(d.intervals(), 0);
  for (int i = 0; i < 100000; ++i) {
    const double x = miw::SampleZeroBias(d, rng);
    // Intervals run from the top down.
    std::size_t k = 0;
    while (k + 1 < d.intervals() && x < d.lower(k)) ++k;
    ++counts[k];
  }
  CHECK(miw::ChiSquareGoodnessOfFit(counts, d.masses).p_value > 0.01);
}
