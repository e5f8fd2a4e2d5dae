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


#include <cmath>
#include <vector>

#include "doctest.h"
#include "miw/metrics.hpp"
#include "miw/solver.hpp"
#include "miw/stats.hpp"
#include "miw/zero_bias.hpp"

namespace {

const std::vector<std::size_t> kTrendSizes = {11, 22, 50, 100, 200, 500};

}  // namespace

TEST_CASE("distances for N=3 against high-precision integration") {
  const auto cfg = miw::SolveGroundState(3);
  CHECK(miw::WassersteinToNormal(cfg) == doctest::Approx(0.34341401111900632689).epsilon(1e-12));
  CHECK(miw::KsDistanceToNormal(cfg) == doctest::Approx(0.17467807940187628192).epsilon(1e-12));
  CHECK(miw::WassersteinEmpiricalToZeroBias(cfg) == doctest::Approx(5.0 / 18.0).epsilon(1e-12));
  CHECK(miw::SupDensityGap(cfg) == doctest::Approx(0.2580292754808566502).epsilon(1e-12));
}

TEST_CASE("distances for N=22 against high-precision integration") {
  const auto cfg = miw::SolveGroundState(22);
  CHECK(miw::WassersteinToNormal(cfg) == doctest::Approx(0.063107805151875375312).epsilon(1e-12));
  CHECK(miw::KsDistanceToNormal(cfg) == doctest::Approx(0.024742200890096885208).epsilon(1e-12));
}

TEST_CASE("exact Wasserstein agrees with quadrature") {
  for (std::size_t n : {3u, 4u, 22u, 101u}) {
    CAPTURE(n);
    const auto cfg = miw::SolveGroundState(n);
    const double coarse = miw::WassersteinToNormalQuadrature(cfg, 0.02);
    const double fine = miw::WassersteinToNormalQuadrature(cfg, 0.01);
    const double exact = miw::WassersteinToNormal(cfg);
    CHECK(std::abs(coarse - fine) <= 1e-6 * exact);
    CHECK(std::abs(fine - exact) <= 1e-6 * exact);
  }
}

TEST_CASE("sawtooth function") {
  const std::vector<double> v = {2.0, 0.5, -0.5, -2.0};
  for (double x : v) CHECK(miw::Sawtooth(v, x) == 0.0);
  CHECK(miw::Sawtooth(v, 1.25) == doctest::Approx(0.75));
  CHECK(miw::Sawtooth(v, 0.0) == doctest::Approx(0.5));
  CHECK(miw::Sawtooth(v, 3.0) == 0.0);
  CHECK(miw::Sawtooth(v, -3.0) == 0.0);
  // 1-Lipschitz on a fine grid.
  double prev = miw::Sawtooth(v, -2.5);
  for (int i = 1; i <= 5000; ++i) {
    const double x = -2.5 + i * 1e-3;
    const double y = miw::Sawtooth(v, x);
    REQUIRE(std::abs(y - prev) <= 1e-3 + 1e-12);
    prev = y;
  }
}

TEST_CASE("sawtooth lower bound matches its closed form") {
  for (std::size_t n : {3u, 11u, 22u, 101u, 500u}) {
    CAPTURE(n);
    const auto cfg = miw::SolveGroundState(n);
    const auto s = miw::SawtoothLowerBound(cfg);
    CHECK(s.value == doctest::Approx(cfg.x1() / (2.0 * (double(n) - 1))).epsilon(1e-14));
    CHECK(std::abs(s.zero_bias_expectation - s.value) <= 1e-10);
    CHECK(s.empirical_expectation == 0.0);
    CHECK(s.max_slope <= 1.0 + 1e-12);
    CHECK(miw::WassersteinEmpiricalToZeroBias(cfg) >= s.value);
  }
}

TEST_CASE("bound chain over a sweep") {
  for (std::size_t n : {3u, 4u, 11u, 22u, 50u, 100u, 200u, 500u, 1000u}) {
    CAPTURE(n);
    const auto r = miw::ComputeDistances(miw::SolveGroundState(n));
    CHECK(r.BoundsHold());
    CHECK(r.dw_to_normal <= r.stein_upper);
    CHECK(r.dw_to_normal <= 2 * r.mesh);
    CHECK(r.dw_empirical_to_zero_bias >= r.sawtooth_lower);
    CHECK(r.mesh <= r.mesh_upper);
  }
}

TEST_CASE("distances shrink with N") {
  std::vector<double> ns, dw, ks;
  for (std::size_t n : kTrendSizes) {
    const auto r = miw::ComputeDistances(miw::SolveGroundState(n));
    ns.push_back(double(n));
    dw.push_back(r.dw_to_normal);
    ks.push_back(r.ks_to_normal);
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    CHECK(dw[i] < dw[i - 1]);
    CHECK(ks[i] < ks[i - 1]);
  }
  const double slope = miw::LogLogSlope(ns, dw);
  CHECK(slope >= -1.2);
  CHECK(slope <= -0.8);
}

TEST_CASE("ratio of distance to the Stein bound stays in a band") {
  for (std::size_t n : kTrendSizes) {
    const auto r = miw::ComputeDistances(miw::SolveGroundState(n));
    const double ratio = r.dw_to_normal / r.stein_upper;
    CAPTURE(n);
    CHECK(ratio > 0.1);
    CHECK(ratio < 0.5);
  }
}

TEST_CASE("twice the sampled coupling distance bounds the Wasserstein distance") {
  for (std::size_t n : {11u, 22u, 101u}) {
    CAPTURE(n);
    const auto cfg = miw::SolveGroundState(n);
    const miw::ZeroBiasCoupling coupling(cfg);
    miw::Rng rng(n);
    std::vector<double> dist;
    for (int i = 0; i < 50000; ++i) {
      const auto p = coupling.Sample(rng);
      dist.push_back(std::abs(p.atom - p.zero_bias));
    }
    const auto mean = miw::SampleMean(dist);
    CHECK(2 * mean.mean >= miw::WassersteinToNormal(cfg) - 2 * 4 * mean.standard_error);
  }
}
