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

#include "miw/solver.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "miw/error.hpp"
#include "miw/normal.hpp"

namespace miw {

namespace {

// Allocation-free walker over the orbit, used inside the bisection loops.
class Orbit {
 public:
  explicit Orbit(const Real& x1) {
    mpfr_inits2(x1.precision_bits(), x_, s_, inv_, static_cast<mpfr_ptr>(nullptr));
    mpfr_set(x_, x1.get(), MPFR_RNDN);
    mpfr_set(s_, x1.get(), MPFR_RNDN);
  }
  Orbit(const Orbit&) = delete;
  Orbit& operator=(const Orbit&) = delete;
  ~Orbit() { mpfr_clears(x_, s_, inv_, static_cast<mpfr_ptr>(nullptr)); }

  // 1-based index k of the current x_k.
  std::size_t index() const { return index_; }
  mpfr_srcptr x() const { return x_; }
  mpfr_srcptr s() const { return s_; }

  // Moves to x_{k+1}. Returns false (and stays put) if S_k <= 0.
  bool Advance() {
    if (mpfr_sgn(s_) <= 0) return false;
    mpfr_ui_div(inv_, 1, s_, MPFR_RNDN);
    mpfr_sub(x_, x_, inv_, MPFR_RNDN);
    mpfr_add(s_, s_, x_, MPFR_RNDN);
    ++index_;
    return true;
  }

 private:
  mpfr_t x_, s_, inv_;
  std::size_t index_ = 1;
};

void RequireUsableStart(const Real& x1) {
  if (!x1.is_finite()) throw Error(ErrorKind::kInvalidInput, "x1 must be finite");
  if (x1.sign() <= 0) throw Error(ErrorKind::kInvalidInput, "x1 must be positive");
}

// x_k > 0 for every k <= n. On x1 > a_{n-1} the map x1 -> x_n is increasing
// and negative at a_{n-1}, so by induction this holds exactly when x1 > a_n.
bool RightOfXnRoot(const Real& x1, std::size_t n) {
  Orbit orbit(x1);
  while (true) {
    if (mpfr_sgn(orbit.x()) <= 0) return false;
    if (orbit.index() == n) return true;
    if (!orbit.Advance()) return false;
  }
}

// S_k > 0 for every k <= n, which holds exactly when x1 > b_n.
bool RightOfSnRoot(const Real& x1, std::size_t n) {
  Orbit orbit(x1);
  while (true) {
    if (mpfr_sgn(orbit.s()) <= 0) return false;
    if (orbit.index() == n) return true;
    if (!orbit.Advance()) return false;
  }
}

// Odd N: x1 > a_m. Even N: x1 > a_m and 2 x_m - 1/S_m > 0; that residual is
// increasing past a_m and negative at a_m, so this is x1 > a_{m+1/2}.
bool RightOfShootingRoot(const Real& x1, std::size_t n) {
  const std::size_t m = MedianIndex(n);
  if (!RightOfXnRoot(x1, m)) return false;
  if (n % 2 == 1) return true;
  return ShootingResidual(x1, n).sign() > 0;
}

// x_n(x1) == 0 exactly, reached with every earlier S_k > 0.
bool XnVanishes(const Real& x1, std::size_t n) {
  Orbit orbit(x1);
  while (orbit.index() < n) {
    if (!orbit.Advance()) return false;
  }
  return mpfr_zero_p(orbit.x()) != 0;
}

// S_n(x1) == 0 exactly.
bool SnVanishes(const Real& x1, std::size_t n) {
  Orbit orbit(x1);
  while (orbit.index() < n) {
    if (!orbit.Advance()) return false;
  }
  return mpfr_zero_p(orbit.s()) != 0;
}

struct RootSearch {
  Real root;
  int iterations = 0;
};

// The shortest decimal in (lo, hi] at which the target vanishes exactly, if
// any. Recovers roots such as a_2 = 1 that bisection only approaches.
std::optional<Real> ExactRootIn(const Real& lo, const Real& hi, int digits,
                                const std::function<bool(const Real&)>& vanishes) {
  for (int k = 1; k <= digits; ++k) {
    Real candidate(hi.to_string(k), digits);
    if (candidate > lo && candidate <= hi && vanishes(candidate)) return candidate;
  }
  return std::nullopt;
}

// Bisection on a predicate that is false left of the target root and true
// right of it. Returns the right end of the final bracket, or an exact root
// inside it when `vanishes` finds one.
RootSearch BisectLargestRoot(const std::function<bool(const Real&)>& right_of_root,
                             const std::function<bool(const Real&)>& vanishes, double seed, int digits,
                             const SolverOptions& opts) {
  if (opts.max_bisection_steps < 1) throw Error(ErrorKind::kInvalidInput, "max_bisection_steps must be >= 1");
  if (!(opts.residual_tolerance > 0)) throw Error(ErrorKind::kInvalidInput, "residual_tolerance must be positive");

  Real hi(seed * opts.bracket_seed_scale.second, digits);
  if (hi.sign() <= 0) throw Error(ErrorKind::kInvalidInput, "bracket seed must be positive");
  int expansions = 0;
  while (!right_of_root(hi)) {
    if (++expansions > opts.max_bracket_expansions) {
      throw Error(ErrorKind::kBracketNotFound, "no upper bracket found up to " + hi.to_string(12));
    }
    hi = hi * 2.0;
  }

  Real lo(seed * opts.bracket_seed_scale.first, digits);
  if (lo > hi) lo = hi;
  Real step = lo / 2.0;
  expansions = 0;
  while (right_of_root(lo)) {
    if (++expansions > opts.max_bracket_expansions) {
      throw Error(ErrorKind::kBracketNotFound, "no lower bracket found down to " + lo.to_string(12));
    }
    lo -= step;
    step = step / 2.0;
  }

  const Real relative_width(std::pow(10.0, -(digits - 10)), digits);
  for (int i = 0; i < opts.max_bisection_steps; ++i) {
    if (hi - lo <= relative_width * hi) {
      if (auto exact = ExactRootIn(lo, hi, digits, vanishes)) return RootSearch{std::move(*exact), i};
      return RootSearch{hi, i};
    }
    Real mid = (lo + hi) / 2.0;
    if (right_of_root(mid)) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  throw Error(ErrorKind::kBisectionNotConverged,
              "bisection did not converge in " + std::to_string(opts.max_bisection_steps) + " steps");
}

// Upper 1/(2N) standard normal quantile.
double BracketSeed(std::size_t n) { return NormalUpperQuantile(1.0 / (2.0 * static_cast<double>(n))); }

int WorkingDigits(std::size_t n, const SolverOptions& opts) {
  if (opts.precision_digits < 0) throw Error(ErrorKind::kInvalidInput, "precision_digits must be >= 0");
  const int digits = opts.precision_digits > 0 ? opts.precision_digits : DefaultPrecisionDigits(n);
  if (digits <= 10) throw Error(ErrorKind::kInvalidInput, "precision_digits must exceed 10");
  return digits;
}

}  // namespace

int DefaultPrecisionDigits(std::size_t n) { return n <= 100 ? 30 : 60; }

std::size_t MedianIndex(std::size_t n) { return n % 2 == 1 ? (n + 1) / 2 : n / 2; }

Configuration Configuration::FromValues(std::vector<double> values, int precision_digits) {
  std::vector<Real> exact;
  exact.reserve(values.size());
  for (double v : values) exact.emplace_back(v, precision_digits);
  return FromExact(std::move(exact), precision_digits);
}

Configuration Configuration::FromExact(std::vector<Real> values, int precision_digits) {
  Configuration cfg;
  cfg.n = values.size();
  cfg.precision_digits = precision_digits;
  cfg.residual = Real(0.0, precision_digits);
  Real sum(0.0, precision_digits);
  cfg.exact_cumsums.reserve(values.size());
  cfg.values.reserve(values.size());
  for (const Real& v : values) {
    sum += v;
    cfg.exact_cumsums.push_back(sum);
    cfg.values.push_back(v.to_double());
  }
  cfg.exact_values = std::move(values);
  return cfg;
}

Trajectory IterateRecursion(const Real& x1, std::size_t n_max) {
  RequireUsableStart(x1);
  if (n_max == 0) throw Error(ErrorKind::kInvalidInput, "n_max must be >= 1");
  Trajectory t;
  t.values.reserve(n_max);
  t.cumsums.reserve(n_max);
  t.values.push_back(x1);
  t.cumsums.push_back(x1);
  while (t.values.size() < n_max) {
    const Real& s = t.cumsums.back();
    if (s.sign() <= 0) {
      t.cumsum_nonpositive_at = t.values.size();
      break;
    }
    Real next = t.values.back() - 1.0 / s;
    t.cumsums.push_back(s + next);
    t.values.push_back(std::move(next));
  }
  return t;
}

Real ShootingResidual(const Real& x1, std::size_t n) {
  RequireUsableStart(x1);
  if (n < 3) throw Error(ErrorKind::kInvalidInput, "N must be >= 3");
  const std::size_t m = MedianIndex(n);
  Orbit orbit(x1);
  while (orbit.index() < m) {
    if (!orbit.Advance()) return Real::infinity(-1, x1.precision_digits());
  }
  Real residual(orbit.x());
  if (n % 2 == 0) {
    if (!orbit.Advance()) return Real::infinity(-1, x1.precision_digits());
    residual += Real(orbit.x());
  }
  return residual;
}

Configuration SolveGroundState(std::size_t n, const SolverOptions& opts) {
  if (n < 3) throw Error(ErrorKind::kInvalidInput, "N must be >= 3");
  const int digits = WorkingDigits(n, opts);
  RootSearch search =
      BisectLargestRoot([n](const Real& x1) { return RightOfShootingRoot(x1, n); },
                        [n](const Real& x1) { return ShootingResidual(x1, n).sign() == 0; }, BracketSeed(n), digits,
                        opts);

  Trajectory orbit = IterateRecursion(search.root, n);
  if (!orbit.complete()) {
    throw Error(ErrorKind::kBisectionNotConverged, "solved orbit hit a nonpositive cumulative sum at index " +
                                                      std::to_string(*orbit.cumsum_nonpositive_at));
  }
  Real residual = ShootingResidual(search.root, n);
  if (!(abs(residual) <= opts.residual_tolerance)) {
    throw Error(ErrorKind::kBisectionNotConverged,
                "residual " + residual.to_string(6) + " exceeds tolerance; raise precision_digits");
  }

  Configuration cfg;
  cfg.n = n;
  cfg.precision_digits = digits;
  cfg.residual = std::move(residual);
  cfg.solver_iterations = search.iterations;
  cfg.values.reserve(n);
  for (const Real& v : orbit.values) cfg.values.push_back(v.to_double());
  cfg.exact_values = std::move(orbit.values);
  cfg.exact_cumsums = std::move(orbit.cumsums);
  for (std::size_t i = 1; i < n; ++i) {
    if (!(cfg.exact_values[i] < cfg.exact_values[i - 1])) {
      throw Error(ErrorKind::kBisectionNotConverged,
                  "solved orbit is not strictly decreasing at index " + std::to_string(i + 1));
    }
  }
  return cfg;
}

Real FindLargestRootXn(std::size_t n, const SolverOptions& opts) {
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "root index must be >= 2");
  const std::size_t odd_n = 2 * n - 1;  // a_n is the median root for this N
  const int digits = WorkingDigits(odd_n, opts);
  return BisectLargestRoot([n](const Real& x1) { return RightOfXnRoot(x1, n); },
                           [n](const Real& x1) { return XnVanishes(x1, n); }, BracketSeed(odd_n), digits, opts)
      .root;
}

Real FindLargestRootSn(std::size_t n, const SolverOptions& opts) {
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "root index must be >= 2");
  const std::size_t odd_n = 2 * n - 1;
  const int digits = WorkingDigits(odd_n, opts);
  return BisectLargestRoot([n](const Real& x1) { return RightOfSnRoot(x1, n); },
                           [n](const Real& x1) { return SnVanishes(x1, n); }, BracketSeed(odd_n), digits, opts)
      .root;
}

}  // namespace miw
