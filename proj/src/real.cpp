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

#include "miw/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace miw {

mpfr_prec_t BitsForDigits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  // log2(10) = 3.3219..., plus a guard bit.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.32192809488736234787)) + 1;
}

Real::Real(int digits) { mpfr_init2(value_, BitsForDigits(digits)); mpfr_set_zero(value_, 1); }

Real::Real(double value, int digits) {
  mpfr_init2(value_, BitsForDigits(digits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(std::string_view decimal, int digits) {
  mpfr_init2(value_, BitsForDigits(digits));
  std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end != text.c_str() + text.size()) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
}

Real::Real(mpfr_srcptr value) {
  mpfr_init2(value_, mpfr_get_prec(value));
  mpfr_set(value_, value, MPFR_RNDN);
}

Real::Real(mpfr_prec_t bits, std::nullptr_t) { mpfr_init2(value_, bits); }

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision_bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision_bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

int Real::precision_digits() const {
  return static_cast<int>(std::floor((precision_bits() - 1) / 3.32192809488736234787));
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  const int n = digits > 0 ? digits : std::max(precision_digits(), 1);
  if (mpfr_zero_p(value_)) return "0";
  std::vector<char> buf(static_cast<size_t>(n) + 32);
  const std::string format = "%." + std::to_string(n - 1) + "Re";
  int written = mpfr_snprintf(buf.data(), buf.size(), format.c_str(), value_);
  if (written < 0 || static_cast<size_t>(written) >= buf.size()) {
    throw std::runtime_error("decimal formatting failed");
  }
  return std::string(buf.data(), static_cast<size_t>(written));
}

namespace {

mpfr_prec_t Wider(const Real& a, const Real& b) { return std::max(a.precision_bits(), b.precision_bits()); }

}  // namespace

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real r = Real::WithBits(Wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = Real::WithBits(Wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = Real::WithBits(Wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = Real::WithBits(Wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r = Real::WithBits(a.precision_bits());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

Real abs(const Real& a) {
  Real r = Real::WithBits(a.precision_bits());
  mpfr_abs(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r = Real::WithBits(a.precision_bits());
  mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real Real::infinity(int sign, int digits) {
  Real r(digits);
  mpfr_set_inf(r.value_, sign < 0 ? -1 : 1);
  return r;
}

}  // namespace miw
