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

#ifndef MIW_REAL_HPP_
#define MIW_REAL_HPP_

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace miw {

// Number of mantissa bits needed to carry `digits` significant decimal digits.
mpfr_prec_t BitsForDigits(int digits);

// Owning wrapper around an MPFR value. Every instance carries its own
// precision, so no process-wide default precision is ever consulted and
// values can be used freely from several threads.
//
// Binary operations round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(int digits = 30);
  Real(double value, int digits);
  // Parses a decimal string; throws std::invalid_argument if it is not one.
  Real(std::string_view decimal, int digits);
  // Copies a raw MPFR value at its own precision.
  explicit Real(mpfr_srcptr value);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }
  int precision_digits() const;

  double to_double() const;
  // Scientific notation with `digits` significant digits (all of them by
  // default).
  std::string to_string(int digits = 0) const;

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, double b) { return a + Real(b, a.precision_digits()); }
  friend Real operator-(const Real& a, double b) { return a - Real(b, a.precision_digits()); }
  friend Real operator*(const Real& a, double b) { return a * Real(b, a.precision_digits()); }
  friend Real operator/(const Real& a, double b) { return a / Real(b, a.precision_digits()); }
  friend Real operator/(double a, const Real& b) { return Real(a, b.precision_digits()) / b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);

  static Real infinity(int sign, int digits);

  mpfr_srcptr get() const { return value_; }

 private:
  explicit Real(mpfr_prec_t bits, std::nullptr_t);
  static Real WithBits(mpfr_prec_t bits) { return Real(bits, nullptr); }

  mpfr_t value_;
};

}  // namespace miw

#endif  // MIW_REAL_HPP_
