// Copyright 2026 The horoflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horoflow {

/// Raised when a computation leaves the finite reals (overflow, NaN, pole).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for arguments outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when accumulated rounding makes further construction meaningless.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(const std::string& what, int depth_reached)
      : std::runtime_error(what), depth_reached_(depth_reached) {}
  int depth_reached() const noexcept { return depth_reached_; }

 private:
  int depth_reached_;
};

/// Working precision, in bits, of every Real created on this thread.
unsigned working_precision() noexcept;

/// RAII override of the thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Tolerance `base` at 53 bits, scaled by 2^(53 - bits) for the current
/// working precision.
double scaled_tolerance(double base) noexcept;

/// Finite real number at the working precision of the thread that created it.
///
/// Every arithmetic result is checked: leaving the finite reals throws
/// NumericError instead of saturating to an infinity.
class Real {
 public:
  Real();
  Real(double v);  // NOLINT(google-explicit-constructor)
  Real(int v);     // NOLINT(google-explicit-constructor)
  Real(long v);    // NOLINT(google-explicit-constructor)
  static Real parse(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  int sign() const;
  bool is_zero() const;
  double to_double() const;
  unsigned precision() const;
  /// Decimal rendering with `digits` significant digits (0: enough to
  /// round-trip at this value's precision).
  std::string str(int digits = 0) const;

  mpfr_srcptr get() const { return value_; }

  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real log1p(const Real& x);
  friend Real expm1(const Real& x);
  friend Real sinh(const Real& x);
  friend Real cosh(const Real& x);
  friend Real asinh(const Real& x);
  friend Real acosh(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& x, long n);
  friend Real hypot(const Real& x, const Real& y);

 private:
  struct Uninit {};
  explicit Real(Uninit);
  Real& check(const char* op);

  mpfr_t value_;
};

Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real square(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace horoflow
