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

#include "real.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace horoflow {

namespace {

thread_local unsigned g_bits = 53;

constexpr unsigned kMinBits = 24;
constexpr unsigned kMaxBits = 1u << 16;

}  // namespace

unsigned working_precision() noexcept { return g_bits; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(g_bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw DomainError("precision must lie in [" + std::to_string(kMinBits) + ", " +
                      std::to_string(kMaxBits) + "] bits, got " + std::to_string(bits));
  }
  g_bits = bits;
}

PrecisionScope::~PrecisionScope() { g_bits = saved_; }

double scaled_tolerance(double base) noexcept {
  return std::ldexp(base, 53 - static_cast<int>(g_bits));
}

Real::Real(Uninit) { mpfr_init2(value_, g_bits); }

Real::Real() : Real(Uninit{}) { mpfr_set_zero(value_, 1); }

Real::Real(double v) : Real(Uninit{}) {
  if (!std::isfinite(v)) throw NumericError("non-finite double converted to Real");
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(int v) : Real(Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }

Real::Real(long v) : Real(Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }

Real Real::parse(std::string_view text) {
  Real r(Uninit{});
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a number: '" + s + "'");
  return r.check("parse");
}

Real::Real(const Real& other) : Real(Uninit{}) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::check(const char* op) {
  if (!mpfr_number_p(value_)) {
    throw NumericError(std::string("non-finite result in ") + op + " at " +
                       std::to_string(mpfr_get_prec(value_)) + " bits");
  }
  return *this;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return check("+");
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return check("-");
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return check("*");
}
Real& Real::operator/=(const Real& o) {
  if (mpfr_zero_p(o.value_)) throw NumericError("division by zero");
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return check("/");
}

Real operator+(const Real& a, const Real& b) {
  Real r(Real::Uninit{});
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.check("+"));
}
Real operator-(const Real& a, const Real& b) {
  Real r(Real::Uninit{});
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.check("-"));
}
Real operator*(const Real& a, const Real& b) {
  Real r(Real::Uninit{});
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.check("*"));
}
Real operator/(const Real& a, const Real& b) {
  if (mpfr_zero_p(b.value_)) throw NumericError("division by zero");
  Real r(Real::Uninit{});
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return std::move(r.check("/"));
}
Real operator-(const Real& a) {
  Real r(Real::Uninit{});
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

int Real::sign() const { return mpfr_sgn(value_); }
bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }
double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
unsigned Real::precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

std::string Real::str(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  const int n = digits > 0 ? digits
                           : static_cast<int>(std::ceil(mpfr_get_prec(value_) * 0.30103)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", n, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define HOROFLOW_UNARY(NAME, CALL)                       \
  Real NAME(const Real& x) {                             \
    Real r(Real::Uninit{});                              \
    CALL(r.value_, x.value_, MPFR_RNDN);                 \
    return std::move(r.check(#NAME));                    \
  }

HOROFLOW_UNARY(exp, mpfr_exp)
HOROFLOW_UNARY(expm1, mpfr_expm1)
HOROFLOW_UNARY(sinh, mpfr_sinh)
HOROFLOW_UNARY(cosh, mpfr_cosh)
HOROFLOW_UNARY(asinh, mpfr_asinh)
HOROFLOW_UNARY(abs, mpfr_abs)

#undef HOROFLOW_UNARY

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw NumericError("sqrt of a negative number");
  Real r(Real::Uninit{});
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw NumericError("log of a non-positive number");
  Real r(Real::Uninit{});
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  if (x <= Real(-1)) throw NumericError("log1p argument <= -1");
  Real r(Real::Uninit{});
  mpfr_log1p(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real acosh(const Real& x) {
  if (x < Real(1)) throw NumericError("acosh argument < 1");
  Real r(Real::Uninit{});
  mpfr_acosh(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(Real::Uninit{});
  mpfr_pow_si(r.value_, x.value_, n, MPFR_RNDN);
  return std::move(r.check("pow"));
}

Real hypot(const Real& x, const Real& y) {
  Real r(Real::Uninit{});
  mpfr_hypot(r.value_, x.value_, y.value_, MPFR_RNDN);
  return std::move(r.check("hypot"));
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real square(const Real& x) { return x * x; }

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

}  // namespace horoflow
