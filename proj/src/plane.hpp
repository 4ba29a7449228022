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

// Exact-formula geometry of the upper half-plane H = {x + iy : y > 0} with
// metric (dx^2 + dy^2) / y^2, its boundary R u {inf}, orientation-preserving
// isometries PSL(2, R), and the geodesic flow on the unit tangent bundle.

#pragma once

#include <optional>
#include <string>

#include "real.hpp"

namespace horoflow {

/// Determinant tolerance: 1e-12 at 53 bits, scaled with the working precision.
double tol_det();
/// Trace tolerance used to call an isometry parabolic: 1e-9 at 53 bits.
double tol_trace();

struct Point {
  Real x;
  Real y;

  /// Throws DomainError unless y > 0.
  Point(Real x_, Real y_);

  static Point i() { return {Real(0), Real(1)}; }
  std::string str() const;
};

/// A point of R u {inf}.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(); }
  static BoundaryPoint finite(Real x) { return BoundaryPoint(std::move(x)); }

  bool is_infinity() const { return !value_.has_value(); }
  /// Finite coordinate. Throws DomainError at infinity.
  const Real& value() const;

  /// Exact comparison (infinity equals only infinity).
  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b);
  std::string str() const;

 private:
  BoundaryPoint() = default;
  explicit BoundaryPoint(Real x) : value_(std::move(x)) {}

  std::optional<Real> value_;
};

/// |a - b| for finite points, +inf semantics reported as nullopt.
std::optional<Real> boundary_gap(const BoundaryPoint& a, const BoundaryPoint& b);

class UnitTangent;

enum class IsometryKind { Identity, Parabolic, Hyperbolic, Elliptic };

const char* to_string(IsometryKind kind);

struct Classification {
  IsometryKind kind;
  /// Set when the trace is within tol_trace of 2 but further from 2 than the
  /// rounding of a genuine parabolic would explain.
  bool low_confidence = false;
};

/// z -> (az + b) / (cz + d) with ad - bc = 1, up to the sign of the matrix.
class Isometry {
 public:
  /// Rescales by 1/sqrt(ad - bc). Throws DomainError if ad - bc <= 0.
  Isometry(Real a, Real b, Real c, Real d);

  static Isometry identity();
  /// z -> z + lambda.
  static Isometry translation(const Real& lambda);
  /// z -> k z, k > 0.
  static Isometry dilation(const Real& k);
  /// [[xi, -1], [1, 0]], normalized: sends inf to xi and 0 to inf.
  static Isometry infinity_to(const Real& xi);
  /// An isometry sending xi to inf (identity when xi is already inf).
  static Isometry to_infinity(const BoundaryPoint& xi);

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  const Real& c() const { return c_; }
  const Real& d() const { return d_; }

  Real determinant() const { return a_ * d_ - b_ * c_; }
  Real trace() const { return a_ + d_; }
  /// |ad - bc - 1|; products are not renormalized, so this measures drift.
  Real determinant_drift() const { return abs(determinant() - Real(1)); }
  Isometry normalized() const { return Isometry(a_, b_, c_, d_); }

  Isometry inverse() const;
  friend Isometry operator*(const Isometry& g, const Isometry& h);

  Point operator()(const Point& z) const;
  BoundaryPoint operator()(const BoundaryPoint& xi) const;
  UnitTangent operator()(const UnitTangent& u) const;

  /// Equality in PSL(2, R): compares after making the entry of largest
  /// magnitude positive; `tol` is relative to that entry (at least 1).
  bool projectively_equal(const Isometry& other, double tol) const;

  /// The unique boundary fixed point of a parabolic (inf when c = 0).
  BoundaryPoint parabolic_fixed_point() const;

  std::string str() const;

 private:
  struct Raw {};
  Isometry(Raw, Real a, Real b, Real c, Real d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Real a_, b_, c_, d_;
};

Classification classify(const Isometry& g);

/// A unit tangent vector of H, stored as its basepoint u(0) and forward
/// endpoint u(+inf). The tangent direction is the one of the geodesic from
/// u(-inf) through u(0) to u(+inf).
class UnitTangent {
 public:
  UnitTangent(Point base, BoundaryPoint forward);

  const Point& base() const { return base_; }
  const BoundaryPoint& forward() const { return forward_; }
  BoundaryPoint backward() const;

  std::string str() const;

 private:
  Point base_;
  BoundaryPoint forward_;
};

Real hyp_distance(const Point& p, const Point& q);

/// B_xi(x, y) = lim d(x, c(t)) - d(y, c(t)) for a ray c(t) -> xi.
Real busemann(const BoundaryPoint& xi, const Point& x, const Point& y);

BoundaryPoint backward_endpoint(const UnitTangent& u);

/// The isometry g with g(u(0)) = i, g(u(+inf)) = inf, g(u(-inf)) = 0.
Isometry standard_frame(const UnitTangent& u);

/// g_t(u): moves the basepoint distance |t| along the oriented geodesic.
UnitTangent geodesic_flow(const UnitTangent& u, const Real& t);

/// d(u(t), v(t)), evaluated in the standard frame of u. Near a common
/// forward endpoint the two basepoints are e^-2t apart in Euclidean terms, so
/// differencing their plane coordinates loses about 2t / log 2 bits; in the
/// frame of u a shared endpoint sits at inf and nothing cancels.
Real flow_distance(const UnitTangent& u, const UnitTangent& v, const Real& t);

/// d(u(0), v(0)) + d(u(1), v(1)).
Real d1(const UnitTangent& u, const UnitTangent& v);

}  // namespace horoflow
