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

#include "plane.hpp"

#include <array>
#include <cmath>

namespace horoflow {

double tol_det() { return scaled_tolerance(1e-12); }
double tol_trace() { return scaled_tolerance(1e-9); }

Point::Point(Real x_, Real y_) : x(std::move(x_)), y(std::move(y_)) {
  if (y.sign() <= 0) throw DomainError("point off the upper half-plane: y = " + y.str(17));
}

std::string Point::str() const { return "(" + x.str(17) + ", " + y.str(17) + ")"; }

const Real& BoundaryPoint::value() const {
  if (!value_) throw DomainError("boundary point at infinity has no finite coordinate");
  return *value_;
}

bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return *a.value_ == *b.value_;
}

std::string BoundaryPoint::str() const { return value_ ? value_->str(17) : "inf"; }

std::optional<Real> boundary_gap(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity()) return Real(0);
    return std::nullopt;
  }
  return abs(a.value() - b.value());
}

const char* to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::Identity:
      return "identity";
    case IsometryKind::Parabolic:
      return "parabolic";
    case IsometryKind::Hyperbolic:
      return "hyperbolic";
    case IsometryKind::Elliptic:
      return "elliptic";
  }
  return "?";
}

Isometry::Isometry(Real a, Real b, Real c, Real d) {
  const Real det = a * d - b * c;
  if (det.sign() <= 0) throw DomainError("isometry needs ad - bc > 0, got " + det.str(17));
  const Real s = sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

Isometry Isometry::identity() { return {Raw{}, Real(1), Real(0), Real(0), Real(1)}; }

Isometry Isometry::translation(const Real& lambda) {
  return {Raw{}, Real(1), lambda, Real(0), Real(1)};
}

Isometry Isometry::dilation(const Real& k) {
  if (k.sign() <= 0) throw DomainError("dilation factor must be positive");
  const Real s = sqrt(k);
  return {Raw{}, s, Real(0), Real(0), Real(1) / s};
}

Isometry Isometry::infinity_to(const Real& xi) { return {Raw{}, xi, Real(-1), Real(1), Real(0)}; }

Isometry Isometry::to_infinity(const BoundaryPoint& xi) {
  if (xi.is_infinity()) return identity();
  return {Raw{}, Real(0), Real(1), Real(-1), xi.value()};
}

Isometry Isometry::inverse() const { return {Raw{}, d_, -b_, -c_, a_}; }

Isometry operator*(const Isometry& g, const Isometry& h) {
  return {Isometry::Raw{}, g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
          g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_};
}

Point Isometry::operator()(const Point& z) const {
  // (az + b)/(cz + d) = ((az + b) conj(cz + d)) / |cz + d|^2.
  const Real px = a_ * z.x + b_;
  const Real qx = c_ * z.x + d_;
  const Real qy = c_ * z.y;
  const Real den = qx * qx + qy * qy;
  const Real re = (px * qx + a_ * qy * z.y) / den;
  const Real im = determinant() * z.y / den;
  return {re, im};
}

BoundaryPoint Isometry::operator()(const BoundaryPoint& xi) const {
  if (xi.is_infinity()) {
    if (c_.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(a_ / c_);
  }
  const Real den = c_ * xi.value() + d_;
  if (den.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((a_ * xi.value() + b_) / den);
}

UnitTangent Isometry::operator()(const UnitTangent& u) const {
  return {(*this)(u.base()), (*this)(u.forward())};
}

namespace {

// Entries with the largest-magnitude entry made positive.
std::array<Real, 4> canonical(const Isometry& g) {
  std::array<Real, 4> e{g.a(), g.b(), g.c(), g.d()};
  std::size_t k = 0;
  for (std::size_t j = 1; j < 4; ++j) {
    if (abs(e[j]) > abs(e[k])) k = j;
  }
  if (e[k].sign() < 0) {
    for (auto& v : e) v = -v;
  }
  return e;
}

}  // namespace

bool Isometry::projectively_equal(const Isometry& other, double tol) const {
  const auto p = canonical(*this);
  const auto q = canonical(other);
  Real scale(1);
  for (std::size_t j = 0; j < 4; ++j) scale = max(scale, max(abs(p[j]), abs(q[j])));
  const Real bound = Real(tol) * scale;
  for (std::size_t j = 0; j < 4; ++j) {
    if (abs(p[j] - q[j]) > bound) return false;
  }
  return true;
}

BoundaryPoint Isometry::parabolic_fixed_point() const {
  if (c_.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((a_ - d_) / (Real(2) * c_));
}

std::string Isometry::str() const {
  return "[[" + a_.str(17) + ", " + b_.str(17) + "], [" + c_.str(17) + ", " + d_.str(17) + "]]";
}

Classification classify(const Isometry& g) {
  const double td = tol_det();
  Real scale(1);
  scale = max(scale, max(max(abs(g.a()), abs(g.b())), max(abs(g.c()), abs(g.d()))));
  const Real eps = Real(td) * scale;
  if (abs(g.b()) <= eps && abs(g.c()) <= eps && abs(g.a() - g.d()) <= eps) {
    return {IsometryKind::Identity, false};
  }
  const Real excess = abs(g.trace()) - Real(2);
  if (abs(excess) <= Real(tol_trace())) {
    // A product of exact parabolic entries leaves rounding of order
    // scale^2 * 2^-bits in the trace; anything larger is suspicious.
    const Real noise = Real(64.0 * std::ldexp(1.0, -static_cast<int>(working_precision()))) *
                       scale * scale;
    return {IsometryKind::Parabolic, abs(excess) > noise};
  }
  return {excess.sign() > 0 ? IsometryKind::Hyperbolic : IsometryKind::Elliptic, false};
}

UnitTangent::UnitTangent(Point base, BoundaryPoint forward)
    : base_(std::move(base)), forward_(std::move(forward)) {}

BoundaryPoint UnitTangent::backward() const { return backward_endpoint(*this); }

std::string UnitTangent::str() const { return "{base " + base_.str() + ", fwd " + forward_.str() + "}"; }

Real hyp_distance(const Point& p, const Point& q) {
  const Real chord = hypot(p.x - q.x, p.y - q.y);
  return Real(2) * asinh(chord / (Real(2) * sqrt(p.y * q.y)));
}

Real busemann(const BoundaryPoint& xi, const Point& x, const Point& y) {
  if (xi.is_infinity()) return log(y.y / x.y);
  // Pull xi back to infinity: Im of the image of z is Im z / |xi - z|^2.
  const Real& c = xi.value();
  const Real nx = square(c - x.x) + square(x.y);
  const Real ny = square(c - y.x) + square(y.y);
  return log((y.y * nx) / (x.y * ny));
}

BoundaryPoint backward_endpoint(const UnitTangent& u) {
  const Point& z = u.base();
  if (u.forward().is_infinity()) return BoundaryPoint::finite(z.x);
  const Real gap = u.forward().value() - z.x;
  if (gap.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint::finite(z.x - square(z.y) / gap);
}

Isometry standard_frame(const UnitTangent& u) {
  const Point& z = u.base();
  if (u.forward().is_infinity()) {
    // z -> (z - x0) / y0
    return Isometry(Real(1), -z.x, Real(0), z.y);
  }
  const Real& f = u.forward().value();
  const Real gap = f - z.x;
  if (gap.is_zero()) {
    // z -> y0 / (f - z)
    return Isometry(Real(0), z.y, Real(-1), f);
  }
  // z -> k (z - b) / (f - z), with k fixing the basepoint's image at i.
  const Real b = z.x - square(z.y) / gap;
  const Real k = (square(gap) + square(z.y)) / (z.y * (f - b));
  return Isometry(k, -k * b, Real(-1), f);
}

UnitTangent geodesic_flow(const UnitTangent& u, const Real& t) {
  if (t.is_zero()) return u;
  if (u.forward().is_infinity()) {
    const Point& z = u.base();
    return {Point(z.x, z.y * exp(t)), u.forward()};
  }
  const Isometry g = standard_frame(u);
  return {g.inverse()(Point(Real(0), exp(t))), u.forward()};
}

Real flow_distance(const UnitTangent& u, const UnitTangent& v, const Real& t) {
  const Isometry f = standard_frame(u);
  // A shared endpoint maps to inf exactly, not to the rounded image of it.
  const BoundaryPoint fwd =
      v.forward() == u.forward() ? BoundaryPoint::infinity() : f(v.forward());
  const UnitTangent w(f(v.base()), fwd);
  return hyp_distance(Point(Real(0), exp(t)), geodesic_flow(w, t).base());
}

Real d1(const UnitTangent& u, const UnitTangent& v) {
  const Real one(1);
  return hyp_distance(u.base(), v.base()) +
         hyp_distance(geodesic_flow(u, one).base(), geodesic_flow(v, one).base());
}

}  // namespace horoflow
