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

#include "horocycle.hpp"

namespace horoflow {

namespace {

// A point of the horocycle: top of the circle, or above 0 on the line.
Point anchor(const Horocycle& h) {
  if (h.center().is_infinity()) return {Real(0), h.height()};
  return {h.center().value(), h.diameter()};
}

// The conjugate of the pair's parabolic in the frame sending the center to
// inf; for a true parabolic this is z -> z + lambda up to rounding.
Real frame_translation(const OrientedPair& pair) {
  const Isometry c = Isometry::to_infinity(pair.horocycle.center());
  const Isometry t = c * pair.parabolic * c.inverse();
  return t.b() / t.d();
}

}  // namespace

Horocycle::Horocycle(BoundaryPoint center, Real level)
    : center_(std::move(center)), level_(std::move(level)) {}

Horocycle Horocycle::at_height(const Real& h) {
  if (h.sign() <= 0) throw DomainError("horocycle height must be positive");
  return {BoundaryPoint::infinity(), log(h)};
}

Horocycle Horocycle::with_diameter(const Real& xi, const Real& diameter) {
  if (diameter.sign() <= 0) throw DomainError("horocycle diameter must be positive");
  return {BoundaryPoint::finite(xi), log((Real(1) + square(xi)) / diameter)};
}

Horocycle Horocycle::through(const BoundaryPoint& center, const Point& z) {
  return {center, -busemann(center, z, Point::i())};
}

Real Horocycle::height() const {
  if (!center_.is_infinity()) throw DomainError("height() needs a horocycle centered at inf");
  return exp(level_);
}

Real Horocycle::diameter() const {
  if (center_.is_infinity()) throw DomainError("diameter() needs a finite center");
  return (Real(1) + square(center_.value())) * exp(-level_);
}

Real Horocycle::residual(const Point& z) const {
  return busemann(center_, z, Point::i()) + level_;
}

Point Horocycle::walk(const Point& from, const Real& s) const {
  const Isometry c = Isometry::to_infinity(center_);
  const Point w = c(from);
  return c.inverse()(Point(w.x + s * w.y, w.y));
}

Horocycle Horocycle::transformed(const Isometry& g) const {
  return through(g(center_), g(anchor(*this)));
}

std::string Horocycle::str() const {
  return "horocycle{center " + center_.str() + ", level " + level_.str(17) + "}";
}

void OrientedPair::validate(double tol) const {
  const Classification k = classify(parabolic);
  if (k.kind != IsometryKind::Parabolic) {
    throw DomainError(std::string("pair isometry is ") + to_string(k.kind) + ", not parabolic");
  }
  const BoundaryPoint fixed = parabolic(horocycle.center());
  const auto gap = boundary_gap(fixed, horocycle.center());
  if (!gap) throw DomainError("parabolic does not fix the horocycle center");
  const Real scale = horocycle.center().is_infinity()
                         ? Real(1)
                         : max(Real(1), abs(horocycle.center().value()));
  if (*gap > Real(tol) * scale) throw DomainError("parabolic does not fix the horocycle center");
  if (abs(horocycle.residual(parabolic(anchor(horocycle)))) > Real(tol)) {
    throw DomainError("parabolic does not preserve the horocycle");
  }
}

OrientedPair OrientedPair::transformed(const Isometry& g) const {
  return {horocycle.transformed(g), g * parabolic * g.inverse()};
}

Real signed_translation_length(const OrientedPair& pair) {
  const Isometry c = Isometry::to_infinity(pair.horocycle.center());
  const Real h = c(anchor(pair.horocycle)).y;
  return frame_translation(pair) / h;
}

Real translation_length(const OrientedPair& pair) { return abs(signed_translation_length(pair)); }

Tangency tangency(const UnitTangent& u, const BoundaryPoint& xi) {
  const Isometry g = standard_frame(u);
  const BoundaryPoint image = g(xi);
  if (image.is_infinity() || image.value().is_zero()) {
    throw DomainError("horocycle center " + xi.str() + " is an endpoint of the geodesic");
  }
  const Real r = abs(image.value());
  Point point = g.inverse()(Point(Real(0), r));
  Horocycle h = Horocycle::through(xi, point);
  return {std::move(h), log(r), std::move(point)};
}

Horocycle tangent_horocycle(const UnitTangent& u, const BoundaryPoint& xi) {
  return tangency(u, xi).horocycle;
}

Isometry make_parabolic(const BoundaryPoint& fixed, const Horocycle& horocycle,
                        const Real& length, const UnitTangent& positive_for) {
  if (length.sign() <= 0) throw DomainError("translation length must be positive");
  const auto gap = boundary_gap(fixed, horocycle.center());
  if (!gap || *gap > Real(tol_det())) throw DomainError("parabolic fixed point is not the center");

  const Isometry c = Isometry::to_infinity(fixed);
  const BoundaryPoint fwd = c(positive_for.forward());
  const BoundaryPoint bwd = c(positive_for.backward());
  if (fwd.is_infinity() || bwd.is_infinity()) {
    throw DomainError("the vector's geodesic ends at the horocycle center");
  }
  const Real h = c(anchor(horocycle)).y;
  const Real radius = abs(fwd.value() - bwd.value()) / Real(2);
  if (abs(radius / h - Real(1)) > Real(tol_trace())) {
    throw DomainError("vector is not tangent to the horocycle");
  }
  Real lambda = length * h;
  if (fwd.value() < bwd.value()) lambda = -lambda;

  if (fixed.is_infinity()) return Isometry::translation(lambda);
  const Real& x = fixed.value();
  const Real lx = lambda * x;
  return Isometry(Real(1) - lx, lx * x, -lambda, Real(1) + lx);
}

TangencyData make_tangency(const UnitTangent& u, const BoundaryPoint& xi, const Real& length) {
  Tangency t = tangency(u, xi);
  if (t.time.sign() < 0) {
    throw DomainError("tangency at time " + t.time.str(12) + " lies behind the ray");
  }
  Isometry p = make_parabolic(xi, t.horocycle, length, u);
  return {u, OrientedPair{std::move(t.horocycle), std::move(p)}, std::move(t.time),
          std::move(t.point)};
}

UnitTangent stable_partner(const UnitTangent& u, const Real& s) {
  const Horocycle h = Horocycle::through(u.forward(), u.base());
  return {h.walk(u.base(), s), u.forward()};
}

UnitTangent wind(const TangencyData& td) {
  return {td.vector.base(), td.pair.parabolic(td.vector.forward())};
}

Real winding_time(const TangencyData& td) {
  const Point& base = td.vector.base();
  return busemann(td.vector.forward(), td.pair.parabolic.inverse()(base), base);
}

KeyPropReport key_proposition_check(const TangencyData& td, const std::vector<Real>& grid) {
  const UnitTangent& u = td.vector;
  const Isometry& p = td.pair.parabolic;
  const UnitTangent v = wind(td);
  const Real zero(0);

  KeyPropReport r{translation_length(td.pair),
                  winding_time(td),
                  td.tangent_time,
                  tangency(v, td.pair.horocycle.center()).time,
                  zero, zero, zero, zero, zero, zero,
                  zero, zero, zero, zero, zero, zero,
                  false, false, false, false, false, {}};

  // Normalized frame: conjugate the center to inf, mirror if p moves left,
  // then move u(0) to i.
  {
    const Isometry c = Isometry::to_infinity(td.pair.horocycle.center());
    const Point w = c(u.base());
    Real f = c(u.forward()).value();
    Real x0 = w.x;
    Real lam = frame_translation(td.pair);
    if (lam.sign() < 0) {
      f = -f;
      x0 = -x0;
      lam = -lam;
    }
    const Real fn = (f - x0) / w.y;
    const Real fw = fn + lam / w.y;
    r.lambda = lam / w.y;
    const Real radius = (fn + Real(1) / fn) / Real(2);
    const Real radius_w = (fw + Real(1) / fw) / Real(2);
    r.b = log(radius);
    r.b_wind = log(radius_w);
    r.q1 = (fn - Real(1) / fn) / Real(2);
    r.q1_wind = (fw - Real(1) / fw) / Real(2);
    r.dist_q = hyp_distance(Point(r.q1, radius), Point(r.q1_wind, radius_w));
  }

  const Real t1_minus = r.t1 - Real(1);
  for (const Real& t : grid) {
    const UnitTangent gu = geodesic_flow(u, t);
    const UnitTangent gv = geodesic_flow(v, t);
    const UnitTangent pgu = p(gu);
    const UnitTangent sv = geodesic_flow(v, t + r.tau);
    Real s_id = d1(sv, gu);
    Real s_p = d1(sv, pgu);
    const bool use_p = s_p < s_id;
    KeyPropSample s{t,
                    use_p ? s_p : s_id,
                    use_p,
                    d1(gv, gu),
                    d1(gv, pgu),
                    hyp_distance(gv.base(), gu.base()),
                    hyp_distance(gv.base(), pgu.base())};

    r.max_shifted = max(r.max_shifted, s.shifted_min);
    if (t <= t1_minus) {
      r.max_case_a = max(r.max_case_a, s.plain_u);
      r.has_a = true;
    } else if (t < r.t1) {
      r.max_case_c = max(r.max_case_c, s.plain_u);
      r.has_c = true;
    }
    if (t >= r.t1) {
      r.max_case_b = max(r.max_case_b, s.plain_pu);
      r.max_case2 = max(r.max_case2, s.base_pu);
      r.has_b = r.has_2 = true;
    }
    if (t.sign() >= 0 && t <= r.t1) {
      r.max_case1 = max(r.max_case1, s.base_u);
      r.has_1 = true;
    }
    r.samples.push_back(std::move(s));
  }
  return r;
}

}  // namespace horoflow
