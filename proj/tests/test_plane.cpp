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

#include <cmath>

#include "doctest.h"
#include "horocycle.hpp"
#include "plane.hpp"
#include "support.hpp"
#include "word_ball.hpp"

using namespace horoflow;
using horoflow::testing::random_isometry;
using horoflow::testing::random_point;
using horoflow::testing::random_tangent;
using horoflow::testing::rel_diff;

namespace {

const Point kI = Point::i();

// Composite Simpson rule for the length of the vertical segment from i*a to
// i*b under ds = dy / y.
double vertical_length(double a, double b) {
  const int n = 20000;
  const double h = (b - a) / n;
  double s = 1 / a + 1 / b;
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) / (a + k * h);
  return s * h / 3;
}

}  // namespace

TEST_CASE("real: arithmetic errors are raised, not saturated") {
  CHECK_THROWS_AS(Real(1) / Real(0), NumericError);
  CHECK_THROWS_AS(log(Real(0)), NumericError);
  CHECK_THROWS_AS(exp(Real(1e10)), NumericError);
  CHECK_THROWS_AS(Point(Real(0), Real(0)), DomainError);
  CHECK_THROWS_AS(PrecisionScope(8), DomainError);
}

TEST_CASE("real: precision scope is restored and tolerances scale") {
  CHECK(working_precision() == 53);
  CHECK(tol_det() == doctest::Approx(1e-12).epsilon(1e-12));
  {
    PrecisionScope p(113);
    CHECK(working_precision() == 113);
    CHECK(Real(1).precision() == 113);
    CHECK(tol_det() == doctest::Approx(1e-12 * std::ldexp(1.0, -60)).epsilon(1e-9));
  }
  CHECK(working_precision() == 53);
}

TEST_CASE("hyp_distance: closed-form examples") {
  CHECK(hyp_distance(kI, kI).is_zero());
  const double quad = vertical_length(1.0, 2.0);
  CHECK(hyp_distance(kI, Point(Real(0), Real(2))).to_double() == doctest::Approx(quad).epsilon(1e-12));
  CHECK(quad == doctest::Approx(0.693147).epsilon(1e-6));
  // cosh d = 1 + |z - w|^2 / (2 Im z Im w) with |z - w| = 1.
  CHECK(hyp_distance(kI, Point(Real(1), Real(1))).to_double() ==
        doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
}

TEST_CASE("hyp_distance: symmetric, non-negative, isometry invariant") {
  SplitMix64 rng(101);
  for (int k = 0; k < 500; ++k) {
    const Point p = random_point(rng);
    const Point q = random_point(rng);
    const Isometry g = random_isometry(rng);
    const Real d = hyp_distance(p, q);
    CHECK(d.sign() >= 0);
    CHECK(d == hyp_distance(q, p));
    CHECK(rel_diff(hyp_distance(g(p), g(q)), d) < 1e-9);
  }
}

TEST_CASE("isometry: action on points and the boundary") {
  CHECK(Isometry::identity()(kI).x.is_zero());
  CHECK(Isometry::identity()(kI).y == Real(1));
  CHECK(Isometry::translation(Real(1))(BoundaryPoint::infinity()).is_infinity());
  const Real x0(2.5);
  CHECK(Isometry::infinity_to(x0)(BoundaryPoint::infinity()).value() == x0);
  CHECK(Isometry::infinity_to(x0)(BoundaryPoint::finite(Real(0))).is_infinity());
  CHECK(Isometry::to_infinity(BoundaryPoint::finite(x0))(BoundaryPoint::finite(x0)).is_infinity());

  SplitMix64 rng(102);
  for (int k = 0; k < 200; ++k) {
    const Isometry g = random_isometry(rng);
    const Point z = random_point(rng);
    CHECK(g(z).y.sign() > 0);
    CHECK(rel_diff(g.determinant(), Real(1)) < 1e-12);
    const Point back = g.inverse()(g(z));
    CHECK(rel_diff(back.x, z.x) < 1e-10);
    CHECK(rel_diff(back.y, z.y) < 1e-10);
  }
  CHECK_THROWS_AS(Isometry(Real(0), Real(1), Real(1), Real(0)), DomainError);
}

TEST_CASE("isometry: projective equality and classification") {
  const Isometry g(Real(2), Real(1), Real(1), Real(1));
  const Isometry minus_g(Real(-2), Real(-1), Real(-1), Real(-1));
  CHECK(g.projectively_equal(minus_g, tol_det()));
  CHECK_FALSE(g.projectively_equal(Isometry::identity(), tol_det()));

  CHECK(classify(Isometry::translation(Real(1))).kind == IsometryKind::Parabolic);
  CHECK_FALSE(classify(Isometry::translation(Real(1))).low_confidence);
  // z -> 2z is diag(sqrt 2, 1/sqrt 2), trace 3 / sqrt 2 > 2.
  CHECK(classify(Isometry::dilation(Real(2))).kind == IsometryKind::Hyperbolic);
  CHECK(classify(Isometry::identity()).kind == IsometryKind::Identity);
  CHECK(classify(minus_g * minus_g.inverse()).kind == IsometryKind::Identity);
  CHECK(classify(Isometry(Real(1), Real(-1), Real(1), Real(0))).kind == IsometryKind::Elliptic);

  // Trace 2 + 1e-10: inside tol_trace but far beyond rounding noise.
  const Real e(1e-10);
  const Isometry near(Real(1), Real(1), e, Real(1) + e);
  const Classification c = classify(near);
  CHECK(c.kind == IsometryKind::Parabolic);
  CHECK(c.low_confidence);
}

TEST_CASE("busemann: limit definition and cocycle") {
  // B_inf(2i, i) from the defining limit with c(t) = i e^t at t = 30.
  const Point c30(Real(0), exp(Real(30)));
  const Real limit = hyp_distance(Point(Real(0), Real(2)), c30) - hyp_distance(kI, c30);
  const Real b = busemann(BoundaryPoint::infinity(), Point(Real(0), Real(2)), kI);
  CHECK(b.to_double() == doctest::Approx(limit.to_double()).epsilon(1e-12));
  CHECK(b.to_double() == doctest::Approx(-std::log(2.0)).epsilon(1e-15));

  SplitMix64 rng(103);
  for (int k = 0; k < 300; ++k) {
    const BoundaryPoint xi = rng.uniform() < 0.2 ? BoundaryPoint::infinity()
                                                 : testing::random_boundary(rng);
    const Point x = random_point(rng);
    const Point y = random_point(rng);
    const Point z = random_point(rng);
    CHECK(busemann(xi, x, x).is_zero());
    const Real lhs = busemann(xi, x, z);
    const Real rhs = busemann(xi, x, y) + busemann(xi, y, z);
    CHECK(abs(lhs - rhs).to_double() < 1e-12);
    CHECK(abs(lhs) <= hyp_distance(x, z) + Real(1e-12));
  }
}

TEST_CASE("busemann: finite center matches its defining limit") {
  const BoundaryPoint xi = BoundaryPoint::finite(Real(1.5));
  const UnitTangent ray(kI, xi);
  const Point x(Real(-0.4), Real(0.7));
  const Point y(Real(2.0), Real(1.3));
  PrecisionScope p(200);
  const Point ct = geodesic_flow(ray, Real(40)).base();
  const Real limit = hyp_distance(x, ct) - hyp_distance(y, ct);
  CHECK(abs(busemann(xi, x, y) - limit).to_double() < 1e-15);
}

TEST_CASE("busemann: isometry equivariance") {
  SplitMix64 rng(104);
  for (int k = 0; k < 300; ++k) {
    const Isometry g = random_isometry(rng);
    const BoundaryPoint xi = testing::random_boundary(rng);
    const Point x = random_point(rng);
    const Point y = random_point(rng);
    const BoundaryPoint gxi = g(xi);
    CHECK(abs(busemann(gxi, g(x), g(y)) - busemann(xi, x, y)).to_double() < 1e-9);
  }
}

TEST_CASE("backward_endpoint: examples") {
  CHECK(backward_endpoint(UnitTangent(kI, BoundaryPoint::infinity())).value().is_zero());
  // The geodesic through i ending at 1 is the unit half-circle.
  const BoundaryPoint b = backward_endpoint(UnitTangent(kI, BoundaryPoint::finite(Real(1))));
  CHECK(b.value().to_double() == doctest::Approx(-1.0).epsilon(1e-15));
  const Point p(Real(0), Real(2));
  CHECK(backward_endpoint(UnitTangent(p, BoundaryPoint::finite(Real(0)))).is_infinity());

  SplitMix64 rng(105);
  for (int k = 0; k < 200; ++k) {
    const UnitTangent u = random_tangent(rng);
    CHECK_FALSE(u.backward() == u.forward());
    const Isometry f = standard_frame(u);
    const Point fi = f(u.base());
    CHECK(abs(fi.x).to_double() < 1e-9);
    CHECK(abs(fi.y - Real(1)).to_double() < 1e-9);
    CHECK(testing::boundary_close(f(u.forward()), BoundaryPoint::infinity(), 1e-9));
    const BoundaryPoint fb = f(u.backward());
    CHECK((fb.is_infinity() ? 1e300 : abs(fb.value()).to_double()) < 1e-8);
  }
}

TEST_CASE("geodesic_flow: vertical case, identity, flow property, equivariance") {
  const UnitTangent up(kI, BoundaryPoint::infinity());
  const UnitTangent moved = geodesic_flow(up, Real(1.25));
  CHECK(moved.base().x.is_zero());
  CHECK(moved.base().y.to_double() == doctest::Approx(std::exp(1.25)).epsilon(1e-15));
  CHECK(moved.forward().is_infinity());

  SplitMix64 rng(106);
  for (int k = 0; k < 300; ++k) {
    const UnitTangent u = random_tangent(rng);
    const Real s(rng.uniform(-3, 3));
    const Real t(rng.uniform(-3, 3));
    const UnitTangent same = geodesic_flow(u, Real(0));
    CHECK(same.base().x == u.base().x);
    CHECK(same.base().y == u.base().y);

    const UnitTangent a = geodesic_flow(u, s + t);
    const UnitTangent b = geodesic_flow(geodesic_flow(u, t), s);
    CHECK(hyp_distance(a.base(), b.base()).to_double() < 1e-9);
    CHECK(abs(hyp_distance(u.base(), a.base()) - abs(s + t)).to_double() < 1e-9);
    CHECK(a.forward() == u.forward());

    const Isometry g = random_isometry(rng);
    const UnitTangent lhs = g(geodesic_flow(u, t));
    const UnitTangent rhs = geodesic_flow(g(u), t);
    CHECK(hyp_distance(lhs.base(), rhs.base()).to_double() < 1e-9);
  }
}

TEST_CASE("d1: examples and symmetry") {
  const UnitTangent up(kI, BoundaryPoint::infinity());
  const UnitTangent down(kI, BoundaryPoint::finite(Real(0)));
  CHECK(d1(up, up).is_zero());
  // Bases agree; the time-1 points are i e and i / e, at distance 2.
  CHECK(d1(up, down).to_double() == doctest::Approx(vertical_length(std::exp(-1.0), std::exp(1.0))).epsilon(1e-12));
  CHECK(d1(up, down).to_double() == doctest::Approx(2.0).epsilon(1e-15));

  SplitMix64 rng(107);
  for (int k = 0; k < 200; ++k) {
    const UnitTangent u = random_tangent(rng);
    const UnitTangent v = random_tangent(rng);
    CHECK(d1(u, v) == d1(v, u));
  }
}

TEST_CASE("word ball: identity, inverses, deduplication, quotient distance") {
  const FuchsianWordBall free_ball({Isometry::translation(Real(2)), Isometry(Real(1), Real(0), Real(2), Real(1))}, 3);
  // Reduced words of length <= 3 in a free group of rank 2: 1 + 4 + 12 + 36.
  CHECK(free_ball.size() == 53);
  CHECK(free_ball.duplicates() == 0);
  CHECK(classify(free_ball.element(0)).kind == IsometryKind::Identity);
  for (std::size_t k = 0; k < free_ball.size(); ++k) {
    const Isometry inv = free_ball.element(k).inverse();
    bool found = false;
    for (std::size_t j = 0; j < free_ball.size() && !found; ++j) {
      found = free_ball.element(j).projectively_equal(inv, tol_det());
    }
    CHECK(found);
  }

  // z + 1 and z + 2 commute: words collapse to translations by -6..6.
  const FuchsianWordBall abelian({Isometry::translation(Real(1)), Isometry::translation(Real(2))}, 3);
  CHECK(abelian.size() == 13);
  CHECK(abelian.duplicates() > 0);

  SplitMix64 rng(108);
  const Isometry g = free_ball.element(17);
  for (int k = 0; k < 20; ++k) {
    const UnitTangent u = random_tangent(rng);
    CHECK(d1_quotient(u, u, free_ball).is_zero());
    CHECK(d1_quotient(u, g(u), free_ball).to_double() < 1e-9);
  }

  const UnitTangent u = random_tangent(rng);
  const UnitTangent v = random_tangent(rng);
  Real previous = d1(u, v);
  for (int len = 0; len <= 4; ++len) {
    const FuchsianWordBall ball({Isometry::translation(Real(2)), Isometry(Real(1), Real(0), Real(2), Real(1))}, len);
    const Real q = d1_quotient(u, v, ball);
    CHECK(q <= previous);
    previous = q;
  }
}

TEST_CASE("decreasing: distance between weak-stable vectors is non-increasing") {
  SplitMix64 rng(109);
  for (int k = 0; k < 200; ++k) {
    const UnitTangent u = random_tangent(rng);
    const UnitTangent v = geodesic_flow(stable_partner(u, Real(rng.uniform(-2, 2))), Real(rng.uniform(-1, 1)));
    Real prev = hyp_distance(geodesic_flow(v, Real(-5)).base(), geodesic_flow(u, Real(-5)).base());
    for (int j = 1; j < 100; ++j) {
      const Real t(-5.0 + 10.0 * j / 99);
      const Real d = hyp_distance(geodesic_flow(v, t).base(), geodesic_flow(u, t).base());
      CHECK(d <= prev + Real(1e-9));
      prev = d;
    }
  }
}

TEST_CASE("flow_distance: matches the naive composition at high precision") {
  SplitMix64 rng(110);
  for (int k = 0; k < 100; ++k) {
    const UnitTangent u = random_tangent(rng);
    const UnitTangent v = random_tangent(rng);
    const double t = rng.uniform(-3, 3);
    PrecisionScope p(256);
    const Real naive = hyp_distance(geodesic_flow(u, Real(t)).base(), geodesic_flow(v, Real(t)).base());
    CHECK(rel_diff(flow_distance(u, v, Real(t)), naive) < 1e-60);
  }
}

TEST_CASE("distance along a stable horocycle: sinh(d(t) / 2) e^t is constant") {
  SplitMix64 rng(111);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto [u, v] = random_stable_pair(rng);
    const Real s0 = sinh(hyp_distance(u.base(), v.base()) / Real(2));
    for (int j = 0; j < 100; ++j) {
      const Real t(10.0 * j / 99);
      const Real ratio = sinh(flow_distance(u, v, t) / Real(2)) * exp(t) / s0;
      worst = std::max(worst, abs(ratio - Real(1)).to_double());
    }
  }
  CHECK(worst < 1e-8);

  // The naive composition at 256 bits agrees with the same constant.
  PrecisionScope p(256);
  SplitMix64 again(111);
  for (int k = 0; k < 20; ++k) {
    const auto [u, v] = random_stable_pair(again);
    const Real s0 = sinh(hyp_distance(u.base(), v.base()) / Real(2));
    const Real t(10);
    const Real d = hyp_distance(geodesic_flow(u, t).base(), geodesic_flow(v, t).base());
    CHECK(abs(sinh(d / Real(2)) * exp(t) / s0 - Real(1)).to_double() < 1e-50);
  }
}
