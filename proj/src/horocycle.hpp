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

// Horocycles, parabolic pairs and the winding of a tangent vector around a
// closed horocycle.

#pragma once

#include <vector>

#include "plane.hpp"

namespace horoflow {

/// {z : B_center(z, i) = -level}. Centered at inf this is the line of height
/// e^level; centered at xi it is the circle tangent to R at xi with Euclidean
/// diameter (1 + xi^2) e^-level.
class Horocycle {
 public:
  Horocycle(BoundaryPoint center, Real level);

  static Horocycle at_height(const Real& h);
  static Horocycle with_diameter(const Real& xi, const Real& diameter);
  /// The horocycle centered at `center` through z.
  static Horocycle through(const BoundaryPoint& center, const Point& z);

  const BoundaryPoint& center() const { return center_; }
  const Real& level() const { return level_; }

  /// Euclidean height; center must be inf.
  Real height() const;
  /// Euclidean diameter; center must be finite.
  Real diameter() const;

  /// B_center(z, i) + level: zero on the horocycle, negative inside the
  /// horoball.
  Real residual(const Point& z) const;
  bool in_open_horoball(const Point& z) const { return residual(z).sign() < 0; }

  /// The point at signed horocyclic arc length s from `from` (which must lie
  /// on the horocycle). Positive s runs in the +x direction of the frame
  /// Isometry::to_infinity(center).
  Point walk(const Point& from, const Real& s) const;

  Horocycle transformed(const Isometry& g) const;

  std::string str() const;

 private:
  BoundaryPoint center_;
  Real level_;
};

/// A horocycle with a parabolic isometry preserving it.
struct OrientedPair {
  Horocycle horocycle;
  Isometry parabolic;

  /// Throws DomainError unless the parabolic fixes the center and preserves
  /// the level within `tol`.
  void validate(double tol) const;
  OrientedPair transformed(const Isometry& g) const;
};

/// Signed translation of the parabolic in the frame Isometry::to_infinity of
/// its center, measured in arc length of the horocycle.
Real signed_translation_length(const OrientedPair& pair);

/// Arc length between x and px on the horocycle.
Real translation_length(const OrientedPair& pair);

/// The horocycle centered at xi tangent to the geodesic of u.
Horocycle tangent_horocycle(const UnitTangent& u, const BoundaryPoint& xi);

struct Tangency {
  Horocycle horocycle;
  Real time;   // u(time) is the tangency point
  Point point;
};

/// tangent_horocycle together with the tangency time and point.
Tangency tangency(const UnitTangent& u, const BoundaryPoint& xi);

/// Parabolic fixing `fixed` with translation length `length` on `horocycle`,
/// oriented so that `positive_for` is tangent to the resulting oriented pair.
Isometry make_parabolic(const BoundaryPoint& fixed, const Horocycle& horocycle,
                        const Real& length, const UnitTangent& positive_for);

struct TangencyData {
  UnitTangent vector;
  OrientedPair pair;
  Real tangent_time;
  Point tangent_point;
};

/// u tangent to the pair around xi with translation length `length`.
/// Throws DomainError when the tangency falls before time 0.
TangencyData make_tangency(const UnitTangent& u, const BoundaryPoint& xi, const Real& length);

/// Stable-horocycle neighbour of u: the vector based at arc length s from
/// u(0) on the horocycle through u(0) centered at u(+inf), same forward end.
UnitTangent stable_partner(const UnitTangent& u, const Real& s);

UnitTangent wind(const TangencyData& td);
Real winding_time(const TangencyData& td);

/// One grid time of the Key Proposition check.
struct KeyPropSample {
  Real t;
  Real shifted_min;   // min of the two shifted d1 branches
  bool p_branch;      // the p-translated branch achieved the min
  Real plain_u;       // d1(g_t v, g_t u)
  Real plain_pu;      // d1(g_t v, p g_t u)
  Real base_u;        // d(v(t), u(t))
  Real base_pu;       // d(v(t), p u(t))
};

/// Bounds are multiples of ell; `max_*` hold the observed maxima (zero when
/// the t-range is empty, flagged by the `has_*` fields).
struct KeyPropReport {
  Real ell;
  Real tau;
  Real t1;
  Real t1_wind;

  // Normalized frame: center inf, u(0) = i, p(z) = z + lambda, lambda > 0.
  Real lambda;
  Real b;
  Real b_wind;
  Real q1;
  Real q1_wind;
  Real dist_q;  // d(q, q')

  Real max_shifted;   // against 12 ell
  Real max_case_a;    // d1(g_t v, g_t u) on t <= t1 - 1, against 6 ell
  Real max_case_b;    // d1(g_t v, p g_t u) on t >= t1, against 8 ell
  Real max_case_c;    // d1(g_t v, g_t u) on t1 - 1 < t < t1, against 10 ell
  Real max_case1;     // d(v(t), u(t)) on 0 <= t <= t1, against 3 ell
  Real max_case2;     // d(v(t), p u(t)) on t >= t1, against 4 ell
  bool has_a = false, has_b = false, has_c = false, has_1 = false, has_2 = false;

  std::vector<KeyPropSample> samples;
};

KeyPropReport key_proposition_check(const TangencyData& td, const std::vector<Real>& grid);

}  // namespace horoflow
