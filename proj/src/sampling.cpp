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

#include "sampling.hpp"

#include <cmath>

namespace horoflow {

Point random_point(SplitMix64& rng) {
  const double x = rng.uniform(-3, 3);
  const double y = std::exp(rng.uniform(-2, 2));
  return {Real(x), Real(y)};
}

Isometry random_isometry(SplitMix64& rng) {
  for (;;) {
    const double a = rng.uniform(-3, 3);
    const double b = rng.uniform(-3, 3);
    const double c = rng.uniform(-3, 3);
    if (std::fabs(a) < 0.3) continue;
    return Isometry(Real(a), Real(b), Real(c), (Real(1) + Real(b) * Real(c)) / Real(a));
  }
}

BoundaryPoint random_boundary(SplitMix64& rng) {
  return BoundaryPoint::finite(Real(rng.uniform(-4, 4)));
}

UnitTangent random_tangent(SplitMix64& rng) {
  Point z = random_point(rng);
  if (rng.uniform() < 0.125) return {z, BoundaryPoint::infinity()};
  for (;;) {
    BoundaryPoint f = random_boundary(rng);
    if (f.value() != z.x) return {z, f};
  }
}

std::pair<UnitTangent, UnitTangent> random_stable_pair(SplitMix64& rng) {
  UnitTangent u = random_tangent(rng);
  const Real s(rng.uniform(-2, 2));
  UnitTangent v = stable_partner(u, s);
  return {std::move(u), std::move(v)};
}

std::pair<UnitTangent, UnitTangent> random_weak_stable_pair(SplitMix64& rng) {
  auto [u, v] = random_stable_pair(rng);
  const Real r(rng.uniform(-1, 1));
  return {std::move(u), geodesic_flow(v, r)};
}

TangencyData random_tangency(SplitMix64& rng) {
  const UnitTangent u = random_tangent(rng);
  const double t0 = rng.uniform(0, 3);
  const int side = rng.sign();
  const double ell = std::exp(rng.uniform(std::log(0.005), std::log(2.0)));
  // In the frame of u the center sits at +-e^t0 on the real axis.
  const Isometry g = standard_frame(u);
  const BoundaryPoint xi = g.inverse()(BoundaryPoint::finite(Real(side) * exp(Real(t0))));
  return make_tangency(u, xi, Real(ell));
}

}  // namespace horoflow
