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

// Test helpers shared by the suites.

#pragma once

#include <cmath>

#include "plane.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace horoflow::testing {

using horoflow::random_boundary;
using horoflow::random_isometry;
using horoflow::random_point;
using horoflow::random_tangent;

inline double rel_diff(const Real& a, const Real& b) {
  const Real scale = max(Real(1e-300), max(abs(a), abs(b)));
  return (abs(a - b) / scale).to_double();
}

/// Closeness on the boundary: relative gap for finite points, and a large
/// coordinate counts as close to inf.
inline bool boundary_close(const BoundaryPoint& a, const BoundaryPoint& b, double tol) {
  if (a.is_infinity() && b.is_infinity()) return true;
  if (a.is_infinity()) return abs(b.value()) > Real(1 / tol);
  if (b.is_infinity()) return abs(a.value()) > Real(1 / tol);
  return abs(a.value() - b.value()) <= Real(tol) * max(Real(1), abs(a.value()));
}

}  // namespace horoflow::testing
