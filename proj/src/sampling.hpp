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

// Seeded random configurations for the property suites. Every draw goes
// through SplitMix64, so a seed pins the whole corpus.

#pragma once

#include <utility>

#include "horocycle.hpp"
#include "random.hpp"

namespace horoflow {

/// x uniform in [-3, 3], log y uniform in [-2, 2].
Point random_point(SplitMix64& rng);
/// Entries a, b, c uniform in [-3, 3] with |a| >= 0.3; d solves ad - bc = 1.
Isometry random_isometry(SplitMix64& rng);
/// Uniform in [-4, 4].
BoundaryPoint random_boundary(SplitMix64& rng);
/// Random basepoint; forward endpoint at inf with probability 1/8.
UnitTangent random_tangent(SplitMix64& rng);

/// (u, v) with v on the stable horocycle of u, arc offset in [-2, 2].
std::pair<UnitTangent, UnitTangent> random_stable_pair(SplitMix64& rng);
/// (u, v) with v on the weak-stable leaf of u: a stable pair flowed by a
/// time in [-1, 1].
std::pair<UnitTangent, UnitTangent> random_weak_stable_pair(SplitMix64& rng);

/// A random vector tangent to a random oriented pair: tangency time uniform
/// in [0, 3], translation length log-uniform in [0.005, 2].
TangencyData random_tangency(SplitMix64& rng);

}  // namespace horoflow
