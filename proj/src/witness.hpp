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

// Local product structure and the non-expansiveness witness: a vector y whose
// orbit stays 2 delta close to the orbit of u for all sampled times without
// lying on it.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "check.hpp"
#include "random.hpp"
#include "walpha.hpp"

namespace horoflow {

/// [w, u]: the vector on the stable horocycle of w whose backward endpoint is
/// u(-inf). Throws DomainError when w(+inf) = u(-inf).
UnitTangent local_product(const UnitTangent& w, const UnitTangent& u);

struct ProductModulus {
  double epsilon = 0;      // largest passing value on the schedule
  int tested = 0;          // schedule entries tried
  bool exhausted = false;  // no entry passed; epsilon is the smallest tried
};

/// Empirical modulus of continuity of the local product: the largest
/// eps_k = 4 * 0.85^k (k < 80) such that `samples` seeded random pairs with
/// d1(u, w) < eps_k all have d1(w, [w, u]) < delta and d1(u, [w, u]) < delta.
/// An estimate, not a certificate.
ProductModulus product_modulus(double delta, int samples, std::uint64_t seed);

/// A vector near u: basepoint offset and turning angle of size at most eps / 6
/// in the standard frame of u, which keeps d1(u, w) below eps for eps <= 1.
UnitTangent nearby_tangent(const UnitTangent& u, double eps, SplitMix64& rng);

struct WitnessConfig {
  double delta = 0.05;
  PairSequenceSpec spec;   // epsilon is overwritten by the pipeline
  double t_max = 25;
  int grid = 501;          // points on [-t_max, t_max]
  int word_length = 6;
  int modulus_samples = 200;
  std::uint64_t seed = 7;
};

struct WitnessReport {
  double delta = 0;
  double epsilon_product = 0;  // product modulus estimate
  double epsilon_used = 0;     // eps fed to the sequence
  bool modulus_exhausted = false;
  UnitTangent u;
  UnitTangent w;
  UnitTangent y;
  double t_min = 0;
  double t_max = 0;
  int grid = 0;
  std::size_t ball_size = 0;
  int word_length = 0;
  Real sup_d1;                 // quotient d1(g_t u, g_t y) over the grid
  Real orbit_separation;       // min |y(+inf) - gamma(inf)| over the ball
  Real busemann_residual;      // |B_{w(+inf)}(y(0), w(0))|
  bool passed = false;         // sup_d1 < 2 delta and separation > 1e-12
  std::vector<Check> checks;
  std::vector<std::pair<double, double>> profile;  // (t, quotient d1(g_t u, g_t y))
  std::string note;
};

/// Separation tolerance for the endpoint of y against the enumerated orbit.
double separation_tolerance();

/// Runs the full pipeline at the working precision.
WitnessReport build_witness(const WitnessConfig& cfg);

}  // namespace horoflow
