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

#include "witness.hpp"

#include <cmath>

#include "sampling.hpp"

namespace horoflow {

namespace {

constexpr int kSchedule = 80;
constexpr int kMaxAttempts = 64;

const char* kLocalProduct = "Lemma cont_localprod";
const char* kDistanceLp = "Prop. distancelp";
const char* kTheorem1 = "Theorem 1";
const char* kTheorem2 = "Theorem 2";
const char* kCor1 = "Corollary cor1";
const char* kDecreasing = "Lemma decreasing";

// An isometry sending eta to 0 and xi to inf.
Isometry chart(const BoundaryPoint& eta, const BoundaryPoint& xi) {
  const Isometry c = Isometry::to_infinity(xi);
  const BoundaryPoint e = c(eta);
  if (e.is_infinity()) throw DomainError("local product of vectors with w(+inf) = u(-inf)");
  return Isometry::translation(-e.value()) * c;
}

}  // namespace

UnitTangent local_product(const UnitTangent& w, const UnitTangent& u) {
  const BoundaryPoint eta = u.backward();
  if (eta == w.forward()) throw DomainError("local product of vectors with w(+inf) = u(-inf)");
  const Isometry g = chart(eta, w.forward());
  const Point z(Real(0), g(w.base()).y);
  return {g.inverse()(z), w.forward()};
}

UnitTangent nearby_tangent(const UnitTangent& u, double eps, SplitMix64& rng) {
  const Isometry frame = standard_frame(u);
  const Real a(rng.uniform(-eps, eps) / 6);
  const Real y = exp(Real(rng.uniform(-eps, eps) / 6));
  const double theta = rng.uniform(-eps, eps) / 6;
  if (theta == 0.0) return frame.inverse()(UnitTangent(Point(a, y), BoundaryPoint::infinity()));
  // forward endpoint of the geodesic leaving (a, y) at angle theta from vertical
  const Real fwd = a + y / Real(std::tan(theta / 2));
  return frame.inverse()(UnitTangent(Point(a, y), BoundaryPoint::finite(fwd)));
}

ProductModulus product_modulus(double delta, int samples, std::uint64_t seed) {
  if (!(delta > 0)) throw DomainError("delta must be positive");
  if (samples < 1) throw DomainError("sample count must be positive");
  const Real d(delta);
  ProductModulus out;
  for (int k = 0; k < kSchedule; ++k) {
    const double eps = 4.0 * std::pow(0.85, k);
    out.tested = k + 1;
    out.epsilon = eps;
    SplitMix64 rng = SplitMix64(seed).fork(static_cast<std::uint64_t>(k));
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
      const UnitTangent u = random_tangent(rng);
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const UnitTangent w = nearby_tangent(u, eps, rng);
        if (!(d1(u, w) < Real(eps))) continue;
        if (w.forward() == u.backward()) continue;
        const UnitTangent z = local_product(w, u);
        ok = d1(w, z) < d && d1(u, z) < d;
        break;
      }
    }
    if (ok) return out;
  }
  out.exhausted = true;
  return out;
}

double separation_tolerance() { return 1e-12; }

WitnessReport build_witness(const WitnessConfig& cfg) {
  if (!(cfg.delta > 0)) throw DomainError("delta must be positive");
  if (!(cfg.t_max > 0)) throw DomainError("t_max must be positive");
  if (cfg.grid < 3) throw DomainError("witness grid needs at least three points");
  if (cfg.word_length < 1) throw DomainError("word length must be positive");

  const ProductModulus pm = product_modulus(cfg.delta, cfg.modulus_samples, cfg.seed);
  PairSequenceSpec spec = cfg.spec;
  const double budget = std::min(pm.epsilon, 0.99 * cfg.delta);
  spec.epsilon = budget / 3;
  while (Real(3) * Real(spec.epsilon) > Real(budget)) spec.epsilon = std::nextafter(spec.epsilon, 0.0);
  const WindingSequence ws = iterate_winding(build_pair_sequence(spec));
  const FuchsianWordBall ball = letter_ball(ws, cfg.word_length);

  const UnitTangent& u = ws.pairs.base;
  const UnitTangent& w = ws.limit.w;
  const UnitTangent y = local_product(w, u);

  WitnessReport rep{cfg.delta,
                    pm.epsilon,
                    spec.epsilon,
                    pm.exhausted,
                    u,
                    w,
                    y,
                    -cfg.t_max,
                    cfg.t_max,
                    cfg.grid,
                    ball.size(),
                    cfg.word_length,
                    Real(0),
                    Real(0),
                    Real(0),
                    false,
                    {},
                    {},
                    "reparametrization taken as the identity; orbit separation is certified "
                    "only within the word ball of radius " +
                        std::to_string(cfg.word_length)};

  const Real delta(cfg.delta);
  const Real eps_p(pm.epsilon);
  const Real slack(scaled_tolerance(1e-9));
  std::vector<Check>& out = rep.checks;

  rep.busemann_residual = abs(busemann(w.forward(), y.base(), w.base()));
  out.push_back(make_check("y_on_stable_horocycle", kTheorem1, rep.busemann_residual,
                           Relation::Lt, Real(1e-20)));
  out.push_back(make_check("y_forward_matches_w", kTheorem1,
                           y.forward() == w.forward() ? Real(0) : Real(1), Relation::Le, Real(0)));
  out.push_back(make_check("y_backward_matches_u", kTheorem1,
                           abs(y.backward().value() - u.backward().value()), Relation::Le,
                           Real(scaled_tolerance(1e-12))));
  out.push_back(make_check("cor1_budget", kCor1, Real(3) * Real(spec.epsilon), Relation::Le,
                           Real(budget)));
  out.push_back(make_check("w_near_u", kDistanceLp, d1(u, w), Relation::Lt, eps_p));

  // The two half-line terms and the mixed term on one symmetric grid.
  Real fwd_max(0);
  Real bwd_max(0);
  Real fwd_rise(0);
  Real bwd_rise(0);
  Real triangle_excess(-1);
  Real split_max(0);
  Real prev_fwd(0);
  Real prev_bwd(0);
  bool have_fwd = false;
  for (int j = 0; j < cfg.grid; ++j) {
    const Real t = Real(-cfg.t_max) + Real(2 * cfg.t_max) * Real(j) / Real(cfg.grid - 1);
    const UnitTangent gu = geodesic_flow(u, t);
    const UnitTangent gy = geodesic_flow(y, t);
    const Real mixed = d1_quotient(gu, gy, ball);
    rep.sup_d1 = max(rep.sup_d1, mixed);
    rep.profile.emplace_back(t.to_double(), mixed.to_double());
    if (t.sign() <= 0) {
      const Real b = d1(gu, gy);
      bwd_max = max(bwd_max, b);
      if (j > 0) bwd_rise = max(bwd_rise, prev_bwd - b);
      prev_bwd = b;
    }
    if (t.sign() >= 0) {
      const UnitTangent gw = geodesic_flow(w, t);
      const Real f = d1(gw, gy);
      fwd_max = max(fwd_max, f);
      if (have_fwd) fwd_rise = max(fwd_rise, f - prev_fwd);
      prev_fwd = f;
      have_fwd = true;
      const Real split = d1_quotient(gu, gw, ball) + f;
      triangle_excess = max(triangle_excess, mixed - split);
      split_max = max(split_max, split);
    }
  }
  out.push_back(make_check("forward_shadowing", kDistanceLp, fwd_max, Relation::Lt, delta,
                           "max over t >= 0 of d1(g_t w, g_t y)"));
  out.push_back(make_check("backward_shadowing", kDistanceLp, bwd_max, Relation::Lt, delta,
                           "max over t <= 0 of d1(g_t u, g_t y)"));
  out.push_back(make_check("forward_monotone", kDecreasing, fwd_rise, Relation::Le, slack));
  out.push_back(make_check("backward_monotone", kDecreasing, bwd_rise, Relation::Le, slack));
  out.push_back(make_check("triangle_bound", kTheorem1, split_max, Relation::Lt, eps_p + delta,
                           "max over t >= 0 of quotient d1(u, w) + d1(w, y)"));
  out.push_back(make_check("triangle_assembly", kTheorem1, triangle_excess, Relation::Le, slack,
                           "quotient d1(u, y) minus d1(u, w) + d1(w, y)"));
  out.push_back(make_check("local_product_modulus", kLocalProduct,
                           pm.exhausted ? Real(1) : Real(0), Relation::Le, Real(0),
                           "schedule entries tried: " + std::to_string(pm.tested)));

  rep.orbit_separation = orbit_gap_to_infinity(y.forward().value(), ball).value;
  out.push_back(make_check("sup_d1", kTheorem1, rep.sup_d1, Relation::Lt, Real(2) * delta));
  out.push_back(make_check("orbit_separation", kTheorem2, rep.orbit_separation, Relation::Gt,
                           Real(separation_tolerance())));
  rep.passed = rep.sup_d1 < Real(2) * delta && rep.orbit_separation > Real(separation_tolerance());
  return rep;
}

}  // namespace horoflow
