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

#include <string>

#include "doctest.h"
#include "support.hpp"
#include "walpha.hpp"

using namespace horoflow;
using horoflow::testing::rel_diff;

namespace {

const BoundaryPoint kInf = BoundaryPoint::infinity();

PairSequenceSpec random_spec(SplitMix64& rng) {
  PairSequenceSpec s;
  s.epsilon = std::exp(rng.uniform(std::log(0.01), std::log(0.5)));
  s.depth = static_cast<int>(rng.uniform(0, 8.999));
  s.spacing = rng.uniform(1.8, 3.0);
  s.margin = rng.uniform(0.1, 0.99);
  s.first_tangency = rng.uniform(0, 8);
  return s;
}

std::string failures(const std::vector<Check>& checks) {
  std::string out;
  for (const Check& c : checks) {
    if (!c.passed) out += c.name + " (" + std::to_string(c.observed) + " vs " + std::to_string(c.bound) + ") ";
  }
  return out;
}

}  // namespace

TEST_CASE("pair sequence: lengths for eps 0.1, depth 3") {
  PrecisionScope p(256);
  PairSequenceSpec s;
  s.depth = 3;
  const PairSequence ps = build_pair_sequence(s);
  REQUIRE(ps.lengths.size() == 4);
  const double eps = 0.1;
  CHECK(rel_diff(ps.lengths[0], Real(0.9) * Real(eps) / Real(12)) < 1e-70);
  CHECK(rel_diff(ps.lengths[1], Real(0.9) * Real(eps) / Real(48)) < 1e-70);
  CHECK(rel_diff(ps.lengths[2], Real(0.9) * Real(eps) / Real(192)) < 1e-70);
  CHECK(rel_diff(ps.lengths[3], Real(0.9) * Real(eps) / Real(768)) < 1e-70);
}

TEST_CASE("pair sequence: spec validation") {
  PairSequenceSpec s;
  CHECK(disjoint_spacing().to_double() == doctest::Approx(1.762747174));
  s.spacing = 1.76;
  CHECK_THROWS_AS(build_pair_sequence(s), DomainError);
  s.spacing = 1.77;
  CHECK_NOTHROW(build_pair_sequence(s));
  s = {};
  s.margin = 1.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.margin = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.epsilon = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.depth = 9;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.depth = -1;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.first_tangency = -0.5;
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("pair sequence: euclidean circles tangent to both axes") {
  PrecisionScope p(256);
  SplitMix64 rng(301);
  for (int k = 0; k < 20; ++k) {
    const PairSequenceSpec s = random_spec(rng);
    const PairSequence ps = build_pair_sequence(s);
    REQUIRE(static_cast<int>(ps.pairs.size()) == s.depth + 1);
    for (int n = 0; n <= s.depth; ++n) {
      const Real& x = ps.fixed_points[n];
      const OrientedPair& pair = ps.pairs[n];
      CHECK(rel_diff(x, exp(Real(n) * Real(s.spacing) + Real(s.first_tangency))) < 1e-70);
      CHECK(pair.horocycle.center() == BoundaryPoint::finite(x));
      CHECK(rel_diff(pair.horocycle.diameter(), Real(2) * x) < 1e-70);
      CHECK_NOTHROW(pair.validate(1e-30));
      // u = (i, inf) touches it at u(t_n) = i e^{t_n}.
      const Tangency tg = tangency(ps.base, pair.horocycle.center());
      CHECK(abs(tg.time - ps.times[n]).to_double() < 1e-60);
      CHECK(rel_diff(translation_length(pair), ps.lengths[n]) < 1e-60);
      // Positive orientation: rebuilding from u reproduces the letter.
      CHECK(make_parabolic(pair.horocycle.center(), pair.horocycle, ps.lengths[n], ps.base)
                .projectively_equal(pair.parabolic, 1e-60));
      if (n > 0) CHECK(ps.fixed_points[n - 1] < x);
    }
  }
}

TEST_CASE("pair sequence: depth 0 has one pair touched at t_0") {
  PrecisionScope p(256);
  PairSequenceSpec s;
  s.depth = 0;
  const PairSequence ps = build_pair_sequence(s);
  REQUIRE(ps.pairs.size() == 1);
  CHECK(abs(tangency(ps.base, ps.pairs[0].horocycle.center()).time - Real(6)).to_double() <
        1e-60);
  const WindingSequence ws = iterate_winding(ps);
  CHECK(ws.shrunk_lengths.empty());
  CHECK(failures(verify_sequence(ws)) == "");
}

TEST_CASE("winding sequence: eps 0.1 depth 6 at 256 bits") {
  PrecisionScope p(256);
  PairSequenceSpec s;
  s.depth = 6;
  const WindingSequence ws = iterate_winding(build_pair_sequence(s));
  const std::vector<Check> checks = verify_sequence(ws);
  CHECK(failures(checks) == "");

  const Real eps(0.1);
  Real sum(0);
  for (int n = 0; n <= 6; ++n) sum += ws.pairs.lengths[n];
  CHECK(abs(ws.times[6]) <= sum);
  CHECK(sum <= eps / Real(9));
  for (int n = 0; n < 6; ++n) {
    CHECK(abs(ws.times[n + 1] - ws.times[n]) <= ws.pairs.lengths[n + 1]);
    CHECK(ws.shrunk_lengths[n] <= ws.pairs.lengths[n + 1]);
    CHECK(ws.vectors[n + 1].forward().value() < ws.vectors[n].forward().value());
  }
  CHECK(ws.vectors[6].forward().value().sign() > 0);
  CHECK(ws.max_base_residual.to_double() < 1e-30);
}

TEST_CASE("winding sequence: vectors and times from independent formulas") {
  PrecisionScope p(256);
  SplitMix64 rng(302);
  for (int k = 0; k < 20; ++k) {
    const PairSequenceSpec s = random_spec(rng);
    const WindingSequence ws = iterate_winding(build_pair_sequence(s));
    INFO("spec eps " << s.epsilon << " depth " << s.depth << " spacing " << s.spacing
                     << " t0 " << s.first_tangency);
    CHECK(failures(verify_sequence(ws)) == "");

    // v_0 is the winding of u around the first pair.
    const TangencyData td0{ws.pairs.base, ws.pairs.pairs[0], ws.pairs.times[0],
                           Point(Real(0), ws.pairs.fixed_points[0])};
    CHECK(wind(td0).forward() == ws.vectors[0].forward());
    CHECK(rel_diff(winding_time(td0), ws.times[0]) < 1e-60);

    Isometry beta = Isometry::identity();
    Real tau_sum = ws.times[0];
    for (int n = 0; n <= s.depth; ++n) {
      beta = beta * ws.letters[n];
      CHECK(ws.vectors[n].base().x.is_zero());
      CHECK(ws.vectors[n].base().y == Real(1));
      CHECK(ws.vectors[n].forward() == ws.products[n](kInf));
      CHECK(rel_diff(ws.vectors[n].forward().value(), beta(kInf).value()) < 1e-60);
      // r_n from the product matrix instead of the point iteration.
      const Point z = beta.inverse()(Point::i());
      CHECK(abs(ws.times[n] + log(z.y)).to_double() < 1e-60);
      CHECK(abs(ws.times[n] - busemann(kInf, z, Point::i())).to_double() < 1e-60);
      if (n > 0) {
        tau_sum += ws.winding_times[n - 1];
        CHECK(abs(tau_sum - ws.times[n]).to_double() < 1e-60);
      }
      // g_{r_n} beta_n^-1 v_n sits on the stable horocycle of u.
      const UnitTangent back = geodesic_flow(beta.inverse()(ws.vectors[n]), ws.times[n]);
      CHECK(horoflow::testing::boundary_close(back.forward(), kInf, 1e-40));
      CHECK(abs(busemann(kInf, back.base(), Point::i())).to_double() < 1e-30);
    }
  }
}

TEST_CASE("winding sequence: pulled basepoints lie in R_n") {
  PrecisionScope p(256);
  SplitMix64 rng(303);
  for (int k = 0; k < 20; ++k) {
    const PairSequenceSpec s = random_spec(rng);
    const WindingSequence ws = iterate_winding(build_pair_sequence(s));
    for (int n = 0; n <= s.depth; ++n) {
      const Point& z = ws.pulled_bases[n];
      CHECK(in_closed_region(z, ws.pairs.fixed_points[n]));
      CHECK(ws.in_region[n]);
      const Real next = s.fixed_point(n + 1);
      CHECK(z.x.sign() > 0);
      CHECK(z.x < next);
      CHECK_FALSE(Horocycle::with_diameter(next, Real(2) * next).in_open_horoball(z));
    }
    for (int n = 0; n < s.depth; ++n) {
      CHECK(ws.meets_next[n]);
      CHECK(ws.oriented[n]);
      CHECK(ws.tangency_times[n].sign() >= 0);
    }
  }
  CHECK(in_closed_region(Point(Real(0), Real(1)), Real(5)));
  CHECK_FALSE(in_closed_region(Point(Real(5), Real(1)), Real(5)));
  CHECK_FALSE(in_closed_region(Point(Real(-0.1), Real(1)), Real(5)));
  CHECK_FALSE(in_closed_region(Point(Real(1), Real(6)), Real(5)));
}

TEST_CASE("winding sequence: limit against a long product at higher precision") {
  PairSequenceSpec s;
  s.depth = 4;
  std::string xi_ref;
  {
    PrecisionScope p(512);
    Isometry beta = Isometry::identity();
    for (int n = 0; n < 80; ++n) beta = beta * s.pair(n).parabolic;
    xi_ref = beta(kInf).value().str();
  }
  PrecisionScope p(256);
  const WindingSequence ws = iterate_winding(build_pair_sequence(s));
  REQUIRE(ws.limit.converged);
  CHECK(rel_diff(ws.limit.forward.value(), Real::parse(xi_ref)) < 1e-60);
  const Real budget = Real(0.9) * Real(0.1) * pow(Real(4), -4) / Real(36);
  CHECK(abs(ws.limit.time - ws.limit_time) <= budget);
  CHECK(ws.limit.forward.value() < ws.limit_forward.value());
  CHECK(abs(ws.limit.time) <= Real(0.1) / Real(9));
}

TEST_CASE("xi: beyond x_0 and nested separation") {
  PrecisionScope p(256);
  SplitMix64 rng(304);
  for (int k = 0; k < 30; ++k) {
    const PairSequenceSpec s = random_spec(rng);
    const WindingSequence ws = iterate_winding(build_pair_sequence(s));
    CHECK(failures(verify_xi(ws)) == "");
    const Real xi = xi_of_sequence(ws.letters);
    CHECK(xi > ws.pairs.fixed_points[0]);
    Real z = xi;
    for (int n = 1; n <= s.depth; ++n) {
      z = ws.letters[n - 1].inverse()(BoundaryPoint::finite(z)).value();
      CHECK(z > ws.pairs.fixed_points[n]);
    }
  }
}

TEST_CASE("xi: different first fixed points give different endpoints") {
  PrecisionScope p(256);
  PairSequenceSpec a;
  PairSequenceSpec b;
  b.first_tangency = 7.0;
  const Real xa = xi_of_sequence(iterate_winding(build_pair_sequence(a)).letters);
  const Real xb = xi_of_sequence(iterate_winding(build_pair_sequence(b)).letters);
  CHECK(xa > exp(Real(6)));
  CHECK(xb > exp(Real(7)));
  CHECK(rel_diff(xa, xb) > 1e-3);
}

TEST_CASE("Pm table and cor1 for eps 0.1, depth 4") {
  PrecisionScope p(256);
  PairSequenceSpec s;
  const WindingSequence ws = iterate_winding(build_pair_sequence(s));
  const FuchsianWordBall ball = letter_ball(ws, s.depth + 2);

  const std::vector<Real> times = pm_times(ws);
  REQUIRE(times.size() == 6);
  CHECK(times[0] == Real(0.1) / Real(9));
  for (std::size_t l = 1; l < times.size(); ++l) CHECK(times[l] >= times[l - 1]);

  const PmReport pm = verify_pm(ws, 4, 20, 25, ball);
  CHECK(pm.cells.size() == 25);
  CHECK(failures(pm.cells) == "");

  // The first vector stays within 12 l_0 from t = 0 on.
  const Real twelve = Real(12) * ws.pairs.lengths[0];
  for (int j = 0; j <= 50; ++j) {
    const Real t = Real(j) / Real(2);
    CHECK(d1_quotient(geodesic_flow(ws.vectors[0], t + ws.times[0]),
                      geodesic_flow(ws.pairs.base, t), ball) <= twelve);
  }
  CHECK(twelve < Real(0.1));

  const Cor1Report c1 = verify_cor1(ws, ws.w_alpha, "surrogate", 25, 500, ball);
  CHECK(failures(c1.checks) == "");
  CHECK(c1.sup <= Real(0.3));
  for (const auto& [t, v] : c1.profile) {
    if (Real(t) >= times[3]) CHECK(v <= 0.1 / 4);
  }

  const Cor1Report lim = verify_cor1(ws, ws.limit.w, "limit", ball_horizon(ws).to_double(), 300, ball);
  CHECK(failures(lim.checks) == "");
}

TEST_CASE("Pm: 53-bit depth 8 still builds and verifies") {
  PairSequenceSpec s;
  s.depth = 8;
  const WindingSequence ws = iterate_winding(build_pair_sequence(s));
  CHECK(failures(verify_sequence(ws)) == "");
  CHECK(ws.max_drift.to_double() < tol_det());
}
