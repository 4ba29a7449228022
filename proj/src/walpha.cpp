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

#include "walpha.hpp"

#include <cmath>

namespace horoflow {

namespace {

constexpr int kMaxDepth = 8;

const char* kLemmaVectors = "Lemma lemma_vectors";
const char* kConvergence = "Prop. convergence_winding_time";
const char* kShrink = "Eq. shrink_horo";
const char* kWindingSeq = "Eq. winding_time_seq";
const char* kCusp = "Prop. cusprecurrent";
const char* kPm = "Eq. Pm";
const char* kCor1 = "Corollary cor1";
const char* kCor2 = "Corollary cor2";

std::string indexed(const std::string& stem, int n) { return stem + "[" + std::to_string(n) + "]"; }

std::string indexed(const std::string& stem, int n, int l) {
  return stem + "[" + std::to_string(n) + "," + std::to_string(l) + "]";
}

// |z - (x + ix)|^2 - x^2: negative inside the open disc.
Real disc_excess(const Point& z, const Real& x) {
  return square(z.x - x) + square(z.y - x) - square(x);
}

Real pow2(int k) { return pow(Real(2), k); }

// sum_{k <= n} 2^-k
Real geometric(int n) { return Real(2) - pow(Real(2), -n); }

// Working-precision convergence threshold for the limit iteration.
Real limit_tolerance() { return pow(Real(2), -static_cast<long>(working_precision()) + 8); }

ConvergedLimit converge(const PairSequenceSpec& spec, const Point& pulled, const Real& r_n) {
  const int first = spec.depth + 1;
  const int cap = static_cast<int>(working_precision()) + 64;
  const Real tol = limit_tolerance();

  std::vector<Isometry> letters;
  for (int n = 0; n < first; ++n) letters.push_back(spec.pair(n).parabolic);

  ConvergedLimit out{BoundaryPoint::finite(xi_of_sequence(letters)), r_n,
                     UnitTangent(Point::i(), BoundaryPoint::infinity()), first, false};
  Real xi = out.forward.value();
  bool xi_done = false;
  bool r_done = false;
  Point z = pulled;
  Real r = r_n;
  int settled_xi = 0;
  int settled_r = 0;

  for (int m = first; m < cap && !(xi_done && r_done); ++m) {
    letters.push_back(spec.pair(m).parabolic);
    if (!xi_done) {
      const Real next = xi_of_sequence(letters);
      settled_xi = abs(next - xi) <= tol * abs(next) ? settled_xi + 1 : 0;
      xi = next;
      xi_done = settled_xi >= 2;
    }
    if (!r_done) {
      z = letters.back().inverse()(z);
      const Real next = -log(z.y);
      settled_r = abs(next - r) <= tol * max(Real(1), abs(next)) ? settled_r + 1 : 0;
      r = next;
      r_done = settled_r >= 2;
    }
    out.letters = m + 1;
  }
  out.converged = xi_done && r_done;
  out.forward = BoundaryPoint::finite(xi);
  out.time = r;
  out.w = geodesic_flow(UnitTangent(Point::i(), out.forward), r);
  return out;
}

}  // namespace

Real disjoint_spacing() { return log(Real(3) + Real(2) * sqrt(Real(2))); }

void PairSequenceSpec::validate() const {
  if (!std::isfinite(epsilon) || epsilon <= 0) throw DomainError("epsilon must be positive");
  if (depth < 0) throw DomainError("depth must be non-negative");
  if (depth > kMaxDepth) {
    throw DomainError("depth " + std::to_string(depth) + " exceeds the cap of " +
                      std::to_string(kMaxDepth));
  }
  if (!std::isfinite(margin) || margin <= 0 || margin >= 1) {
    throw DomainError("margin factor must lie in (0, 1)");
  }
  if (!std::isfinite(first_tangency) || first_tangency < 0) {
    throw DomainError("first tangency time must be non-negative");
  }
  if (!std::isfinite(spacing) || Real(spacing) <= disjoint_spacing()) {
    throw DomainError("spacing " + std::to_string(spacing) +
                      " does not exceed log(3 + 2 sqrt 2): horoballs overlap");
  }
}

Real PairSequenceSpec::tangency_time(int n) const {
  return Real(n) * Real(spacing) + Real(first_tangency);
}

Real PairSequenceSpec::fixed_point(int n) const { return exp(tangency_time(n)); }

Real PairSequenceSpec::length(int n) const {
  return Real(margin) * Real(epsilon) / (Real(12) * pow(Real(4), n));
}

OrientedPair PairSequenceSpec::pair(int n) const {
  const Real x = fixed_point(n);
  Horocycle h = Horocycle::with_diameter(x, Real(2) * x);
  Isometry p = make_parabolic(BoundaryPoint::finite(x), h, length(n),
                              UnitTangent(Point::i(), BoundaryPoint::infinity()));
  return {std::move(h), std::move(p)};
}

PairSequence build_pair_sequence(const PairSequenceSpec& spec) {
  spec.validate();
  PairSequence ps{spec, UnitTangent(Point::i(), BoundaryPoint::infinity()), {}, {}, {}, {}};
  for (int n = 0; n <= spec.depth; ++n) {
    ps.times.push_back(spec.tangency_time(n));
    ps.fixed_points.push_back(spec.fixed_point(n));
    ps.lengths.push_back(spec.length(n));
    ps.pairs.push_back(spec.pair(n));
  }
  return ps;
}

Real xi_of_sequence(const std::vector<Isometry>& letters) {
  BoundaryPoint z = BoundaryPoint::infinity();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) z = (*it)(z);
  return z.value();
}

bool in_closed_region(const Point& z, const Real& x) {
  return z.x.sign() >= 0 && z.x <= x && z.y <= x && disc_excess(z, x).sign() >= 0;
}

WindingSequence iterate_winding(const PairSequence& ps) {
  const PairSequenceSpec& spec = ps.spec;
  const int depth = spec.depth;
  const BoundaryPoint inf = BoundaryPoint::infinity();

  WindingSequence ws{ps,
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     Real(0),
                     Real(0),
                     inf,
                     Real(0),
                     UnitTangent(Point::i(), inf),
                     ConvergedLimit{inf, Real(0), UnitTangent(Point::i(), inf), 0, false}};

  Point z = Point::i();
  for (int n = 0; n <= depth; ++n) {
    const Isometry& alpha = ps.pairs[n].parabolic;
    Isometry beta = n == 0 ? alpha : ws.products.back() * alpha;
    const Real drift = beta.determinant_drift();
    if (drift > Real(tol_det())) {
      throw PrecisionExhausted("determinant of beta_" + std::to_string(n) + " drifted by " +
                                   drift.str(6) + " at " + std::to_string(working_precision()) +
                                   " bits",
                               n - 1);
    }
    ws.max_drift = max(ws.max_drift, drift);
    z = alpha.inverse()(z);

    const Real x_next = spec.fixed_point(n + 1);
    ws.in_region.push_back(z.x.sign() > 0 && z.x < x_next && disc_excess(z, x_next).sign() >= 0);
    ws.letters.push_back(alpha);
    ws.vectors.emplace_back(Point::i(), beta(inf));
    ws.times.push_back(-log(z.y));
    ws.pulled_bases.push_back(z);
    ws.max_base_residual = max(ws.max_base_residual, hyp_distance(beta(z), Point::i()));
    ws.products.push_back(std::move(beta));
  }

  for (int n = 0; n < depth; ++n) {
    const Point& zn = ws.pulled_bases[n];
    const Real& x = ps.fixed_points[n + 1];
    const UnitTangent ray(zn, inf);

    // The vertical ray through zn meets the disc about x + ix of radius x.
    const Real dx = zn.x - x;
    bool meets = zn.x.sign() > 0 && zn.x < Real(2) * x;
    if (meets) meets = zn.y < x + sqrt(square(x) - square(dx));
    ws.meets_next.push_back(meets);

    Tangency tg = tangency(ray, BoundaryPoint::finite(x));
    const TangencyData td{ray, OrientedPair{tg.horocycle, ps.pairs[n + 1].parabolic}, tg.time,
                          tg.point};
    const Real shrunk = translation_length(td.pair);
    bool oriented = false;
    try {
      oriented = make_parabolic(BoundaryPoint::finite(x), tg.horocycle, shrunk, ray)
                     .projectively_equal(td.pair.parabolic, tol_trace());
    } catch (const DomainError&) {
      oriented = false;
    }
    ws.oriented.push_back(oriented);
    ws.shrunk_lengths.push_back(shrunk);
    ws.winding_times.push_back(winding_time(td));
    ws.tangency_times.push_back(tg.time);

    const UnitTangent pushed = ws.products[n](wind(td));
    ws.max_base_residual = max(ws.max_base_residual, hyp_distance(pushed.base(), Point::i()));
  }

  ws.limit_forward = ws.products.back()(inf);
  ws.limit_time = ws.times.back();
  ws.w_alpha = geodesic_flow(UnitTangent(Point::i(), ws.limit_forward), ws.limit_time);
  ws.limit = converge(spec, ws.pulled_bases.back(), ws.times.back());
  return ws;
}

FuchsianWordBall letter_ball(const WindingSequence& ws, int max_word_length) {
  return FuchsianWordBall(ws.letters, max_word_length);
}

std::vector<Check> verify_sequence(const WindingSequence& ws) {
  const PairSequence& ps = ws.pairs;
  const PairSequenceSpec& spec = ps.spec;
  const int depth = spec.depth;
  const Real tiny(scaled_tolerance(1e-9));
  std::vector<Check> out;

  for (int n = 0; n <= depth; ++n) {
    out.push_back(make_check(indexed("pair_fixed_point", n), kCusp,
                             abs(ps.fixed_points[n] - exp(ps.times[n])), Relation::Le, tiny));
    if (n > 0) {
      out.push_back(make_check(indexed("pair_disjoint", n), kCusp,
                               exp(ps.times[n] - ps.times[n - 1]), Relation::Gt,
                               Real(3) + Real(2) * sqrt(Real(2))));
    }
    out.push_back(make_check(indexed("sigma_condition", n), kPm, ps.lengths[n], Relation::Lt,
                             Real(spec.epsilon) / (Real(12) * pow(Real(4), n))));
  }

  Real partial(0);
  for (int n = 0; n <= depth; ++n) {
    partial += ps.lengths[n];
    out.push_back(make_check(indexed("r_bound", n), kConvergence, abs(ws.times[n]), Relation::Le,
                             partial));
    const Point& z = ws.pulled_bases[n];
    out.push_back(make_check(indexed("region_next", n), kLemmaVectors,
                             ws.in_region[n] ? Real(0) : Real(1), Relation::Le, Real(0),
                             "0 < Re < x_{n+1}, outside the open horoball of H_{n+1}"));
    out.push_back(make_check(indexed("region_R", n), kLemmaVectors,
                             in_closed_region(z, ps.fixed_points[n]) ? Real(0) : Real(1),
                             Relation::Le, Real(0)));
    // g_{r_n} beta_n^-1 v_n is based at Re z + i and points at inf.
    const UnitTangent pulled(z, BoundaryPoint::infinity());
    const UnitTangent flowed = geodesic_flow(pulled, ws.times[n]);
    out.push_back(make_check(indexed("stable_level", n), kLemmaVectors,
                             abs(busemann(BoundaryPoint::infinity(), flowed.base(), Point::i())),
                             Relation::Le, tiny));
  }
  out.push_back(make_check("base_residual", kLemmaVectors, ws.max_base_residual, Relation::Le,
                           tiny));

  for (int n = 0; n < depth; ++n) {
    const Real step = abs(ws.times[n + 1] - ws.times[n]);
    out.push_back(make_check(indexed("r_increment", n), kConvergence, step, Relation::Le,
                             ps.lengths[n + 1]));
    out.push_back(make_check(indexed("r_increment_shrunk", n), kConvergence, step, Relation::Le,
                             ws.shrunk_lengths[n]));
    out.push_back(make_check(indexed("shrink_horo", n), kShrink, ws.shrunk_lengths[n],
                             Relation::Le, ps.lengths[n + 1]));
    out.push_back(make_check(indexed("winding_time", n), kWindingSeq,
                             abs(ws.winding_times[n] - (ws.times[n + 1] - ws.times[n])),
                             Relation::Le, tiny));
    out.push_back(make_check(indexed("ray_meets_next", n), kLemmaVectors,
                             ws.meets_next[n] ? Real(0) : Real(1), Relation::Le, Real(0)));
    out.push_back(make_check(indexed("tangency_ahead", n), kLemmaVectors, ws.tangency_times[n],
                             Relation::Ge, Real(0)));
    out.push_back(make_check(indexed("positive_orientation", n), kLemmaVectors,
                             ws.oriented[n] ? Real(0) : Real(1), Relation::Le, Real(0)));
    const Real here = ws.vectors[n].forward().value();
    const Real next = ws.vectors[n + 1].forward().value();
    out.push_back(make_check(indexed("endpoint_decreasing", n), kLemmaVectors, next,
                             Relation::Lt, here));
  }
  out.push_back(make_check("endpoint_positive", kLemmaVectors,
                           ws.vectors.back().forward().value(), Relation::Gt, Real(0)));

  for (int m = 1; m <= depth; ++m) {
    for (int n = 0; n < m; ++n) {
      Real budget(0);
      for (int i = n + 1; i <= m; ++i) budget += ps.lengths[i];
      out.push_back(make_check(indexed("cauchy", n, m), kConvergence,
                               abs(ws.times[m] - ws.times[n]), Relation::Le, budget));
    }
  }

  // Limit against the depth-N surrogate.
  // sum_{i > N} l_i
  const Real tail = Real(spec.margin) * Real(spec.epsilon) * pow(Real(4), -depth) / Real(36);
  out.push_back(make_check("limit_converged", kConvergence,
                           ws.limit.converged ? Real(0) : Real(1), Relation::Le, Real(0),
                           std::to_string(ws.limit.letters) + " letters"));
  out.push_back(make_check("limit_time_budget", kConvergence,
                           abs(ws.limit.time - ws.limit_time), Relation::Le, tail));
  // The tail alpha_{N+1} alpha_{N+2} ... (inf) lies beyond x_{N+1}, so the
  // limit endpoint sits in [beta_N(x_{N+1}), beta_{N+1}(inf)].
  std::vector<Isometry> longer = ws.letters;
  longer.push_back(spec.pair(depth + 1).parabolic);
  const Real upper = xi_of_sequence(longer);
  const Real lower =
      ws.products.back()(BoundaryPoint::finite(spec.fixed_point(depth + 1))).value();
  out.push_back(make_check("limit_endpoint_upper", kLemmaVectors, ws.limit.forward.value(),
                           Relation::Le, upper));
  out.push_back(make_check("limit_endpoint_lower", kLemmaVectors, ws.limit.forward.value(),
                           Relation::Ge, lower));
  return out;
}

std::vector<Check> verify_xi(const WindingSequence& ws) {
  const PairSequence& ps = ws.pairs;
  std::vector<Check> out;
  const Real xi = xi_of_sequence(ws.letters);
  out.push_back(make_check("xi_beyond_x0", kCor2, xi, Relation::Gt, ps.fixed_points[0]));
  BoundaryPoint z = BoundaryPoint::finite(xi);
  for (std::size_t n = 1; n < ws.letters.size(); ++n) {
    z = ws.letters[n - 1].inverse()(z);
    out.push_back(make_check(indexed("xi_nested", static_cast<int>(n)), kCor2, z.value(),
                             Relation::Gt, ps.fixed_points[n]));
  }
  out.push_back(make_check("xi_limit_beyond_x0", kCor2, ws.limit.forward.value(), Relation::Gt,
                           ps.fixed_points[0]));
  return out;
}

Real ball_horizon(const WindingSequence& ws) {
  return ws.pairs.spec.tangency_time(ws.pairs.spec.depth + 1) - Real(1);
}

std::vector<Real> pm_spreads(const WindingSequence& ws) {
  std::vector<Real> d;
  Real running(0);
  for (std::size_t k = 0; k < ws.pulled_bases.size(); ++k) {
    // beta_k^-1 g_{r_k} v_k (0) = Re(beta_k^-1 i) + i
    const Point base(ws.pulled_bases[k].x, Real(1));
    running = max(running, hyp_distance(base, Point::i()));
    d.push_back(running);
  }
  return d;
}

std::vector<Real> pm_times(const WindingSequence& ws) {
  const Real eps(ws.pairs.spec.epsilon);
  const Real floor = eps / Real(9);
  const std::vector<Real> d = pm_spreads(ws);
  std::vector<Real> t{floor};
  for (std::size_t l = 1; l <= d.size(); ++l) {
    const Real s = sinh(d[l - 1] / Real(2));
    Real tl = floor;
    if (s.sign() > 0) tl = max(log(s * pow2(static_cast<int>(l) + 2) / eps), floor);
    t.push_back(tl);
  }
  return t;
}

PmReport verify_pm(const WindingSequence& ws, int l_max, int samples, double t_end,
                   const FuchsianWordBall& ball) {
  if (l_max < 0) throw DomainError("l_max must be non-negative");
  if (samples < 1) throw DomainError("sample count must be positive");
  const Real eps(ws.pairs.spec.epsilon);
  const int depth = ws.pairs.spec.depth;
  const UnitTangent& u = ws.pairs.base;

  PmReport rep{pm_spreads(ws), pm_times(ws), {}};
  const int n_max = std::min(l_max, depth);
  const int l_top = std::min<int>(l_max, static_cast<int>(rep.t.size()) - 1);
  for (int l = 0; l <= l_top; ++l) {
    const Real& tl = rep.t[l];
    std::vector<Real> grid{tl};
    if (samples > 1 && Real(t_end) > tl) {
      const Real ratio = log(Real(t_end) / tl);
      for (int j = 1; j < samples; ++j) {
        grid.push_back(tl * exp(ratio * Real(j) / Real(samples - 1)));
      }
    }
    for (int n = 0; n <= n_max; ++n) {
      const Real bound = geometric(n) * eps / pow2(l);
      Real worst(0);
      Real worst_t = tl;
      for (const Real& t : grid) {
        const Real val = d1_quotient(geodesic_flow(ws.vectors[n], t + ws.times[n]),
                                     geodesic_flow(u, t), ball);
        if (val > worst) {
          worst = val;
          worst_t = t;
        }
      }
      rep.cells.push_back(make_check(indexed("pm", n, l), kPm, worst, Relation::Lt, bound,
                                     "T_l = " + tl.str(6) + ", worst at t = " + worst_t.str(6)));
    }
  }
  return rep;
}

Cor1Report verify_cor1(const WindingSequence& ws, const UnitTangent& w, const std::string& label,
                       double t_max, int grid, const FuchsianWordBall& ball) {
  if (grid < 2) throw DomainError("cor1 grid needs at least two points");
  if (!(t_max > 0)) throw DomainError("t_max must be positive");
  const Real eps(ws.pairs.spec.epsilon);
  const UnitTangent& u = ws.pairs.base;
  const std::vector<Real> times = pm_times(ws);

  Cor1Report rep{Real(0), {}, {}};
  std::vector<Real> values;
  std::vector<Real> ts;
  for (int j = 0; j < grid; ++j) {
    const Real t = Real(t_max) * Real(j) / Real(grid - 1);
    const Real val = d1_quotient(geodesic_flow(w, t), geodesic_flow(u, t), ball);
    rep.sup = max(rep.sup, val);
    rep.profile.emplace_back(t.to_double(), val.to_double());
    values.push_back(val);
    ts.push_back(t);
  }
  rep.checks.push_back(
      make_check("cor1_sup_" + label, kCor1, rep.sup, Relation::Le, Real(3) * eps));
  for (std::size_t l = 1; l < times.size(); ++l) {
    Real tail(0);
    bool any = false;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (ts[j] >= times[l]) {
        tail = max(tail, values[j]);
        any = true;
      }
    }
    if (!any) continue;
    rep.checks.push_back(make_check(indexed("cor1_tail_" + label, static_cast<int>(l)), kCor1, tail,
                                    Relation::Le, eps / pow2(static_cast<int>(l) - 1),
                                    "t >= T_l = " + times[l].str(6)));
  }
  return rep;
}

}  // namespace horoflow
