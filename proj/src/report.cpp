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

#include "report.hpp"

#include <cmath>
#include <cstdlib>

#include "render.hpp"
#include "sampling.hpp"
#include "walpha.hpp"
#include "witness.hpp"

namespace horoflow {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kMaxBallSize = 4e6;

const char* kDistanceHoro = "Lemma distance_horo";
const char* kDecreasing = "Lemma decreasing";
const char* kBoundWind = "Prop. bound_wind";
const char* kKeyProp = "Key Proposition";
const char* kCusp = "Prop. cusprecurrent";
const char* kLemmaVectors = "Lemma lemma_vectors";

Json reals(const std::vector<Real>& v, int digits = 20) {
  Json out = Json::array();
  for (const Real& x : v) out.push_back(x.str(digits));
  return out;
}

Json vector_json(const UnitTangent& u) {
  return Json{{"base", {u.base().x.str(25), u.base().y.str(25)}}, {"forward", u.forward().str()}};
}

Json profile_json(const std::vector<std::pair<double, double>>& p) {
  Json out = Json::array();
  for (const auto& [t, v] : p) out.push_back({t, v});
  return out;
}

void append(std::vector<Check>& to, const std::vector<Check>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// --- verify-lemmas -------------------------------------------------------

void run_lemmas(RunResult& r) {
  SplitMix64 root(r.config.seed);
  SplitMix64 horo = root.fork(1);
  SplitMix64 cross = root.fork(2);
  SplitMix64 weak = root.fork(3);

  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto [u, v] = random_stable_pair(horo);
    const Real s0 = sinh(hyp_distance(u.base(), v.base()) / Real(2));
    for (int j = 0; j < 100; ++j) {
      const Real t(10.0 * j / 99);
      const Real ratio = sinh(flow_distance(u, v, t) / Real(2)) * exp(t) / s0;
      worst = std::max(worst, abs(ratio - Real(1)).to_double());
    }
  }
  r.checks.push_back(make_check("distance_horo_ratio", kDistanceHoro, Real(worst), Relation::Lt,
                                Real(1e-8),
                                "200 stable pairs, 100 times in [0, 10], max relative deviation "
                                "of sinh(d(t)/2) e^t / sinh(d(0)/2) from 1"));

  double cross_worst = 0;
  {
    PrecisionScope high(256);
    for (int k = 0; k < 20; ++k) {
      const auto [u, v] = random_stable_pair(cross);
      const Real t(10);
      const Real naive = hyp_distance(geodesic_flow(u, t).base(), geodesic_flow(v, t).base());
      const Real framed = flow_distance(u, v, t);
      cross_worst = std::max(cross_worst, (abs(naive - framed) / framed).to_double());
    }
  }
  r.checks.push_back(make_check("distance_horo_crosscheck", kDistanceHoro, Real(cross_worst),
                                Relation::Lt, Real(1e-50),
                                "framed distance against plane coordinates at 256 bits, t = 10"));

  Real rise(0);
  for (int k = 0; k < 200; ++k) {
    const auto [u, v] = random_weak_stable_pair(weak);
    Real prev = flow_distance(u, v, Real(-5));
    for (int j = 1; j < 100; ++j) {
      const Real d = flow_distance(u, v, Real(-5.0 + 10.0 * j / 99));
      rise = max(rise, d - prev);
      prev = d;
    }
  }
  r.checks.push_back(make_check("decreasing_weak_stable", kDecreasing, rise, Relation::Le,
                                Real(1e-9),
                                "200 weak-stable pairs, max increase of d(v(t), u(t)) on [-5, 5]"));
  r.details = Json{{"stablePairs", 200}, {"weakStablePairs", 200}, {"gridPoints", 100},
                   {"worstRatioDeviation", worst}, {"maxRise", rise.to_double()}};
}

// --- key-prop --------------------------------------------------------------

void run_key_prop(RunResult& r) {
  SplitMix64 root(r.config.seed);
  SplitMix64 wind_rng = root.fork(1);
  SplitMix64 prop_rng = root.fork(2);
  const Real slack(1e-9);

  Real tau_excess(-1);
  double tau_ratio = 0;
  for (int k = 0; k < 1000; ++k) {
    const TangencyData td = random_tangency(wind_rng);
    const Real tau = abs(winding_time(td));
    const Real ell = translation_length(td.pair);
    tau_excess = max(tau_excess, tau - ell);
    tau_ratio = std::max(tau_ratio, (tau / ell).to_double());
  }
  r.checks.push_back(make_check("bound_wind", kBoundWind, tau_excess, Relation::Le, slack,
                                "1000 configurations, max of |tau| - l"));

  const int grid_n = resolve_grid(r.config);
  std::vector<Real> grid;
  for (int j = 0; j < grid_n; ++j) grid.emplace_back(20.0 * j / (grid_n - 1));

  struct Bound {
    const char* name;
    double factor;
    Real excess{-1};
    double ratio = 0;
    int configs = 0;
  };
  Bound shifted{"key_prop_12l", 12}, ca{"case_a_6l", 6}, cb{"case_b_8l", 8}, cc{"case_c_10l", 10},
      c1{"case1_3l", 3}, c2{"case2_4l", 4};
  Real ell_formula(0);
  Real radius_low(0), radius_high(-1), q_low(0), q_high(-1), dq(-1), dt(-1);

  auto take = [](Bound& b, bool has, const Real& value, const Real& ell) {
    if (!has) return;
    ++b.configs;
    b.excess = max(b.excess, value - Real(b.factor) * ell);
    b.ratio = std::max(b.ratio, (value / ell).to_double());
  };

  for (int k = 0; k < 100; ++k) {
    const TangencyData td = random_tangency(prop_rng);
    const KeyPropReport kp = key_proposition_check(td, grid);
    const Real& ell = kp.ell;
    take(shifted, true, kp.max_shifted, ell);
    take(ca, kp.has_a, kp.max_case_a, ell);
    take(cb, kp.has_b, kp.max_case_b, ell);
    take(cc, kp.has_c, kp.max_case_c, ell);
    take(c1, kp.has_1, kp.max_case1, ell);
    take(c2, kp.has_2, kp.max_case2, ell);
    ell_formula = max(ell_formula, abs(ell - kp.lambda * exp(-kp.b)) / ell);
    const Real grow = Real(2) * exp(kp.b_wind) - Real(2) * exp(kp.b);
    radius_low = min(radius_low, grow);
    radius_high = max(radius_high, grow - kp.lambda);
    const Real shift = kp.q1_wind - kp.q1;
    q_low = min(q_low, shift);
    q_high = max(q_high, shift - kp.lambda);
    dq = max(dq, kp.dist_q - Real(1.5) * ell);
    dt = max(dt, abs(kp.t1 - kp.t1_wind) - Real(1.5) * ell);
  }

  Json ratios = Json::object();
  for (Bound* b : {&shifted, &ca, &cb, &cc, &c1, &c2}) {
    std::string note = "max over " + std::to_string(b->configs) + " configurations of value - " +
                       std::to_string(int(b->factor)) + " l";
    if (b == &cc) note += "; the case (c) bound 10 l(gamma) is read as 10 l(H, p)";
    r.checks.push_back(make_check(b->name, kKeyProp, b->excess, Relation::Le, slack, note));
    ratios[b->name] = b->ratio;
  }
  r.checks.push_back(make_check("ell_equals_lambda_exp_minus_b", kKeyProp, ell_formula,
                                Relation::Le, Real(1e-9), "relative error"));
  r.checks.push_back(make_check("radius_growth_nonnegative", kKeyProp, -radius_low, Relation::Le,
                                Real(0), "2e^b' - 2e^b >= 0"));
  r.checks.push_back(make_check("radius_growth_below_lambda", kKeyProp, radius_high, Relation::Lt,
                                Real(0), "2e^b' - 2e^b - lambda < 0"));
  r.checks.push_back(make_check("center_shift_nonnegative", kKeyProp, -q_low, Relation::Le,
                                Real(0), "q1' - q1 >= 0"));
  r.checks.push_back(make_check("center_shift_below_lambda", kKeyProp, q_high, Relation::Lt,
                                Real(0), "q1' - q1 - lambda < 0"));
  r.checks.push_back(make_check("top_distance", kKeyProp, dq, Relation::Le, slack,
                                "d(q, q') - 1.5 l"));
  r.checks.push_back(make_check("tangency_time_shift", kKeyProp, dt, Relation::Le, slack,
                                "|t1 - t1'| - 1.5 l"));
  r.details = Json{{"windConfigurations", 1000},
                   {"maxTauOverEll", tau_ratio},
                   {"keyPropConfigurations", 100},
                   {"gridPoints", grid_n},
                   {"tRange", {0, 20}},
                   {"maxRatioToEll", ratios},
                   {"note", "case a is read on the unshifted distance d1(g_t v, g_t u)"}};
}

// --- sequence --------------------------------------------------------------

PairSequenceSpec spec_of(const RunConfig& c) {
  PairSequenceSpec s;
  s.epsilon = c.epsilon;
  s.depth = c.depth;
  s.spacing = c.spacing;
  s.margin = c.margin;
  return s;
}

void guard_ball(int generators, int length) {
  const double est = word_ball_estimate(generators, length);
  if (est > kMaxBallSize) {
    throw DomainError("word ball of length " + std::to_string(length) + " over " +
                      std::to_string(generators) + " letters has about " +
                      std::to_string(static_cast<long long>(est)) +
                      " elements; pass a smaller --word-ball");
  }
}

void run_sequence(RunResult& r) {
  const RunConfig& c = r.config;
  const WindingSequence ws = iterate_winding(build_pair_sequence(spec_of(c)));
  append(r.checks, verify_sequence(ws));
  append(r.checks, verify_xi(ws));

  const int length = resolve_word_ball(c);
  guard_ball(c.depth + 1, length);
  const FuchsianWordBall ball = letter_ball(ws, length);
  const PmReport pm = verify_pm(ws, c.depth, 20, c.t_max, ball);
  append(r.checks, pm.cells);

  const int grid = resolve_grid(c);
  const Cor1Report sur = verify_cor1(ws, ws.w_alpha, "surrogate", c.t_max, grid, ball);
  append(r.checks, sur.checks);
  const double horizon = std::min(c.t_max, ball_horizon(ws).to_double());
  const Cor1Report lim = verify_cor1(ws, ws.limit.w, "limit", horizon, grid, ball);
  append(r.checks, lim.checks);

  Json endpoints = Json::array();
  for (const UnitTangent& v : ws.vectors) endpoints.push_back(v.forward().value().str(30));
  r.details = Json{
      {"tangencyTimes", reals(ws.pairs.times)},
      {"fixedPoints", reals(ws.pairs.fixed_points)},
      {"lengths", reals(ws.pairs.lengths)},
      {"shrunkLengths", reals(ws.shrunk_lengths)},
      {"times", reals(ws.times, 30)},
      {"windingTimes", reals(ws.winding_times)},
      {"endpoints", endpoints},
      {"surrogate", {{"forward", ws.limit_forward.value().str(30)},
                     {"time", ws.limit_time.str(30)},
                     {"w", vector_json(ws.w_alpha)}}},
      {"limit", {{"forward", ws.limit.forward.value().str(30)},
                 {"time", ws.limit.time.str(30)},
                 {"letters", ws.limit.letters},
                 {"converged", ws.limit.converged},
                 {"cor1Horizon", horizon}}},
      {"xi", xi_of_sequence(ws.letters).str(30)},
      {"maxDeterminantDrift", ws.max_drift.to_double()},
      {"wordBall", {{"length", length}, {"size", ball.size()}}},
      {"pm", {{"D", reals(pm.d)}, {"T", reals(pm.t)}, {"samplesPerCell", 20}}},
      {"cor1", {{"supSurrogate", sur.sup.to_double()},
                {"supLimit", lim.sup.to_double()},
                {"profileSurrogate", profile_json(sur.profile)}}},
  };
}

// --- witness -----------------------------------------------------------------

void run_witness(RunResult& r) {
  const RunConfig& c = r.config;
  WitnessConfig w;
  w.delta = c.delta;
  w.spec = spec_of(c);
  w.t_max = c.t_max;
  w.grid = resolve_grid(c);
  w.word_length = resolve_word_ball(c);
  w.seed = c.seed;
  guard_ball(c.depth + 1, w.word_length);
  const WitnessReport rep = build_witness(w);
  append(r.checks, rep.checks);
  r.details = Json{{"delta", rep.delta},
                   {"epsilonProduct", rep.epsilon_product},
                   {"epsilonUsed", rep.epsilon_used},
                   {"modulusExhausted", rep.modulus_exhausted},
                   {"u", vector_json(rep.u)},
                   {"w", vector_json(rep.w)},
                   {"y", vector_json(rep.y)},
                   {"tRange", {rep.t_min, rep.t_max}},
                   {"gridSize", rep.grid},
                   {"wordBall", {{"length", rep.word_length}, {"size", rep.ball_size}}},
                   {"supD1", rep.sup_d1.to_double()},
                   {"orbitSeparation", rep.orbit_separation.to_double()},
                   {"separationTolerance", separation_tolerance()},
                   {"busemannResidual", rep.busemann_residual.str(6)},
                   {"passed", rep.passed},
                   {"note", rep.note},
                   {"profile", profile_json(rep.profile)}};
}

// --- render ------------------------------------------------------------------

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

void run_render(RunResult& r) {
  const RunConfig& c = r.config;
  const UnitTangent u(Point::i(), BoundaryPoint::finite(Real(2)));
  const TangencyData td = make_tangency(u, BoundaryPoint::infinity(), Real(0.8));
  const KeyPropReport kp = key_proposition_check(td, {});
  const PairSequence ps = build_pair_sequence(spec_of(c));
  const WindingSequence ws = iterate_winding(ps);
  const int n = std::min(1, c.depth);

  r.artifacts.push_back({"fig1.svg", render_winding(td)});
  r.artifacts.push_back({"fig2.svg", render_radii(kp)});
  r.artifacts.push_back({"fig3.svg", render_sequence(ps)});
  r.artifacts.push_back({"fig4.svg", render_region(ws, n)});

  const std::string& fig3 = r.artifacts[2].content;
  r.checks.push_back(make_check("fig3_horocycles", kCusp,
                                Real(static_cast<long>(count(fig3, "class=\"horocycle\""))),
                                Relation::Ge, Real(c.depth + 1)));
  r.checks.push_back(make_check("fig4_point_in_region", kLemmaVectors,
                                in_closed_region(ws.pulled_bases[n], ps.fixed_points[n]) ? Real(0)
                                                                                         : Real(1),
                                Relation::Le, Real(0)));
  const Real grow = Real(2) * exp(kp.b_wind) - Real(2) * exp(kp.b);
  r.checks.push_back(make_check("fig2_radius_growth", kKeyProp, grow, Relation::Lt, kp.lambda));
  Json files = Json::array();
  for (const Artifact& a : r.artifacts) files.push_back(a.name);
  r.details = Json{{"figures", files}, {"regionIndex", n}};
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::VerifyLemmas: return "verify-lemmas";
    case Command::KeyProp: return "key-prop";
    case Command::Sequence: return "sequence";
    case Command::Witness: return "witness";
    case Command::Render: return "render";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::VerifyLemmas, Command::KeyProp, Command::Sequence, Command::Witness,
                    Command::Render}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* field) {
    if (!std::isfinite(v) || v <= 0) throw DomainError(std::string(field) + " must be positive");
  };
  positive(epsilon, "--epsilon");
  positive(delta, "--delta");
  positive(spacing, "--spacing");
  positive(margin, "--margin");
  positive(t_max, "--t-max");
  if (depth < 0) throw DomainError("--depth must be non-negative");
  if (grid < 0) throw DomainError("--grid must be positive");
  if (word_ball < 0) throw DomainError("--word-ball must be positive");
  if (precision_bits < 0) throw DomainError("--precision-bits must be positive");
  if (precision_bits > 0 && (precision_bits < 24 || precision_bits > 4096)) {
    throw DomainError("--precision-bits must lie in [24, 4096]");
  }
}

unsigned default_precision(Command c) {
  return c == Command::VerifyLemmas || c == Command::KeyProp ? 53 : 256;
}

unsigned resolve_precision(const RunConfig& cfg) {
  if (cfg.precision_bits > 0) return static_cast<unsigned>(cfg.precision_bits);
  if (const char* env = std::getenv("HOROFLOW_PRECISION_BITS")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || bits < 24 || bits > 4096) {
      throw DomainError(std::string("HOROFLOW_PRECISION_BITS must be an integer in [24, 4096], got '") +
                        env + "'");
    }
    return static_cast<unsigned>(bits);
  }
  return default_precision(cfg.command);
}

int resolve_grid(const RunConfig& cfg) {
  if (cfg.grid > 0) return cfg.grid;
  switch (cfg.command) {
    case Command::KeyProp: return 200;
    case Command::Witness: return 501;
    default: return 500;
  }
}

int resolve_word_ball(const RunConfig& cfg) {
  return cfg.word_ball > 0 ? cfg.word_ball : cfg.depth + 2;
}

double word_ball_estimate(int generators, int length) {
  double total = 1;
  double layer = 2.0 * generators;
  for (int j = 1; j <= length; ++j) {
    total += layer;
    layer *= 2.0 * generators - 1;
  }
  return total;
}

std::size_t RunResult::failed() const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.passed ? 0 : 1;
  return n;
}

nlohmann::ordered_json RunResult::to_json() const {
  Json checks_json = Json::array();
  for (const Check& c : checks) {
    Json j{{"name", c.name},          {"ref", c.ref},
           {"bound", c.bound},        {"observed", c.observed},
           {"margin", c.margin()},    {"relation", to_string(c.relation)},
           {"passed", c.passed}};
    if (!c.note.empty()) j["note"] = c.note;
    checks_json.push_back(std::move(j));
  }
  return Json{{"schemaVersion", kSchemaVersion},
              {"command", to_string(config.command)},
              {"config",
               {{"epsilon", config.epsilon},
                {"delta", config.delta},
                {"depth", config.depth},
                {"spacing", config.spacing},
                {"margin", config.margin},
                {"tMax", config.t_max},
                {"grid", config.grid},
                {"wordBall", config.word_ball},
                {"precisionBits", precision_bits},
                {"seed", config.seed}}},
              {"checks", checks_json},
              {"summary",
               {{"total", checks.size()},
                {"passed", checks.size() - failed()},
                {"failed", failed()}}},
              {"details", details}};
}

std::string RunResult::json() const { return to_json().dump(2) + "\n"; }

RunResult run_command(const RunConfig& cfg) {
  cfg.validate();
  RunResult r;
  r.config = cfg;
  r.config.grid = resolve_grid(cfg);
  r.config.word_ball = resolve_word_ball(cfg);
  r.precision_bits = resolve_precision(cfg);
  PrecisionScope scope(r.precision_bits);
  switch (cfg.command) {
    case Command::VerifyLemmas: run_lemmas(r); break;
    case Command::KeyProp: run_key_prop(r); break;
    case Command::Sequence: run_sequence(r); break;
    case Command::Witness: run_witness(r); break;
    case Command::Render: run_render(r); break;
  }
  return r;
}

}  // namespace horoflow
