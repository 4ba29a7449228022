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

// Synthetic cusp-recurrent pair sequences in normalized position, the
// iterated winding sequence they generate, and its limit vector.
//
// Normalization: u = (i, inf). Pair n is the horocycle tangent to the
// imaginary axis at i e^{t_n} and to the real axis at x_n = e^{t_n}, with a
// parabolic of translation length l_n = margin * eps / (12 * 4^n) oriented
// positively for u.

#pragma once

#include <vector>

#include "check.hpp"
#include "horocycle.hpp"
#include "word_ball.hpp"

namespace horoflow {

struct PairSequenceSpec {
  double epsilon = 0.1;
  int depth = 4;            // letters alpha_0 .. alpha_depth
  double spacing = 2.0;     // t_{n+1} - t_n
  double margin = 0.9;      // l_n / (eps / (12 * 4^n))
  double first_tangency = 6.0;  // t_0

  /// Throws DomainError on a non-positive epsilon, negative depth, margin
  /// outside (0, 1), negative t_0, or spacing <= log(3 + 2 sqrt 2).
  void validate() const;

  Real tangency_time(int n) const;
  Real fixed_point(int n) const;
  Real length(int n) const;
  /// The oriented pair of index n (defined for every n >= 0).
  OrientedPair pair(int n) const;
};

/// log(3 + 2 sqrt 2): horoballs tangent to the imaginary axis at heights
/// e^s < e^t are disjoint iff t - s exceeds this.
Real disjoint_spacing();

struct PairSequence {
  PairSequenceSpec spec;
  UnitTangent base;
  std::vector<Real> times;
  std::vector<Real> fixed_points;
  std::vector<Real> lengths;
  std::vector<OrientedPair> pairs;
};

PairSequence build_pair_sequence(const PairSequenceSpec& spec);

/// The limit of the construction, reached by continuing the letter sequence
/// until the endpoint and the time stop moving at working precision.
struct ConvergedLimit {
  BoundaryPoint forward;  // v_alpha(+inf) = xi(alpha)
  Real time;              // r_alpha
  UnitTangent w;          // g_{r_alpha} (i, forward)
  int letters = 0;        // letters consumed
  bool converged = false;
};

struct WindingSequence {
  PairSequence pairs;
  std::vector<Isometry> letters;      // alpha_n
  std::vector<Isometry> products;     // beta_n = alpha_0 ... alpha_n
  std::vector<UnitTangent> vectors;   // v_n = (i, beta_n(inf))
  std::vector<Real> times;            // r_n
  std::vector<Point> pulled_bases;    // beta_n^-1 i
  std::vector<bool> in_region;        // 0 < Re < x_{n+1}, outside the open ball of H_{n+1}
  std::vector<bool> meets_next;       // the ray of beta_n^-1 v_n meets H_{n+1}, n < N
  std::vector<Real> shrunk_lengths;   // l(H'_{n+1}, alpha_{n+1}), n < N
  std::vector<Real> winding_times;    // tau for the winding at step n -> n+1
  std::vector<Real> tangency_times;   // ray of beta_n^-1 v_n meets H'_{n+1}
  std::vector<bool> oriented;         // beta_n^-1 v_n tangent to the oriented pair
  Real max_drift;                     // max |det beta_n - 1|
  Real max_base_residual;             // max d(beta_n(beta_n^-1 i), i)

  BoundaryPoint limit_forward;  // beta_N(inf), depth-N surrogate
  Real limit_time;              // r_N
  UnitTangent w_alpha;          // g_{r_N} (i, beta_N(inf))
  ConvergedLimit limit;
};

/// Throws PrecisionExhausted when det(beta_n) drifts beyond tol_det.
WindingSequence iterate_winding(const PairSequence& ps);

/// Word ball over the letters alpha_0 .. alpha_N.
FuchsianWordBall letter_ball(const WindingSequence& ws, int max_word_length);

/// alpha_0 ... alpha_N (inf), evaluated from the inside out.
Real xi_of_sequence(const std::vector<Isometry>& letters);

/// Checks on the built sequence: increments of r against l_{n+1}, the bound
/// on |r_n|, shrink_horo, monotone endpoints, region membership, stable
/// horocycle residuals and the limit error budget.
std::vector<Check> verify_sequence(const WindingSequence& ws);

/// Separation inequalities of the endpoint map xi on the letters.
std::vector<Check> verify_xi(const WindingSequence& ws);

struct PmReport {
  std::vector<Real> d;      // D_n
  std::vector<Real> t;      // T_l
  std::vector<Check> cells; // one per (n, l)
};

/// For n <= min(l_max, N) and l <= l_max checks the quotient d1 of
/// g_{t + r_n} v_n and g_t u against (sum_{k <= n} 2^-k) eps / 2^l at
/// `samples` log-spaced times in [T_l, t_end].
PmReport verify_pm(const WindingSequence& ws, int l_max, int samples, double t_end,
                   const FuchsianWordBall& ball);

/// Closed-region test for R_n: 0 <= Re z <= x, Im z <= x and z outside the
/// open disc of radius x about x + ix.
bool in_closed_region(const Point& z, const Real& x);

/// D_n for n = 0 .. N.
std::vector<Real> pm_spreads(const WindingSequence& ws);
/// T_l for l = 0 .. N + 1.
std::vector<Real> pm_times(const WindingSequence& ws);

/// t_{N+1} - 1: past it the limit vector winds around pair N+1, whose letter
/// is not in the ball over alpha_0 .. alpha_N.
Real ball_horizon(const WindingSequence& ws);

struct Cor1Report {
  Real sup;                 // over the grid
  std::vector<Check> checks;
  std::vector<std::pair<double, double>> profile;  // (t, quotient d1)
};

/// sup over `grid` points in [0, t_max] of the quotient d1 of g_t w and g_t u
/// against 3 eps, plus the tail bounds eps / 2^(l-1) after T_l.
Cor1Report verify_cor1(const WindingSequence& ws, const UnitTangent& w, const std::string& label,
                       double t_max, int grid, const FuchsianWordBall& ball);

}  // namespace horoflow
