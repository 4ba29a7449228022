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

#include "word_ball.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace horoflow {

namespace {

using Shadow = FuchsianWordBall::Shadow;

// Dedup compares binary64 shadows, so the 53-bit tolerance applies.
constexpr double kDedupTol = 1e-12;

Shadow mul(const Shadow& g, const Shadow& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
          g.c * h.b + g.d * h.d};
}

std::array<double, 4> canonical(const Shadow& s) {
  std::array<double, 4> e{s.a, s.b, s.c, s.d};
  std::size_t k = 0;
  for (std::size_t j = 1; j < 4; ++j) {
    if (std::fabs(e[j]) > std::fabs(e[k])) k = j;
  }
  if (e[k] < 0) {
    for (auto& v : e) v = -v;
  }
  return e;
}

double max_abs(const std::array<double, 4>& e) {
  double m = 1.0;
  for (double v : e) m = std::max(m, std::fabs(v));
  return m;
}

bool same(const std::array<double, 4>& p, const std::array<double, 4>& q) {
  const double bound = kDedupTol * std::max(max_abs(p), max_abs(q));
  for (std::size_t j = 0; j < 4; ++j) {
    if (std::fabs(p[j] - q[j]) > bound) return false;
  }
  return true;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  return h;
}

// Hash keys of every grid cell that could hold a shadow equal to `e` within
// tolerance: a cell grid 2^24 times coarser than the scale, probing the
// neighbouring cell (or binade) when `e` sits within tolerance of an edge.
std::vector<std::uint64_t> cell_keys(const std::array<double, 4>& e) {
  const double scale = max_abs(e);
  const double tol = kDedupTol * scale;
  std::vector<int> binades{std::ilogb(scale)};
  if (std::ilogb(scale * (1 + 2 * kDedupTol)) != binades[0]) binades.push_back(binades[0] + 1);
  if (std::ilogb(scale * (1 - 2 * kDedupTol)) != binades[0]) binades.push_back(binades[0] - 1);

  std::vector<std::uint64_t> keys;
  for (int binade : binades) {
    const double q = std::ldexp(1.0, binade - 24);
    std::array<std::vector<long long>, 4> cells;
    for (std::size_t j = 0; j < 4; ++j) {
      const double r = e[j] / q;
      const double f = std::floor(r);
      cells[j].push_back(static_cast<long long>(f));
      if (r - f < tol / q) cells[j].push_back(static_cast<long long>(f) - 1);
      if (f + 1 - r < tol / q) cells[j].push_back(static_cast<long long>(f) + 1);
    }
    for (long long c0 : cells[0])
      for (long long c1 : cells[1])
        for (long long c2 : cells[2])
          for (long long c3 : cells[3]) {
            std::uint64_t h = static_cast<std::uint64_t>(binade);
            h = mix(h, static_cast<std::uint64_t>(c0));
            h = mix(h, static_cast<std::uint64_t>(c1));
            h = mix(h, static_cast<std::uint64_t>(c2));
            h = mix(h, static_cast<std::uint64_t>(c3));
            keys.push_back(h);
          }
  }
  return keys;
}

std::uint64_t home_key(const std::array<double, 4>& e) {
  const double scale = max_abs(e);
  const int binade = std::ilogb(scale);
  const double q = std::ldexp(1.0, binade - 24);
  std::uint64_t h = static_cast<std::uint64_t>(binade);
  for (double v : e) h = mix(h, static_cast<std::uint64_t>(static_cast<long long>(std::floor(v / q))));
  return h;
}

struct DPoint {
  double x, y;
};

DPoint apply(const Shadow& g, const DPoint& z) {
  const double px = g.a * z.x + g.b;
  const double qx = g.c * z.x + g.d;
  const double qy = g.c * z.y;
  const double den = qx * qx + qy * qy;
  return {(px * qx + g.a * qy * z.y) / den, (g.a * g.d - g.b * g.c) * z.y / den};
}

// 4 sinh^2(d/2) = |p - q|^2 / (p.y q.y).
double chord2(const DPoint& p, const DPoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return (dx * dx + dy * dy) / (p.y * q.y);
}

double dist(double c2) { return 2.0 * std::asinh(0.5 * std::sqrt(c2)); }

DPoint to_double(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

}  // namespace

FuchsianWordBall::FuchsianWordBall(std::vector<Isometry> generators, int max_word_length)
    : generators_(std::move(generators)), max_length_(max_word_length) {
  if (generators_.empty()) throw DomainError("word ball needs at least one generator");
  if (max_word_length < 0 || max_word_length > 127) {
    throw DomainError("word length must lie in [0, 127]");
  }
  const int k = static_cast<int>(generators_.size());
  std::vector<Shadow> letters;
  for (int j = 0; j < 2 * k; ++j) {
    const Isometry g = letter(j < k ? j + 1 : -(j - k + 1));
    letters.push_back({g.a().to_double(), g.b().to_double(), g.c().to_double(), g.d().to_double()});
  }

  std::unordered_multimap<std::uint64_t, std::int32_t> index;
  auto admit = [&](const Shadow& s, std::int32_t parent, std::int16_t last, std::int8_t len) {
    const auto e = canonical(s);
    for (std::uint64_t key : cell_keys(e)) {
      auto [lo, hi] = index.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        if (same(canonical(shadow_[static_cast<std::size_t>(it->second)]), e)) {
          ++duplicates_;
          return;
        }
      }
    }
    const auto id = static_cast<std::int32_t>(shadow_.size());
    shadow_.push_back(s);
    parent_.push_back(parent);
    last_.push_back(last);
    length_.push_back(len);
    index.emplace(home_key(e), id);
  };

  admit({1, 0, 0, 1}, -1, -1, 0);
  std::size_t begin = 0;
  for (int len = 1; len <= max_word_length; ++len) {
    const std::size_t end = shadow_.size();
    for (std::size_t p = begin; p < end; ++p) {
      for (int j = 0; j < 2 * k; ++j) {
        if (last_[p] >= 0 && j == (last_[p] + k) % (2 * k)) continue;
        admit(mul(shadow_[p], letters[static_cast<std::size_t>(j)]), static_cast<std::int32_t>(p),
              static_cast<std::int16_t>(j), static_cast<std::int8_t>(len));
      }
    }
    begin = end;
  }
}

Isometry FuchsianWordBall::letter(int code) const {
  if (code > 0) return generators_[static_cast<std::size_t>(code - 1)];
  return generators_[static_cast<std::size_t>(-code - 1)].inverse();
}

std::vector<int> FuchsianWordBall::word(std::size_t k) const {
  const int n = static_cast<int>(generators_.size());
  std::vector<int> out;
  for (auto p = static_cast<std::int32_t>(k); p > 0; p = parent_[static_cast<std::size_t>(p)]) {
    const int j = last_[static_cast<std::size_t>(p)];
    out.push_back(j < n ? j + 1 : -(j - n + 1));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Isometry FuchsianWordBall::element(std::size_t k) const {
  Isometry g = Isometry::identity();
  for (int code : word(k)) g = g * letter(code);
  return g;
}

namespace {

// Screened candidates within this band of the binary64 minimum are
// re-evaluated exactly.
constexpr double kScreenRel = 1e-4;
constexpr double kScreenAbs = 1e-9;

}  // namespace

QuotientMatch d1_quotient_match(const UnitTangent& u, const UnitTangent& v,
                                const FuchsianWordBall& ball) {
  const Real one(1);
  const UnitTangent u1 = geodesic_flow(u, one);
  const UnitTangent v1 = geodesic_flow(v, one);
  const DPoint a0 = to_double(u.base());
  const DPoint a1 = to_double(u1.base());
  const DPoint b0 = to_double(v.base());
  const DPoint b1 = to_double(v1.base());

  std::vector<std::pair<double, std::size_t>> seen;
  double best = std::numeric_limits<double>::infinity();
  double cut = best;  // chord2 bound for the first term
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const Shadow& g = ball.shadow(k);
    const double c0 = chord2(a0, apply(g, b0));
    if (!(c0 <= cut)) continue;
    const double val = dist(c0) + dist(chord2(a1, apply(g, b1)));
    if (!std::isfinite(val)) continue;
    seen.emplace_back(val, k);
    if (val < best) {
      best = val;
      const double reach = best * (1 + kScreenRel) + kScreenAbs;
      const double s = 2.0 * std::sinh(0.5 * reach);
      cut = s * s;
    }
  }

  QuotientMatch out{d1(u, v), 0};
  const double reach = best * (1 + kScreenRel) + kScreenAbs;
  for (const auto& [val, k] : seen) {
    if (val > reach || k == 0) continue;
    const Isometry g = ball.element(k);
    Real exact = hyp_distance(u.base(), g(v.base())) + hyp_distance(u1.base(), g(v1.base()));
    if (exact < out.value) out = {std::move(exact), k};
  }
  return out;
}

Real d1_quotient(const UnitTangent& u, const UnitTangent& v, const FuchsianWordBall& ball) {
  return d1_quotient_match(u, v, ball).value;
}

QuotientMatch orbit_gap_to_infinity(const Real& xi, const FuchsianWordBall& ball) {
  const double x = xi.to_double();
  const double scale = std::max(1.0, std::fabs(x));
  std::vector<std::pair<double, std::size_t>> seen;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const Shadow& g = ball.shadow(k);
    if (g.c == 0.0) continue;
    const double gap = std::fabs(x - g.a / g.c);
    seen.emplace_back(gap, k);
    best = std::min(best, gap);
  }
  QuotientMatch out{Real(0), 0};
  bool found = false;
  const double reach = best + 1e-6 * scale;
  for (const auto& [gap, k] : seen) {
    if (gap > reach) continue;
    const BoundaryPoint image = ball.element(k)(BoundaryPoint::infinity());
    if (image.is_infinity()) continue;
    Real exact = abs(xi - image.value());
    if (!found || exact < out.value) {
      out = {std::move(exact), k};
      found = true;
    }
  }
  if (!found) throw DomainError("no element of the ball moves infinity");
  return out;
}

}  // namespace horoflow
