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

// Standalone SVG 1.1 figures in Euclidean upper half-plane coordinates.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "horocycle.hpp"
#include "walpha.hpp"

namespace horoflow {

/// World-to-pixel canvas with y pointing up. Numbers are printed with six
/// significant digits, so output is deterministic.
class SvgCanvas {
 public:
  SvgCanvas(double xmin, double xmax, double ymin, double ymax, double width_px);

  void line(double x1, double y1, double x2, double y2, const std::string& cls);
  void circle(double cx, double cy, double r, const std::string& cls);
  void dot(double x, double y, const std::string& cls);
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& cls);
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& cls);
  void text(double x, double y, const std::string& s, const std::string& cls);

  std::string str(const std::string& title) const;

 private:
  double px(double x) const;
  double py(double y) const;

  double xmin_, ymax_, scale_, width_, height_;
  std::string body_;
};

/// A vector, its geodesic, the pair's horocycle and the wound vector.
std::string render_winding(const TangencyData& td);

/// The two half-circles of u and Wind(u) in the normalized frame: centers
/// q1, q1' and radii e^b, e^b'.
std::string render_radii(const KeyPropReport& r);

/// The horocycles of a pair sequence, tangent to both axes.
std::string render_sequence(const PairSequence& ps);

/// The region R_n bounded by the imaginary axis, the lower-left quarter of
/// H_n and the real axis, with beta_n^-1 i marked.
std::string render_region(const WindingSequence& ws, int n);

}  // namespace horoflow
