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

#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace horoflow {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Upper half of the circle with center (c, 0) and radius r, as a polyline.
std::vector<std::pair<double, double>> semicircle(double c, double r, int steps = 180) {
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k <= steps; ++k) {
    const double a = std::numbers::pi * k / steps;
    pts.emplace_back(c + r * std::cos(a), r * std::sin(a));
  }
  return pts;
}

const char* kStyle =
    "<style>"
    ".axis{stroke:#444;stroke-width:1}"
    ".geodesic{fill:none;stroke:#1f5fa8;stroke-width:1.5}"
    ".wound{fill:none;stroke:#c0392b;stroke-width:1.5}"
    ".horocycle{fill:none;stroke:#2e8b57;stroke-width:1.2}"
    ".region{fill:#f2d98c;stroke:#a07d1c;stroke-width:1}"
    ".point{fill:#000}"
    ".label{font:12px sans-serif;fill:#222}"
    "</style>";

}  // namespace

SvgCanvas::SvgCanvas(double xmin, double xmax, double ymin, double ymax, double width_px)
    : xmin_(xmin),
      ymax_(ymax),
      scale_(width_px / (xmax - xmin)),
      width_(width_px),
      height_((ymax - ymin) * width_px / (xmax - xmin)) {}

double SvgCanvas::px(double x) const { return (x - xmin_) * scale_; }
double SvgCanvas::py(double y) const { return (ymax_ - y) * scale_; }

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string& cls) {
  body_ += "<line class=\"" + cls + "\" x1=\"" + num(px(x1)) + "\" y1=\"" + num(py(y1)) +
           "\" x2=\"" + num(px(x2)) + "\" y2=\"" + num(py(y2)) + "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& cls) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(px(cx)) + "\" cy=\"" + num(py(cy)) +
           "\" r=\"" + num(r * scale_) + "\"/>\n";
}

void SvgCanvas::dot(double x, double y, const std::string& cls) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
           "\" r=\"3\"/>\n";
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& pts,
                         const std::string& cls) {
  body_ += "<polyline class=\"" + cls + "\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) body_ += ' ';
    body_ += num(px(pts[k].first)) + "," + num(py(pts[k].second));
  }
  body_ += "\"/>\n";
}

void SvgCanvas::polygon(const std::vector<std::pair<double, double>>& pts, const std::string& cls) {
  body_ += "<polygon class=\"" + cls + "\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) body_ += ' ';
    body_ += num(px(pts[k].first)) + "," + num(py(pts[k].second));
  }
  body_ += "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, const std::string& cls) {
  body_ += "<text class=\"" + cls + "\" x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) + "\">" +
           escape(s) + "</text>\n";
}

std::string SvgCanvas::str(const std::string& title) const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " +
         num(height_) + "\">\n<title>" + escape(title) + "</title>\n" + kStyle + "\n" + body_ +
         "</svg>\n";
}

std::string render_winding(const TangencyData& td) {
  const UnitTangent& u = td.vector;
  const UnitTangent v = wind(td);
  const Horocycle& h = td.pair.horocycle;

  std::vector<double> xs{u.base().x.to_double()};
  double top = u.base().y.to_double();
  auto add_geodesic = [&](const UnitTangent& w) {
    const double a = w.backward().is_infinity() ? w.base().x.to_double() : w.backward().value().to_double();
    const double b = w.forward().is_infinity() ? w.base().x.to_double() : w.forward().value().to_double();
    xs.push_back(a);
    xs.push_back(b);
    top = std::max(top, std::abs(b - a) / 2);
  };
  add_geodesic(u);
  add_geodesic(v);
  if (!h.center().is_infinity()) {
    xs.push_back(h.center().value().to_double());
    top = std::max(top, h.diameter().to_double());
  } else {
    top = std::max(top, h.height().to_double());
  }
  double lo = *std::min_element(xs.begin(), xs.end());
  double hi = *std::max_element(xs.begin(), xs.end());
  const double pad = 0.15 * std::max(hi - lo, top);
  lo -= pad;
  hi += pad;
  top += pad;

  SvgCanvas svg(lo, hi, -0.05 * top, top, 640);
  svg.line(lo, 0, hi, 0, "axis");
  auto draw = [&](const UnitTangent& w, const std::string& cls) {
    if (w.forward().is_infinity() || w.backward().is_infinity()) {
      svg.line(w.base().x.to_double(), 0, w.base().x.to_double(), top, cls);
      return;
    }
    const double a = w.backward().value().to_double();
    const double b = w.forward().value().to_double();
    svg.polyline(semicircle((a + b) / 2, std::abs(b - a) / 2), cls);
  };
  if (h.center().is_infinity()) {
    svg.line(lo, h.height().to_double(), hi, h.height().to_double(), "horocycle");
  } else {
    const double d = h.diameter().to_double();
    svg.circle(h.center().value().to_double(), d / 2, d / 2, "horocycle");
  }
  draw(u, "geodesic");
  draw(v, "wound");
  svg.dot(u.base().x.to_double(), u.base().y.to_double(), "point");
  svg.text(u.base().x.to_double(), u.base().y.to_double(), " u(0)", "label");
  svg.dot(td.tangent_point.x.to_double(), td.tangent_point.y.to_double(), "point");
  svg.text(td.tangent_point.x.to_double(), td.tangent_point.y.to_double(), " tangency", "label");
  return svg.str("Winding of a vector around an oriented pair");
}

std::string render_radii(const KeyPropReport& r) {
  const double q = r.q1.to_double();
  const double qw = r.q1_wind.to_double();
  const double e = std::exp(r.b.to_double());
  const double ew = std::exp(r.b_wind.to_double());
  const double lo = std::min(q - e, qw - ew);
  const double hi = std::max(q + e, qw + ew);
  const double top = std::max(e, ew);
  const double pad = 0.1 * (hi - lo);

  SvgCanvas svg(lo - pad, hi + pad, -0.05 * top, 1.15 * top, 640);
  svg.line(lo - pad, 0, hi + pad, 0, "axis");
  svg.line(lo - pad, e, hi + pad, e, "horocycle");
  svg.polyline(semicircle(q, e), "geodesic");
  svg.polyline(semicircle(qw, ew), "wound");
  svg.dot(q, 0, "point");
  svg.text(q, 0, " q1", "label");
  svg.dot(qw, 0, "point");
  svg.text(qw, -0.04 * top, " q1'", "label");
  svg.dot(0, 1, "point");
  svg.text(0, 1, " u(0)", "label");
  return svg.str("Radii and centers of the half-circles");
}

std::string render_sequence(const PairSequence& ps) {
  const double big = ps.fixed_points.back().to_double();
  SvgCanvas svg(-0.1 * big, 2.1 * big, -0.05 * big, 2.1 * big, 640);
  svg.line(-0.1 * big, 0, 2.1 * big, 0, "axis");
  svg.line(0, 0, 0, 2.1 * big, "axis");
  for (std::size_t n = 0; n < ps.fixed_points.size(); ++n) {
    const double x = ps.fixed_points[n].to_double();
    svg.circle(x, x, x, "horocycle");
    svg.dot(0, x, "point");
    svg.text(0, x, " t = " + ps.times[n].str(4), "label");
  }
  return svg.str("Position of the sequence of horocycles");
}

std::string render_region(const WindingSequence& ws, int n) {
  const double x = ws.pairs.fixed_points.at(n).to_double();
  const Point& z = ws.pulled_bases.at(n);
  std::vector<std::pair<double, double>> region{{0, 0}, {0, x}};
  // lower-left quarter of H_n, from q_n down to x_n
  for (int k = 0; k <= 90; ++k) {
    const double a = std::numbers::pi * (1.0 + 0.5 * k / 90);
    region.emplace_back(x + x * std::cos(a), x + x * std::sin(a));
  }
  SvgCanvas svg(-0.1 * x, 2.1 * x, -0.05 * x, 2.1 * x, 640);
  svg.polygon(region, "region");
  svg.circle(x, x, x, "horocycle");
  svg.line(-0.1 * x, 0, 2.1 * x, 0, "axis");
  svg.line(0, 0, 0, 2.1 * x, "axis");
  svg.dot(z.x.to_double(), z.y.to_double(), "point");
  svg.text(z.x.to_double(), z.y.to_double(), " beta_n^-1 i", "label");
  svg.text(0.05 * x, 0.3 * x, "R_" + std::to_string(n), "label");
  return svg.str("Region R_" + std::to_string(n));
}

}  // namespace horoflow
