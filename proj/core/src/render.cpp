// Copyright 2026 The toruspenny Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toruspenny/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

constexpr double kMarginFraction = 0.04;
constexpr double kVertexRadiusPx = 4.0;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// World square [-k/2, k/2]^2 mapped onto the canvas with y pointing up.
class Canvas {
 public:
  explicit Canvas(const RenderOptions& opts)
      : k_(opts.tiling),
        size_(opts.canvas_size),
        margin_(kMarginFraction * opts.canvas_size),
        scale_((opts.canvas_size - 2.0 * margin_) / opts.tiling) {}

  double x(double wx) const { return margin_ + (wx + 0.5 * k_) * scale_; }
  double y(double wy) const { return margin_ + (0.5 * k_ - wy) * scale_; }
  double length(double w) const { return w * scale_; }
  int tiles() const { return k_; }
  double tile_shift(int t) const { return t - 0.5 * (k_ - 1); }

  void open(std::ostringstream& out, const std::string& title) const {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size_
        << "\" height=\"" << size_ << "\" viewBox=\"0 0 " << size_ << " " << size_ << "\">\n"
        << "<!-- torus [-1/2,1/2)^2 tiled " << k_ << "x" << k_ << "; canvas_x = " << fixed6(margin_)
        << " + (x + " << fixed6(0.5 * k_) << ") * " << fixed6(scale_) << ", canvas_y = "
        << fixed6(margin_) << " + (" << fixed6(0.5 * k_) << " - y) * " << fixed6(scale_)
        << " -->\n";
    if (!title.empty()) out << "<title>" << escape(title) << "</title>\n";
    const double lo = margin_;
    const double extent = size_ - 2.0 * margin_;
    out << "<defs><clipPath id=\"domain\"><rect x=\"" << fixed6(lo) << "\" y=\"" << fixed6(lo)
        << "\" width=\"" << fixed6(extent) << "\" height=\"" << fixed6(extent)
        << "\"/></clipPath></defs>\n";
    out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << size_ << "\" height=\""
        << size_ << "\" fill=\"#ffffff\"/>\n";
    out << "<g class=\"tiles\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n";
    for (int tx = 0; tx < k_; ++tx) {
      for (int ty = 0; ty < k_; ++ty) {
        const double sx = tile_shift(tx);
        const double sy = tile_shift(ty);
        const bool home = sx == 0.0 && sy == 0.0;
        out << "<rect class=\"" << (home || k_ % 2 == 0 ? "tile domain" : "tile") << "\" x=\""
            << fixed6(x(sx - 0.5)) << "\" y=\"" << fixed6(y(sy + 0.5)) << "\" width=\""
            << fixed6(length(1.0)) << "\" height=\"" << fixed6(length(1.0)) << "\"";
        if (home) out << " stroke=\"#333333\" stroke-width=\"2\"";
        out << "/>\n";
      }
    }
    out << "</g>\n<g clip-path=\"url(#domain)\">\n";
  }

  void close(std::ostringstream& out) const { out << "</g>\n</svg>\n"; }

  void line(std::ostringstream& out, Point a, Point b) const {
    out << "<line x1=\"" << fixed6(x(a.x)) << "\" y1=\"" << fixed6(y(a.y)) << "\" x2=\""
        << fixed6(x(b.x)) << "\" y2=\"" << fixed6(y(b.y)) << "\"/>";
  }

 private:
  int k_;
  int size_;
  double margin_;
  double scale_;
};

// Cuts start -> start + delta at the lines x = +-1/2 and y = +-1/2 and moves
// each piece back into the fundamental domain.
std::vector<std::pair<Point, Point>> wrapped_pieces(Point start, Point delta) {
  std::vector<double> cuts{0.0, 1.0};
  for (double bound : {-0.5, 0.5}) {
    if (delta.x != 0.0) cuts.push_back((bound - start.x) / delta.x);
    if (delta.y != 0.0) cuts.push_back((bound - start.y) / delta.y);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<Point, Point>> pieces;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double t0 = std::max(cuts[k], 0.0);
    const double t1 = std::min(cuts[k + 1], 1.0);
    if (t1 - t0 <= 1e-12) continue;
    const double tm = 0.5 * (t0 + t1);
    const double shift_x = std::floor(start.x + tm * delta.x + 0.5);
    const double shift_y = std::floor(start.y + tm * delta.y + 0.5);
    pieces.push_back({{start.x + t0 * delta.x - shift_x, start.y + t0 * delta.y - shift_y},
                      {start.x + t1 * delta.x - shift_x, start.y + t1 * delta.y - shift_y}});
  }
  return pieces;
}

struct EdgeSpec {
  std::size_t i;
  std::size_t j;
  Point delta;
};

void emit_edges(std::ostringstream& out, const Canvas& canvas, std::span<const Point> pts,
                const std::vector<EdgeSpec>& edges, const StrokeStyle& style) {
  out << "<g class=\"edges\" fill=\"none\" stroke=\"" << escape(style.stroke)
      << "\" stroke-width=\"" << fixed6(style.width) << "\" stroke-linecap=\"round\">\n";
  for (const auto& e : edges) {
    out << "<g class=\"edge\" data-from=\"" << e.i + 1 << "\" data-to=\"" << e.j + 1 << "\">";
    if (canvas.tiles() == 1) {
      for (const auto& [a, b] : wrapped_pieces(pts[e.i], e.delta)) canvas.line(out, a, b);
    } else {
      for (int tx = 0; tx < canvas.tiles(); ++tx) {
        for (int ty = 0; ty < canvas.tiles(); ++ty) {
          const Point a{pts[e.i].x + canvas.tile_shift(tx), pts[e.i].y + canvas.tile_shift(ty)};
          canvas.line(out, a, {a.x + e.delta.x, a.y + e.delta.y});
        }
      }
    }
    out << "</g>\n";
  }
  out << "</g>\n";
}

void emit_labels(std::ostringstream& out, const Canvas& canvas, std::span<const Point> pts,
                 double font_px) {
  out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << fixed6(font_px)
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#111111\">\n";
  for (int tx = 0; tx < canvas.tiles(); ++tx) {
    for (int ty = 0; ty < canvas.tiles(); ++ty) {
      for (std::size_t v = 0; v < pts.size(); ++v) {
        const double wx = pts[v].x + canvas.tile_shift(tx);
        const double wy = pts[v].y + canvas.tile_shift(ty);
        out << "<text x=\"" << fixed6(canvas.x(wx)) << "\" y=\"" << fixed6(canvas.y(wy)) << "\">"
            << v + 1 << "</text>\n";
      }
    }
  }
  out << "</g>\n";
}

void emit_circles(std::ostringstream& out, const Canvas& canvas, std::span<const Point> pts,
                  const char* cls, const char* group, double radius_px,
                  const StrokeStyle& style) {
  out << "<g class=\"" << group << "\" fill=\"" << escape(style.fill) << "\" stroke=\""
      << escape(style.stroke) << "\" stroke-width=\"" << fixed6(style.width) << "\">\n";
  for (int tx = 0; tx < canvas.tiles(); ++tx) {
    for (int ty = 0; ty < canvas.tiles(); ++ty) {
      for (const Point& p : pts) {
        const double wx = p.x + canvas.tile_shift(tx);
        const double wy = p.y + canvas.tile_shift(ty);
        out << "<circle class=\"" << cls << "\" cx=\"" << fixed6(canvas.x(wx)) << "\" cy=\""
            << fixed6(canvas.y(wy)) << "\" r=\"" << fixed6(radius_px) << "\"/>\n";
      }
    }
  }
  out << "</g>\n";
}

}  // namespace

void validate(const RenderOptions& opts) {
  if (opts.tiling < 1 || opts.tiling > 5) {
    throw Error(Errc::kInvalidInput, "tiling must be in 1..5, got " + std::to_string(opts.tiling));
  }
  if (opts.canvas_size < 64) {
    throw Error(Errc::kInvalidInput,
                "canvas size must be >= 64, got " + std::to_string(opts.canvas_size));
  }
}

std::string render_packing(const Configuration& config, const ContactGraph& contacts,
                           const RenderOptions& opts) {
  validate(opts);
  const auto pts = config.points();
  if (contacts.n != config.size()) {
    throw Error(Errc::kInvalidInput, "contact graph does not match the configuration size");
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : contacts.edges) {
    if (e.i >= pts.size() || e.j >= pts.size()) {
      throw Error(Errc::kInvalidInput, "contact edge out of range");
    }
    for (const auto& r : e.realizations) {
      const double ex = pts[e.i].x + r.delta.x - pts[e.j].x;
      const double ey = pts[e.i].y + r.delta.y - pts[e.j].y;
      if (std::abs(ex - std::round(ex)) > 1e-9 || std::abs(ey - std::round(ey)) > 1e-9) {
        throw Error(Errc::kInvalidInput, "contact edge does not connect its endpoints");
      }
      edges.push_back({e.i, e.j, r.delta});
    }
  }

  const Canvas canvas(opts);
  std::ostringstream out;
  canvas.open(out, config.label().value_or(""));
  emit_circles(out, canvas, pts, "penny", "pennies", canvas.length(contacts.diameter / 2.0),
               opts.circle_style);
  if (opts.show_edges) emit_edges(out, canvas, pts, edges, opts.edge_style);
  if (opts.show_labels) emit_labels(out, canvas, pts, canvas.length(contacts.diameter / 4.0));
  canvas.close(out);
  return out.str();
}

std::string render_drawing(const ToroidalDrawing& drawing, const RenderOptions& opts) {
  validate(opts);
  const Configuration& config = drawing.configuration;
  const auto pts = config.points();
  std::vector<EdgeSpec> edges;
  for (const auto& e : drawing.edges) {
    if (e.from >= pts.size() || e.to >= pts.size() || e.from == e.to) {
      throw Error(Errc::kInvalidInput, "drawing edge out of range");
    }
    const Point d = e.displacement.delta;
    const double ex = pts[e.from].x + d.x - pts[e.to].x;
    const double ey = pts[e.from].y + d.y - pts[e.to].y;
    if (std::abs(ex - std::round(ex)) > 1e-9 || std::abs(ey - std::round(ey)) > 1e-9) {
      throw Error(Errc::kInvalidInput, "drawing edge does not connect its endpoints");
    }
    edges.push_back({e.from, e.to, d});
  }

  const Canvas canvas(opts);
  std::ostringstream out;
  canvas.open(out, config.label().value_or(""));
  if (opts.show_edges) emit_edges(out, canvas, pts, edges, opts.edge_style);
  emit_circles(out, canvas, pts, "vertex", "vertices", kVertexRadiusPx,
               StrokeStyle{"#1f4e79", "#1f4e79", 1.0});
  if (opts.show_labels) emit_labels(out, canvas, pts, 3.0 * kVertexRadiusPx);
  canvas.close(out);
  return out.str();
}

}  // namespace toruspenny
