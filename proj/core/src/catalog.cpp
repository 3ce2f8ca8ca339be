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

#include "toruspenny/catalog.hpp"

#include <cctype>
#include <cmath>

#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

Rational q(long num, long den) { return Rational(num, den); }

// Lattice offset m with from + delta = to + m, if delta lands on `to`.
std::optional<LatticeOffset> landing_offset(Point from, Point to, Point delta) {
  const double ex = from.x + delta.x - to.x;
  const double ey = from.y + delta.y - to.y;
  const double mx = std::round(ex);
  const double my = std::round(ey);
  if (std::abs(ex - mx) > 1e-12 || std::abs(ey - my) > 1e-12) return std::nullopt;
  return LatticeOffset{static_cast<int>(mx), static_cast<int>(my)};
}

}  // namespace

Configuration k5_config() {
  return Configuration::exact({{q(-2, 5), q(2, 5)},
                               {q(-1, 5), q(0, 1)},
                               {q(0, 1), q(-2, 5)},
                               {q(2, 5), q(-1, 5)},
                               {q(1, 5), q(1, 5)}},
                              "K5");
}

Configuration k33_config() {
  return Configuration::exact({{q(13, 36), q(-13, 36)},
                               {q(11, 36), q(1, 36)},
                               {q(1, 36), q(11, 36)},
                               {q(-13, 36), q(13, 36)},
                               {q(-11, 36), q(-1, 36)},
                               {q(-1, 36), q(-11, 36)}},
                              "K33");
}

double octahedral_diameter() {
  const double r3 = std::sqrt(3.0);
  return (1.0 + 3.0 * r3 - std::sqrt(4.0 + 6.0 * r3)) / 6.0;
}

double k33_diameter() { return 5.0 * std::sqrt(2.0) / 18.0; }

double k5_diameter() { return 1.0 / std::sqrt(5.0); }

Configuration octahedral_config() {
  // Nodes 1, 2, 5 form an equilateral triangle of side l straddling the seam
  // y = -1/2; nodes 3, 4, 6 form the mirrored triangle straddling y = 0.
  // `rise` is the horizontal gap between node 6 and the line through nodes 1
  // and 5 that puts node 6 at distance l from both.
  const double l = octahedral_diameter();
  const double h = std::sqrt(3.0) / 2.0 * l;
  const double left = (l - 1.0) / 2.0;
  const double rise = 0.5 * std::sqrt((3.0 * l - 1.0) * (l + 1.0));
  return Configuration::numeric({{left, left},
                                 {(1.0 + std::sqrt(3.0)) / 2.0 * l - 0.5, -0.5},
                                 {left + h + rise, -l / 2.0},
                                 {left + h + rise, l / 2.0},
                                 {left, -left},
                                 {left + rise, 0.0}},
                                "octahedron");
}

ToroidalDrawing k7_lattice_drawing() {
  const ExactPoint step{q(1, 7), q(3, 7)};
  std::vector<ExactPoint> pts;
  for (int k = 0; k < 7; ++k) pts.push_back(wrap(ExactPoint{step.x * k, step.y * k}));
  ToroidalDrawing d{Configuration::exact(std::move(pts), "K7 lattice"), {}};
  const auto exact = d.configuration.exact_points();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      const ExactDisplacement m = min_displacement(exact[i], exact[j]);
      d.edges.push_back({i, j, {to_point(m.delta), m.offset}});
    }
  }
  return d;
}

ToroidalDrawing k6_drawing(std::size_t removed_vertex) {
  if (removed_vertex > 6) {
    throw Error(Errc::kInvalidInput,
                "removed vertex " + std::to_string(removed_vertex) + " outside 0..6");
  }
  const ToroidalDrawing k7 = k7_lattice_drawing();
  std::vector<ExactPoint> pts;
  const auto exact = k7.configuration.exact_points();
  for (std::size_t k = 0; k < 7; ++k)
    if (k != removed_vertex) pts.push_back(exact[k]);
  auto renumber = [&](std::size_t v) { return v > removed_vertex ? v - 1 : v; };
  std::string label = "K6 (K7 lattice minus " + std::to_string(removed_vertex) + ")";
  ToroidalDrawing d{Configuration::exact(std::move(pts), std::move(label)), {}};
  for (const auto& e : k7.edges) {
    if (e.from == removed_vertex || e.to == removed_vertex) continue;
    d.edges.push_back({renumber(e.from), renumber(e.to), e.displacement});
  }
  return d;
}

ToroidalDrawing contact_drawing(const Configuration& config, double tol) {
  const ContactGraph g = contact_graph(config, tol);
  ToroidalDrawing d{config, {}};
  for (const auto& e : g.edges) d.edges.push_back({e.i, e.j, e.realizations.front()});
  return d;
}

DrawingVerdict verify_drawing(const ToroidalDrawing& drawing) {
  const Configuration& config = drawing.configuration;
  const std::size_t n = config.size();
  std::vector<Segment> numeric;
  std::vector<ExactSegment> exact;
  for (const auto& e : drawing.edges) {
    if (e.from >= n || e.to >= n || e.from == e.to) {
      throw Error(Errc::kInvalidInput, "edge endpoints out of range");
    }
    const Point delta = e.displacement.delta;
    if (std::hypot(delta.x, delta.y) >= 1.0) {
      throw Error(Errc::kInvalidInput, "edge displacement has norm >= 1");
    }
    const auto offset = landing_offset(config[e.from], config[e.to], delta);
    if (!offset) {
      throw Error(Errc::kInvalidInput, "edge (" + std::to_string(e.from) + ", " +
                                           std::to_string(e.to) +
                                           ") does not land on its endpoint");
    }
    numeric.push_back({config[e.from], delta});
    if (config.exact_mode()) {
      const auto pts = config.exact_points();
      const ExactPoint d = pts[e.to] - pts[e.from] + ExactPoint{offset->mx, offset->my};
      exact.push_back({pts[e.from], d});
    }
  }
  DrawingVerdict verdict;
  for (std::size_t a = 0; a < drawing.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < drawing.edges.size(); ++b) {
      const bool cross = config.exact_mode() ? segments_cross(exact[a], exact[b])
                                             : segments_cross(numeric[a], numeric[b]);
      if (cross) verdict.crossings.emplace_back(a, b);
    }
  }
  verdict.pass = verdict.crossings.empty();
  return verdict;
}

std::vector<std::string> catalog_names() { return {"k5", "k33", "octahedron"}; }

Configuration catalog_config(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "k5") return k5_config();
  if (key == "k33" || key == "k3,3") return k33_config();
  if (key == "octahedron") return octahedral_config();
  throw Error(Errc::kCatalog, "unknown catalog configuration '" + std::string(name) + "'");
}

}  // namespace toruspenny
