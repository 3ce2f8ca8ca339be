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

#ifndef TORUSPENNY_RENDER_HPP_
#define TORUSPENNY_RENDER_HPP_

#include <string>

#include "toruspenny/catalog.hpp"
#include "toruspenny/packing.hpp"

namespace toruspenny {

struct StrokeStyle {
  std::string fill = "none";
  std::string stroke = "#000000";
  double width = 1.0;
};

struct RenderOptions {
  int tiling = 1;  // k x k copies of the fundamental domain, 1..5
  int canvas_size = 600;
  bool show_edges = true;
  bool show_labels = false;
  StrokeStyle circle_style{"#dbe9f6", "#1f4e79", 1.5};
  StrokeStyle edge_style{"none", "#c0392b", 1.5};
};

// Throws kInvalidInput when tiling is outside 1..5 or canvas_size < 64.
void validate(const RenderOptions& opts);

// SVG 1.1 document: k^2 circles of radius diameter/2 per point and, when
// show_edges is set, one <g class="edge"> per contact realization. With a
// single tile, edges leaving the domain are cut at the boundary and the
// pieces re-entered on the opposite side; tiled views draw whole segments in
// every copy. Output is byte-stable for identical input.
std::string render_packing(const Configuration& config, const ContactGraph& contacts,
                           const RenderOptions& opts = {});

// Vertices as dots and edges as geodesic segments, same conventions.
std::string render_drawing(const ToroidalDrawing& drawing, const RenderOptions& opts = {});

}  // namespace toruspenny

#endif  // TORUSPENNY_RENDER_HPP_
