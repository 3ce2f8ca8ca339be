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

#ifndef TORUSPENNY_IO_HPP_
#define TORUSPENNY_IO_HPP_

// JSON interchange formats.
//
// Configuration:
//   {"label": string?, "torus": "unit-square-centered", "exact": bool,
//    "points": [[x, y], ...]}
// Coordinates are numbers or rational strings ("13/36"); exact mode requires
// rational strings (or integers).
//
// Graph:
//   {"n": int, "edges": [[i, j], ...]}   0-based, i < j
//
// Drawing: a configuration object with an extra
//   "edges": [{"from": i, "to": j, "delta": [dx, dy], "offset": [mx, my]}]

#include <string>
#include <string_view>

#include "toruspenny/catalog.hpp"
#include "toruspenny/graph.hpp"
#include "toruspenny/packing.hpp"

namespace toruspenny {

inline constexpr std::string_view kTorusTag = "unit-square-centered";

std::string configuration_to_json(const Configuration& config);
// Throws kInvalidInput for malformed documents and kMode for non-rational
// coordinates in exact mode.
Configuration configuration_from_json(std::string_view text);

std::string graph_to_json(const SmallGraph& graph);
SmallGraph graph_from_json(std::string_view text);

std::string drawing_to_json(const ToroidalDrawing& drawing);
ToroidalDrawing drawing_from_json(std::string_view text);

// True when the document carries drawing edges.
bool is_drawing_json(std::string_view text);

}  // namespace toruspenny

#endif  // TORUSPENNY_IO_HPP_
