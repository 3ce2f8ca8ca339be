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

#ifndef TORUSPENNY_CATALOG_HPP_
#define TORUSPENNY_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toruspenny/packing.hpp"

namespace toruspenny {

// Five-point K5 packing with contacts at distance 1/sqrt(5). Exact.
Configuration k5_config();

// Six-point K3,3 packing with contacts at distance 5 sqrt(2) / 18. Exact.
Configuration k33_config();

// Optimal six-point packing, contact graph K_{2,2,2}. Numeric.
Configuration octahedral_config();

// l = (1 + 3 sqrt(3) - sqrt(4 + 6 sqrt(3))) / 6
double octahedral_diameter();
// 5 sqrt(2) / 18
double k33_diameter();
// 1 / sqrt(5)
double k5_diameter();

struct DrawingEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Geodesic representative: configuration[from] + delta == configuration[to]
  // modulo the lattice.
  Displacement displacement;
};

struct ToroidalDrawing {
  Configuration configuration;
  std::vector<DrawingEdge> edges;
};

// Vertices k * (1/7, 3/7) for k = 0..6; all 21 pairs joined along the
// shortest representative. Exact.
ToroidalDrawing k7_lattice_drawing();

// k7_lattice_drawing() without `removed_vertex` (0..6); remaining vertices
// keep their relative order and are renumbered 0..5.
ToroidalDrawing k6_drawing(std::size_t removed_vertex);

// Straight minimal-displacement edges for every contact of `config`.
ToroidalDrawing contact_drawing(const Configuration& config, double tol = kDefaultContactTol);

struct DrawingVerdict {
  bool pass = false;
  std::vector<std::pair<std::size_t, std::size_t>> crossings;  // edge indices
};

// Throws kInvalidInput for an edge whose displacement does not connect its
// endpoints (within 1e-12) or has norm >= 1. Exact configurations are
// checked in rational arithmetic.
DrawingVerdict verify_drawing(const ToroidalDrawing& drawing);

// Names accepted by catalog_config, in listing order.
std::vector<std::string> catalog_names();

// "k5", "k33", "octahedron"; case-insensitive. Throws kCatalog otherwise.
Configuration catalog_config(std::string_view name);

}  // namespace toruspenny

#endif  // TORUSPENNY_CATALOG_HPP_
