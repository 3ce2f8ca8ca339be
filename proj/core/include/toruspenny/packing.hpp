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

#ifndef TORUSPENNY_PACKING_HPP_
#define TORUSPENNY_PACKING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toruspenny/graph.hpp"
#include "toruspenny/rational.hpp"
#include "toruspenny/torus.hpp"

namespace toruspenny {

inline constexpr std::size_t kMaxConfigurationSize = 4096;
inline constexpr double kDefaultContactTol = 1e-9;

// Ordered points on the torus. An exact configuration keeps its rational
// coordinates alongside the rounded doubles.
class Configuration {
 public:
  Configuration() = default;

  // Both factories wrap into the canonical square and throw kInvalidInput
  // for non-finite input, kSize for an empty or oversized list.
  static Configuration numeric(std::vector<Point> points,
                               std::optional<std::string> label = std::nullopt);
  static Configuration exact(std::vector<ExactPoint> points,
                             std::optional<std::string> label = std::nullopt);

  std::size_t size() const noexcept { return points_.size(); }
  bool exact_mode() const noexcept { return exact_.has_value(); }

  std::span<const Point> points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  // Throws kMode when the configuration is not exact.
  std::span<const ExactPoint> exact_points() const;

  const std::optional<std::string>& label() const noexcept { return label_; }
  void set_label(std::optional<std::string> label) { label_ = std::move(label); }

  // Numeric image under g (exactness is dropped).
  Configuration transformed(const IsometryMap& g) const;
  // Exact image; throws kMode when not exact.
  Configuration transformed(const ExactIsometryMap& g) const;
  // result[i] = this[order[i]].
  Configuration permuted(std::span<const std::size_t> order) const;

 private:
  std::vector<Point> points_;
  std::optional<std::vector<ExactPoint>> exact_;
  std::optional<std::string> label_;
};

struct ContactEdge {
  std::size_t i = 0;
  std::size_t j = 0;  // i < j
  // Every lattice translate realizing the contact; more than one entry means
  // the circles touch along several geodesics.
  std::vector<Displacement> realizations;
};

struct ContactGraph {
  std::size_t n = 0;
  std::vector<ContactEdge> edges;  // sorted by (i, j)
  double diameter = 0.0;
  std::optional<Rational> diameter_squared_exact;

  std::vector<int> degrees() const;
  // Throws kSize when n exceeds SmallGraph::kMaxVertices.
  SmallGraph to_small_graph() const;
};

// Minimum pairwise torus distance. Throws kDegenerateConfiguration for n < 2.
double packing_diameter(const Configuration& config);

// Exact minimum squared distance. Throws kMode for numeric configurations.
Rational packing_diameter_squared_exact(const Configuration& config);

// Pairs at distance <= diameter * (1 + tol). An exact configuration with
// tol == 0 is classified in rational arithmetic. Coincident points raise
// kDegenerateConfiguration naming the (1-based) pair.
ContactGraph contact_graph(const Configuration& config, double tol = kDefaultContactTol);

struct PairDeviation {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
  double relative_deviation = 0.0;
};

struct PennyVerdict {
  bool pass = false;
  std::vector<std::string> diagnostics;
  // Among the |E(expected)| closest pairs, those whose distance is not the
  // packing diameter within tol.
  std::vector<PairDeviation> violations;
  // witness[v] = vertex of `expected` matched to configuration point v.
  std::optional<std::vector<int>> witness;
  std::optional<ContactGraph> contacts;
};

// A configuration is a penny realization of `expected` when its closest
// |E(expected)| pairs all sit at the packing diameter and the resulting
// contact graph is isomorphic to `expected`.
PennyVerdict verify_penny(const Configuration& config, const SmallGraph& expected,
                          double tol = kDefaultContactTol);

struct PackingReport {
  double diameter = 0.0;
  std::optional<Rational> diameter_squared_exact;
  ContactGraph contact_graph;
  std::vector<int> degree_sequence;
  std::optional<std::string> named_match;
  // Graph-theoretic fields are only filled for n <= SmallGraph::kMaxVertices.
  std::optional<bool> planar;
  std::optional<Bipartition> bipartite;
  std::optional<int> regular;
};

PackingReport analyze(const Configuration& config, double tol = kDefaultContactTol);

}  // namespace toruspenny

#endif  // TORUSPENNY_PACKING_HPP_
