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

#ifndef TORUSPENNY_SRC_CONTACT_SOLVER_HPP_
#define TORUSPENNY_SRC_CONTACT_SOLVER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "toruspenny/torus.hpp"

namespace toruspenny::detail {

// |p_j - p_i + offset|^2 = l^2
struct ContactConstraint {
  std::size_t i = 0;
  std::size_t j = 0;
  LatticeOffset offset;
};

// What to do with the diameter once the contact equations hold.
enum class DiameterPhase {
  kNone,        // stop at the first point on the contact manifold
  kAscend,      // climb l along the manifold while it increases
  kStationary,  // Newton on the reduced gradient: nearest critical point of l
};

struct ContactSolveOptions {
  int max_iterations = 200;
  double tol = 1e-13;
  DiameterPhase diameter_phase = DiameterPhase::kAscend;
};

struct ContactSolveResult {
  std::vector<Point> points;  // unwrapped; point 0 unchanged
  double diameter = 0.0;
  int iterations = 0;
  double max_residual = 0.0;
  bool converged = false;
  std::vector<double> residual_history;
};

// Levenberg-Marquardt onto the contact manifold, then (optionally) reduced
// Newton steps along it towards a stationary point of l. Each linear solve
// counts as one iteration.
ContactSolveResult solve_contacts(std::span<const Point> initial,
                                  std::span<const ContactConstraint> constraints,
                                  double initial_diameter,
                                  const ContactSolveOptions& options);

}  // namespace toruspenny::detail

#endif  // TORUSPENNY_SRC_CONTACT_SOLVER_HPP_
