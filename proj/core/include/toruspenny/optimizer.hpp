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

#ifndef TORUSPENNY_OPTIMIZER_HPP_
#define TORUSPENNY_OPTIMIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toruspenny/graph.hpp"
#include "toruspenny/packing.hpp"

namespace toruspenny {

enum class StepRule {
  kArmijoBacktracking,  // adaptive step, halved until sufficient increase
  kFixed,               // constant step `initial_step`
};

struct OptimizerParams {
  int restarts = 50;
  // Iteration cap per annealing stage, and for each contact solve.
  int max_iterations = 1000;
  std::vector<double> softmin_beta_schedule{50, 100, 200, 400, 800, 1600, 3200};
  StepRule step_rule = StepRule::kArmijoBacktracking;
  double initial_step = 1e-3;
  // Gradient-norm threshold ending an annealing stage.
  double convergence_tol = 1e-10;
  std::uint64_t seed = 0;
  // Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 1;
  bool polish = true;
};

// Throws kInvalidInput when restarts < 1, convergence_tol <= 0 or the
// schedule is empty or not strictly increasing.
void validate(const OptimizerParams& params);

struct SoftminEvaluation {
  double value = 0.0;
  std::vector<double> gradient;  // (x0, y0, x1, y1, ...)
};

// -(1/beta) log sum exp(-beta |d|^2) over all pairs and the nine lattice
// images around each pair's minimal displacement. A smooth lower bound on
// the squared packing diameter.
SoftminEvaluation softmin_surrogate(std::span<const Point> points, double beta);

struct OptimizeResult {
  Configuration configuration;
  double diameter = 0.0;
  std::size_t best_restart = 0;
  std::vector<double> restart_diameters;
};

// Best of `restarts` annealed soft-min ascents, each polished by solving the
// active contact equations. Deterministic for a fixed seed at any thread
// count. Throws kDegenerateConfiguration for n < 2, kSize for n > 64.
OptimizeResult maximize_min_distance(int n, const OptimizerParams& params = {});

struct RefineOptions {
  int max_iterations = 200;
  // Converged when every |d_ij|^2 - l^2 residual is below this.
  double tol = 1e-13;
  // After reaching the contact manifold, move along it to the nearest
  // critical point of the diameter. Flexible systems (K3,3 has a two-parameter
  // family of equal-tangency realizations) otherwise stop wherever the
  // projection lands.
  bool stationary_diameter = true;
  // Reject solutions in which a non-edge pair is closer than the diameter
  // or an edge no longer uses a shortest translate.
  bool require_packing = true;
};

struct RefineResult {
  Configuration configuration;
  double diameter = 0.0;
  int iterations = 0;
  double max_residual = 0.0;
  // Residual norm after each accepted step (non-increasing).
  std::vector<double> residual_history;
};

// Damped Gauss-Newton on |p_i - p_j + m_ij|^2 - l^2 = 0 over the edges of
// `target`, with point 0 pinned and each m_ij frozen from the initial guess.
// Throws kInvalidInput on a size mismatch, kStructure when the initial
// translates are ambiguous or the solution is not a packing, kConvergence
// when the iteration cap is hit.
RefineResult refine_contacts(const Configuration& initial, const SmallGraph& target,
                             const RefineOptions& options = {});

struct SurveyTarget {
  std::string name;
  SmallGraph graph;
  // Known realization; seeds trial 0 and defines the diameter filter.
  std::optional<Configuration> reference;
};

// "k33", "k5" or "octahedron" paired with its catalog configuration.
SurveyTarget survey_target(std::string_view name);

struct SurveyClass {
  Configuration representative;
  int hits = 0;
  double diameter = 0.0;
  std::size_t first_trial = 0;
};

struct SurveyResult {
  int trials = 0;
  // Realizations at the reference diameter whose contact graph is exactly
  // the target, clustered up to isometry and relabeling.
  std::vector<SurveyClass> classes;
  // Every converged penny realization of the target, any diameter.
  std::vector<SurveyClass> unfiltered_classes;
  // Trials where refinement did not converge or did not yield a packing.
  int failures = 0;
  // Converged trials removed by the diameter / exact-contact filter.
  int filtered_out = 0;
  // Index into `classes` of the reference configuration's class.
  std::optional<std::size_t> reference_class;
};

inline constexpr double kSurveyDiameterTol = 1e-9;
inline constexpr double kSurveyContactTol = 1e-9;

// Random starts, each labelled to best fit the target's contact pattern, are
// refined onto the target's contact equations and clustered with
// find_isometry at kDefaultIsometryTol. `params.max_iterations` caps each
// refinement; `params.seed` and `params.threads` are honoured.
SurveyResult uniqueness_survey(const SurveyTarget& target, int trials,
                               const OptimizerParams& params = {});

}  // namespace toruspenny

#endif  // TORUSPENNY_OPTIMIZER_HPP_
