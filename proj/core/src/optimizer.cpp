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

#include "toruspenny/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "contact_solver.hpp"
#include "parallel.hpp"
#include "toruspenny/error.hpp"
#include "toruspenny/random.hpp"

namespace toruspenny {
namespace {

constexpr int kMaxOptimizePoints = 64;

double min_pair_distance(std::span<const Point> pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, torus_distance(pts[i], pts[j]));
  return best;
}

void anneal_stage(std::vector<Point>& pts, double beta, const OptimizerParams& params) {
  SoftminEvaluation current = softmin_surrogate(pts, beta);
  double step = params.initial_step;
  std::vector<Point> trial(pts.size());
  for (int it = 0; it < params.max_iterations; ++it) {
    double g2 = 0.0;
    for (double g : current.gradient) g2 += g * g;
    if (std::sqrt(g2) < params.convergence_tol) break;

    auto move = [&](double t) {
      for (std::size_t v = 0; v < pts.size(); ++v) {
        trial[v] = wrap(Point{pts[v].x + t * current.gradient[2 * v],
                         pts[v].y + t * current.gradient[2 * v + 1]});
      }
    };

    if (params.step_rule == StepRule::kFixed) {
      move(step);
      pts = trial;
      current = softmin_surrogate(pts, beta);
      continue;
    }

    bool accepted = false;
    while (step > 1e-14) {
      move(step);
      SoftminEvaluation next = softmin_surrogate(trial, beta);
      if (next.value >= current.value + 1e-4 * step * g2) {
        pts = trial;
        current = std::move(next);
        step *= 2.0;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
}

// Active-set polish: treat every (pair, translate) within a relative band of
// the current minimum as an equality contact and solve for the stationary
// diameter. Bands are tried from loose to tight; the first strict
// improvement restarts the scan.
std::vector<Point> polish(std::vector<Point> pts, const OptimizerParams& params) {
  double best = min_pair_distance(pts);
  constexpr double kBands[] = {3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
  for (int round = 0; round < 6; ++round) {
    bool improved = false;
    for (double band : kBands) {
      std::vector<detail::ContactConstraint> active;
      const double limit = best * (1.0 + band);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          for (int mx = -1; mx <= 1; ++mx) {
            for (int my = -1; my <= 1; ++my) {
              const double dx = pts[j].x - pts[i].x + mx;
              const double dy = pts[j].y - pts[i].y + my;
              if (std::hypot(dx, dy) <= limit) active.push_back({i, j, {mx, my}});
            }
          }
        }
      }
      detail::ContactSolveOptions opts;
      opts.max_iterations = std::max(params.max_iterations, 50);
      opts.tol = 1e-14;
      opts.diameter_phase = detail::DiameterPhase::kAscend;
      const auto solved = detail::solve_contacts(pts, active, best, opts);
      if (!solved.converged) continue;
      std::vector<Point> candidate;
      for (const Point& p : solved.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) break;
        candidate.push_back(wrap(p));
      }
      if (candidate.size() != pts.size()) continue;
      const double d = min_pair_distance(candidate);
      if (d > best + 1e-15) {
        pts = std::move(candidate);
        best = d;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return pts;
}

}  // namespace

void validate(const OptimizerParams& params) {
  if (params.restarts < 1) throw Error(Errc::kInvalidInput, "restarts must be >= 1");
  if (!(params.convergence_tol > 0.0)) {
    throw Error(Errc::kInvalidInput, "convergence_tol must be > 0");
  }
  if (params.max_iterations < 0) throw Error(Errc::kInvalidInput, "max_iterations must be >= 0");
  if (params.softmin_beta_schedule.empty()) {
    throw Error(Errc::kInvalidInput, "beta schedule is empty");
  }
  for (std::size_t k = 0; k < params.softmin_beta_schedule.size(); ++k) {
    const double b = params.softmin_beta_schedule[k];
    if (!(b > 0.0) || (k > 0 && !(b > params.softmin_beta_schedule[k - 1]))) {
      throw Error(Errc::kInvalidInput, "beta schedule must be positive and strictly increasing");
    }
  }
}

SoftminEvaluation softmin_surrogate(std::span<const Point> points, double beta) {
  const std::size_t n = points.size();
  struct Term {
    std::size_t i, j;
    Point d;
    double s;
  };
  std::vector<Term> terms;
  terms.reserve(n * (n - 1) / 2 * 9);
  double smin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point d0 = min_displacement(points[i], points[j]).delta;
      for (int mx = -1; mx <= 1; ++mx) {
        for (int my = -1; my <= 1; ++my) {
          const Point d{d0.x + mx, d0.y + my};
          const double s = d.x * d.x + d.y * d.y;
          terms.push_back({i, j, d, s});
          smin = std::min(smin, s);
        }
      }
    }
  }
  SoftminEvaluation out;
  out.gradient.assign(2 * n, 0.0);
  double z = 0.0;
  for (const Term& t : terms) {
    const double w = std::exp(-beta * (t.s - smin));
    z += w;
    out.gradient[2 * t.j] += 2.0 * w * t.d.x;
    out.gradient[2 * t.j + 1] += 2.0 * w * t.d.y;
    out.gradient[2 * t.i] -= 2.0 * w * t.d.x;
    out.gradient[2 * t.i + 1] -= 2.0 * w * t.d.y;
  }
  for (double& g : out.gradient) g /= z;
  out.value = smin - std::log(z) / beta;
  return out;
}

OptimizeResult maximize_min_distance(int n, const OptimizerParams& params) {
  if (n < 2) {
    throw Error(Errc::kDegenerateConfiguration,
                "need at least two points, got " + std::to_string(n));
  }
  if (n > kMaxOptimizePoints) {
    throw Error(Errc::kSize, "at most " + std::to_string(kMaxOptimizePoints) + " points, got " +
                                 std::to_string(n));
  }
  validate(params);

  const auto restarts = static_cast<std::size_t>(params.restarts);
  std::vector<std::vector<Point>> finals(restarts);
  std::vector<double> diameters(restarts);
  detail::parallel_for(restarts, params.threads, [&](std::size_t r) {
    CounterRng rng(params.seed, r);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (Point& p : pts) p = wrap(Point{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
    for (double beta : params.softmin_beta_schedule) anneal_stage(pts, beta, params);
    if (params.polish) pts = polish(std::move(pts), params);
    diameters[r] = min_pair_distance(pts);
    finals[r] = std::move(pts);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (diameters[r] > diameters[best]) best = r;
  }
  OptimizeResult out;
  out.configuration = Configuration::numeric(finals[best], "optimized n=" + std::to_string(n));
  out.diameter = diameters[best];
  out.best_restart = best;
  out.restart_diameters = std::move(diameters);
  return out;
}

RefineResult refine_contacts(const Configuration& initial, const SmallGraph& target,
                             const RefineOptions& options) {
  if (static_cast<std::size_t>(target.size()) != initial.size()) {
    throw Error(Errc::kInvalidInput, "target has " + std::to_string(target.size()) +
                                         " vertices, configuration has " +
                                         std::to_string(initial.size()));
  }
  const auto edges = target.edges();
  if (edges.empty()) throw Error(Errc::kStructure, "target graph has no edges");

  const auto pts = initial.points();
  std::vector<detail::ContactConstraint> constraints;
  double sum_sq = 0.0;
  for (auto [u, v] : edges) {
    const auto i = static_cast<std::size_t>(u);
    const auto j = static_cast<std::size_t>(v);
    std::vector<Displacement> shortest;
    try {
      shortest = realizing_displacements(pts[i], pts[j], 1e-9);
    } catch (const Error&) {
      throw Error(Errc::kStructure, "points " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " coincide");
    }
    if (shortest.size() != 1) {
      throw Error(Errc::kStructure, "edge (" + std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ") has " +
                                        std::to_string(shortest.size()) +
                                        " shortest translates; offset is ambiguous");
    }
    constraints.push_back({i, j, shortest.front().offset});
    sum_sq += norm_squared(shortest.front().delta);
  }

  detail::ContactSolveOptions opts;
  opts.max_iterations = options.max_iterations;
  opts.tol = options.tol;
  opts.diameter_phase = options.stationary_diameter ? detail::DiameterPhase::kStationary
                                                   : detail::DiameterPhase::kNone;
  auto solved = detail::solve_contacts(pts, constraints,
                                       std::sqrt(sum_sq / static_cast<double>(edges.size())), opts);
  if (!solved.converged) {
    throw Error(Errc::kConvergence,
                "contact refinement did not converge after " + std::to_string(solved.iterations) +
                    " iterations (max residual " + std::to_string(solved.max_residual) + ")");
  }
  for (const Point& p : solved.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(Errc::kConvergence, "contact refinement diverged");
    }
  }

  RefineResult out;
  out.configuration = Configuration::numeric(solved.points, initial.label());
  out.diameter = solved.diameter;
  out.iterations = solved.iterations;
  out.max_residual = solved.max_residual;
  out.residual_history = std::move(solved.residual_history);

  if (options.require_packing) {
    const double floor_d = out.diameter * (1.0 - 1e-9);
    const auto res = out.configuration.points();
    for (std::size_t i = 0; i < res.size(); ++i) {
      for (std::size_t j = i + 1; j < res.size(); ++j) {
        const double d = torus_distance(res[i], res[j]);
        if (d < floor_d) {
          const bool edge = target.has_edge(static_cast<int>(i), static_cast<int>(j));
          throw Error(Errc::kStructure,
                      std::string(edge ? "edge" : "non-edge") + " pair (" + std::to_string(i + 1) +
                          ", " + std::to_string(j + 1) + ") at distance " + std::to_string(d) +
                          " is below the contact diameter " + std::to_string(out.diameter));
        }
      }
    }
  }
  return out;
}

}  // namespace toruspenny
