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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "parallel.hpp"
#include "toruspenny/catalog.hpp"
#include "toruspenny/error.hpp"
#include "toruspenny/optimizer.hpp"
#include "toruspenny/random.hpp"

namespace toruspenny {
namespace {

constexpr int kMaxLabelingSearch = 8;
constexpr double kSeedNoise = 1e-3;

// order[v] = configuration point that plays target vertex v. Picks the
// labelling whose longest target edge is shortest relative to the closest
// non-edge, trying every permutation for small targets.
std::vector<std::size_t> best_labeling(std::span<const Point> pts, const SmallGraph& target) {
  const auto n = static_cast<std::size_t>(target.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (target.size() > kMaxLabelingSearch) return order;

  std::vector<double> d2(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) d2[i * n + j] = norm_squared(min_displacement(pts[i], pts[j]).delta);
    }
  }
  auto score = [&](const std::vector<std::size_t>& perm) {
    double longest_edge = 0.0;
    double shortest_edge = std::numeric_limits<double>::infinity();
    double shortest_gap = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const double d = d2[perm[u] * n + perm[v]];
        if (target.has_edge(static_cast<int>(u), static_cast<int>(v))) {
          longest_edge = std::max(longest_edge, d);
          shortest_edge = std::min(shortest_edge, d);
        } else {
          shortest_gap = std::min(shortest_gap, d);
        }
      }
    }
    return longest_edge - (std::isfinite(shortest_gap) ? shortest_gap : shortest_edge);
  };

  std::vector<std::size_t> perm = order;
  double best = score(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double s = score(perm);
    if (s < best) {
      best = s;
      order = perm;
    }
  }
  return order;
}

struct TrialOutcome {
  std::optional<RefineResult> refined;
};

bool add_to_classes(std::vector<SurveyClass>& classes, const Configuration& config,
                    double diameter, std::size_t trial) {
  for (auto& c : classes) {
    if (find_isometry(c.representative.points(), config.points(), kDefaultIsometryTol)) {
      ++c.hits;
      return false;
    }
  }
  classes.push_back({config, 1, diameter, trial});
  return true;
}

}  // namespace

SurveyTarget survey_target(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "k33" || key == "k3,3") return {"k33", named_graph("K33"), k33_config()};
  if (key == "k5") return {"k5", named_graph("K5"), k5_config()};
  if (key == "octahedron") return {"octahedron", named_graph("octahedron"), octahedral_config()};
  throw Error(Errc::kCatalog, "unknown survey target '" + std::string(name) + "'");
}

SurveyResult uniqueness_survey(const SurveyTarget& target, int trials,
                               const OptimizerParams& params) {
  if (trials < 1) throw Error(Errc::kInvalidInput, "trials must be >= 1");
  if (params.max_iterations < 0) throw Error(Errc::kInvalidInput, "max_iterations must be >= 0");
  const auto n = static_cast<std::size_t>(target.graph.size());
  if (n < 2) throw Error(Errc::kInvalidInput, "survey target needs at least two vertices");
  if (target.reference && target.reference->size() != n) {
    throw Error(Errc::kInvalidInput, "reference configuration size does not match the target");
  }

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  detail::parallel_for(outcomes.size(), params.threads, [&](std::size_t t) {
    CounterRng rng(params.seed, t);
    std::vector<Point> pts(n);
    if (t == 0 && target.reference) {
      const auto ref = target.reference->points();
      for (std::size_t v = 0; v < n; ++v) {
        pts[v] = {ref[v].x + rng.uniform(-kSeedNoise, kSeedNoise),
                  ref[v].y + rng.uniform(-kSeedNoise, kSeedNoise)};
      }
    } else {
      for (Point& p : pts) p = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    }
    Configuration start = Configuration::numeric(std::move(pts));
    start = start.permuted(best_labeling(start.points(), target.graph));

    RefineOptions opts;
    opts.max_iterations = params.max_iterations;
    try {
      outcomes[t].refined = refine_contacts(start, target.graph, opts);
    } catch (const Error& e) {
      if (e.code() != Errc::kConvergence && e.code() != Errc::kStructure) throw;
    }
  });

  const std::optional<double> reference_diameter =
      target.reference ? std::optional<double>(packing_diameter(*target.reference)) : std::nullopt;

  SurveyResult result;
  result.trials = trials;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const auto& refined = outcomes[t].refined;
    if (!refined) {
      ++result.failures;
      continue;
    }
    add_to_classes(result.unfiltered_classes, refined->configuration, refined->diameter, t);

    bool keep = !reference_diameter ||
                std::abs(refined->diameter - *reference_diameter) <= kSurveyDiameterTol;
    if (keep) {
      const ContactGraph contacts = contact_graph(refined->configuration, kSurveyContactTol);
      keep = is_isomorphic(contacts.to_small_graph(), target.graph).has_value();
    }
    if (keep) {
      add_to_classes(result.classes, refined->configuration, refined->diameter, t);
    } else {
      ++result.filtered_out;
    }
  }

  if (target.reference) {
    for (std::size_t k = 0; k < result.classes.size(); ++k) {
      if (find_isometry(target.reference->points(), result.classes[k].representative.points(),
                        kDefaultIsometryTol)) {
        result.reference_class = k;
        break;
      }
    }
  }
  return result;
}

}  // namespace toruspenny
