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

#ifndef TORUSPENNY_TESTS_TEST_UTIL_HPP_
#define TORUSPENNY_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "toruspenny/graph.hpp"
#include "toruspenny/torus.hpp"

namespace toruspenny::testing {

// Reference packing coordinates typed in independently of the catalog, as doubles.
inline std::vector<Point> k5_reference_points() {
  return {{-0.4, 0.4}, {-0.2, 0.0}, {0.0, -0.4}, {0.4, -0.2}, {0.2, 0.2}};
}

inline std::vector<Point> k33_reference_points() {
  return {{13.0 / 36, -13.0 / 36}, {11.0 / 36, 1.0 / 36},  {1.0 / 36, 11.0 / 36},
          {-13.0 / 36, 13.0 / 36}, {-11.0 / 36, -1.0 / 36}, {-1.0 / 36, -11.0 / 36}};
}

// Closed form of the six-point optimum's diameter.
inline double octahedral_l() {
  return (1.0 + 3.0 * std::sqrt(3.0) - std::sqrt(4.0 + 6.0 * std::sqrt(3.0))) / 6.0;
}

// Brute force over a 5x5 block of lattice translates; slower and independent
// of the per-coordinate reduction used by the library.
inline double brute_distance(Point p, Point q) {
  double best = std::numeric_limits<double>::infinity();
  for (int mx = -2; mx <= 2; ++mx) {
    for (int my = -2; my <= 2; ++my) {
      best = std::min(best, std::hypot(q.x - p.x + mx, q.y - p.y + my));
    }
  }
  return best;
}

inline double brute_min_distance(const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, brute_distance(pts[i], pts[j]));
    }
  }
  return best;
}

// Isomorphism by trying all n! bijections.
inline bool brute_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!h.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline SmallGraph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  SmallGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  return {u(rng), u(rng)};
}

}  // namespace toruspenny::testing

#endif  // TORUSPENNY_TESTS_TEST_UTIL_HPP_
