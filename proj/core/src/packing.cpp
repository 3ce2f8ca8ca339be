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

#include "toruspenny/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > kMaxConfigurationSize) {
    throw Error(Errc::kSize, "configuration size " + std::to_string(n) +
                                 " outside [1, " + std::to_string(kMaxConfigurationSize) + "]");
  }
}

void require_pairs(const Configuration& config) {
  if (config.size() < 2) {
    throw Error(Errc::kDegenerateConfiguration,
                "packing diameter needs at least two points");
  }
}

[[noreturn]] void throw_coincident(std::size_t i, std::size_t j) {
  throw Error(Errc::kDegenerateConfiguration,
              "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                  " coincide");
}

bool use_exact(const Configuration& config, double tol) {
  return config.exact_mode() && tol == 0.0;
}

}  // namespace

Configuration Configuration::numeric(std::vector<Point> points,
                                     std::optional<std::string> label) {
  check_size(points.size());
  Configuration c;
  c.points_.reserve(points.size());
  for (const Point& p : points) c.points_.push_back(wrap(p));
  c.label_ = std::move(label);
  return c;
}

Configuration Configuration::exact(std::vector<ExactPoint> points,
                                   std::optional<std::string> label) {
  check_size(points.size());
  Configuration c;
  std::vector<ExactPoint> wrapped;
  wrapped.reserve(points.size());
  c.points_.reserve(points.size());
  for (const ExactPoint& p : points) {
    wrapped.push_back(wrap(p));
    c.points_.push_back(to_point(wrapped.back()));
  }
  c.exact_ = std::move(wrapped);
  c.label_ = std::move(label);
  return c;
}

std::span<const ExactPoint> Configuration::exact_points() const {
  if (!exact_) throw Error(Errc::kMode, "configuration is not in exact mode");
  return *exact_;
}

Configuration Configuration::transformed(const IsometryMap& g) const {
  std::vector<Point> out;
  out.reserve(size());
  for (const Point& p : points_) out.push_back(apply_isometry(g, p));
  return numeric(std::move(out), label_);
}

Configuration Configuration::transformed(const ExactIsometryMap& g) const {
  std::vector<ExactPoint> out;
  out.reserve(size());
  for (const ExactPoint& p : exact_points()) out.push_back(apply_isometry(g, p));
  return exact(std::move(out), label_);
}

Configuration Configuration::permuted(std::span<const std::size_t> order) const {
  if (order.size() != size()) throw Error(Errc::kInvalidInput, "permutation size mismatch");
  std::vector<char> hit(size());
  for (std::size_t k : order) {
    if (k >= size() || hit[k]) throw Error(Errc::kInvalidInput, "not a permutation");
    hit[k] = 1;
  }
  Configuration c;
  c.label_ = label_;
  for (std::size_t k : order) c.points_.push_back(points_[k]);
  if (exact_) {
    c.exact_.emplace();
    for (std::size_t k : order) c.exact_->push_back((*exact_)[k]);
  }
  return c;
}

// ---------------------------------------------------------------------------

std::vector<int> ContactGraph::degrees() const {
  std::vector<int> out(n, 0);
  for (const auto& e : edges) {
    ++out[e.i];
    ++out[e.j];
  }
  return out;
}

SmallGraph ContactGraph::to_small_graph() const {
  if (n > static_cast<std::size_t>(SmallGraph::kMaxVertices)) {
    throw Error(Errc::kSize, "contact graph has " + std::to_string(n) +
                                 " vertices; graph analysis is limited to " +
                                 std::to_string(SmallGraph::kMaxVertices));
  }
  SmallGraph g(static_cast<int>(n));
  for (const auto& e : edges) g.add_edge(static_cast<int>(e.i), static_cast<int>(e.j));
  return g;
}

double packing_diameter(const Configuration& config) {
  require_pairs(config);
  if (config.exact_mode()) {
    return std::sqrt(to_double(packing_diameter_squared_exact(config)));
  }
  const auto pts = config.points();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, torus_distance(pts[i], pts[j]));
  return best;
}

Rational packing_diameter_squared_exact(const Configuration& config) {
  require_pairs(config);
  const auto pts = config.exact_points();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rational d = torus_distance_squared(pts[i], pts[j]);
      if (!best || d < *best) best = std::move(d);
    }
  }
  return *best;
}

ContactGraph contact_graph(const Configuration& config, double tol) {
  require_pairs(config);
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw Error(Errc::kInvalidInput, "contact tolerance must be finite and >= 0");
  }
  const std::size_t n = config.size();
  ContactGraph out;
  out.n = n;

  if (use_exact(config, tol)) {
    const auto pts = config.exact_points();
    std::vector<Rational> d2(n * n);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d2[i * n + j] = torus_distance_squared(pts[i], pts[j]);
        if (d2[i * n + j] == 0) throw_coincident(i, j);
        if (!best || d2[i * n + j] < *best) best = d2[i * n + j];
      }
    }
    out.diameter_squared_exact = *best;
    out.diameter = std::sqrt(to_double(*best));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (d2[i * n + j] != *best) continue;
        ContactEdge e{i, j, {}};
        for (const auto& r : realizing_displacements(pts[i], pts[j])) {
          e.realizations.push_back({to_point(r.delta), r.offset});
        }
        out.edges.push_back(std::move(e));
      }
    }
    return out;
  }

  const auto pts = config.points();
  std::vector<double> dist(n * n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = torus_distance(pts[i], pts[j]);
      if (dist[i * n + j] == 0.0) throw_coincident(i, j);
      best = std::min(best, dist[i * n + j]);
    }
  }
  out.diameter = best;
  if (config.exact_mode()) out.diameter_squared_exact = packing_diameter_squared_exact(config);
  const double limit = best * (1.0 + tol);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i * n + j] > limit) continue;
      out.edges.push_back({i, j, realizing_displacements(pts[i], pts[j], tol)});
    }
  }
  return out;
}

PennyVerdict verify_penny(const Configuration& config, const SmallGraph& expected,
                          double tol) {
  PennyVerdict verdict;
  if (static_cast<std::size_t>(expected.size()) != config.size()) {
    verdict.diagnostics.push_back("vertex counts " + std::to_string(config.size()) +
                                  " != " + std::to_string(expected.size()));
    return verdict;
  }
  verdict.contacts = contact_graph(config, tol);
  const ContactGraph& contacts = *verdict.contacts;
  const std::size_t n = config.size();

  struct PairDistance {
    std::size_t i, j;
    double d;
    std::optional<Rational> d2;
  };
  std::vector<PairDistance> pairs;
  const bool exact = use_exact(config, tol);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairDistance p{i, j, torus_distance(config[i], config[j]), std::nullopt};
      if (exact) p.d2 = torus_distance_squared(config.exact_points()[i], config.exact_points()[j]);
      pairs.push_back(std::move(p));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const PairDistance& a, const PairDistance& b) {
    return exact ? *a.d2 < *b.d2 : a.d < b.d;
  });
  const auto wanted = static_cast<std::size_t>(expected.edge_count());
  for (std::size_t k = 0; k < std::min(wanted, pairs.size()); ++k) {
    const auto& p = pairs[k];
    const double rel = std::abs(p.d - contacts.diameter) / contacts.diameter;
    const bool equal = exact ? *p.d2 == *contacts.diameter_squared_exact
                             : p.d <= contacts.diameter * (1.0 + tol);
    if (!equal) verdict.violations.push_back({p.i, p.j, p.d, rel});
  }
  for (const auto& v : verdict.violations) {
    std::ostringstream os;
    os.precision(12);
    os << "pair (" << v.i + 1 << ", " << v.j + 1 << ") at distance " << v.distance
       << " deviates from the diameter " << contacts.diameter << " by " << v.relative_deviation
       << " (relative)";
    verdict.diagnostics.push_back(os.str());
  }

  verdict.witness = is_isomorphic(contacts.to_small_graph(), expected);
  if (!verdict.witness) {
    verdict.diagnostics.push_back("contact graph (" + std::to_string(contacts.edges.size()) +
                                  " edges) is not isomorphic to the expected graph (" +
                                  std::to_string(expected.edge_count()) + " edges)");
  }
  verdict.pass = verdict.violations.empty() && verdict.witness.has_value();
  return verdict;
}

PackingReport analyze(const Configuration& config, double tol) {
  PackingReport report;
  report.contact_graph = contact_graph(config, tol);
  report.diameter = report.contact_graph.diameter;
  if (config.exact_mode()) report.diameter_squared_exact = packing_diameter_squared_exact(config);
  report.degree_sequence = report.contact_graph.degrees();

  const auto& deg = report.degree_sequence;
  if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg.front(); })) {
    report.regular = deg.front();
  }
  if (config.size() <= static_cast<std::size_t>(SmallGraph::kMaxVertices)) {
    const SmallGraph g = report.contact_graph.to_small_graph();
    report.named_match = identify_named_graph(g);
    report.planar = is_planar(g, false).planar;
    report.bipartite = is_bipartite(g);
  }
  return report;
}

}  // namespace toruspenny
