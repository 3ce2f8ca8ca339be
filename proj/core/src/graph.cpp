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

#include "toruspenny/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>

#include "toruspenny/error.hpp"

namespace toruspenny {

SmallGraph::SmallGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(Errc::kSize, "graph size " + std::to_string(n) +
                                 " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void SmallGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(Errc::kInvalidInput, "vertex " + std::to_string(v) +
                                         " out of range for n = " + std::to_string(n_));
  }
}

void SmallGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::kInvalidInput, "self-loop at " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= 1u << v;
  adj_[static_cast<std::size_t>(v)] |= 1u << u;
}

void SmallGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
  adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
}

bool SmallGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int SmallGraph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int SmallGraph::edge_count() const {
  int twice = 0;
  for (auto m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<int> SmallGraph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

std::optional<int> SmallGraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

SmallGraph SmallGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(Errc::kInvalidInput, "permutation size mismatch");
  }
  SmallGraph out(n_);
  for (auto [i, j] : edges())
    out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "name(<n>)" -> n
std::optional<int> parenthesized(std::string_view s, std::string_view head) {
  if (s.size() < head.size() + 3 || s.substr(0, head.size()) != head) return std::nullopt;
  if (s[head.size()] != '(' || s.back() != ')') return std::nullopt;
  return parse_int(s.substr(head.size() + 1, s.size() - head.size() - 2));
}

SmallGraph complete(int n) {
  SmallGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

SmallGraph named_graph(std::string_view name) {
  const std::string key = lower(name);
  if (key == "k33" || key == "k3,3") {
    SmallGraph g(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) g.add_edge(i, j);
    return g;
  }
  if (key == "octahedron") {
    // K_{2,2,2}; vertex i is opposite i + 3.
    SmallGraph g = complete(6);
    for (int i = 0; i < 3; ++i) g.remove_edge(i, i + 3);
    return g;
  }
  if (auto n = parenthesized(key, "cycle"); n && *n >= 3 && *n <= SmallGraph::kMaxVertices) {
    SmallGraph g(*n);
    for (int i = 0; i < *n; ++i) g.add_edge(i, (i + 1) % *n);
    return g;
  }
  if (auto n = parenthesized(key, "path"); n && *n >= 1 && *n <= SmallGraph::kMaxVertices) {
    SmallGraph g(*n);
    for (int i = 0; i + 1 < *n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (key.size() >= 2 && key[0] == 'k') {
    if (auto n = parse_int(std::string_view(key).substr(1));
        n && *n >= 1 && *n <= SmallGraph::kMaxVertices) {
      return complete(*n);
    }
  }
  throw Error(Errc::kCatalog, "unknown graph name '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const SmallGraph& g;
  const SmallGraph& h;
  std::vector<int> map;
  std::uint32_t used = 0;

  bool extend(int k) {
    const int n = g.size();
    if (k == n) return true;
    const int dk = g.degree(k);
    for (int c = 0; c < n; ++c) {
      if ((used >> c) & 1u) continue;
      if (h.degree(c) != dk) continue;
      bool consistent = true;
      for (int i = 0; i < k && consistent; ++i) {
        consistent = g.has_edge(i, k) == h.has_edge(map[static_cast<std::size_t>(i)], c);
      }
      if (!consistent) continue;
      map[static_cast<std::size_t>(k)] = c;
      used |= 1u << c;
      if (extend(k + 1)) return true;
      used &= ~(1u << c);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  IsoSearch search{g, h, std::vector<int>(static_cast<std::size_t>(g.size())), 0};
  if (search.extend(0)) return search.map;
  return std::nullopt;
}

std::optional<std::string> identify_named_graph(const SmallGraph& g) {
  const int n = g.size();
  std::vector<std::string> names{"K" + std::to_string(n)};
  if (n == 6) {
    names.emplace_back("K33");
    names.emplace_back("octahedron");
  }
  if (n >= 3) names.push_back("cycle(" + std::to_string(n) + ")");
  if (n >= 1) names.push_back("path(" + std::to_string(n) + ")");
  for (const auto& name : names) {
    if (n >= 1 && is_isomorphic(g, named_graph(name))) return name;
  }
  return std::nullopt;
}

std::optional<Bipartition> is_bipartite(const SmallGraph& g) {
  const int n = g.size();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!((g.neighbors(u) >> v) & 1u)) continue;
        auto& cv = color[static_cast<std::size_t>(v)];
        const int cu = color[static_cast<std::size_t>(u)];
        if (cv == -1) {
          cv = 1 - cu;
          queue.push_back(v);
        } else if (cv == cu) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? out.left : out.right).push_back(v);
  return out;
}

std::uint64_t harborth_bound(std::uint64_t n) {
  if (n == 0) throw Error(Errc::kInvalidInput, "harborth_bound requires n >= 1");
  if (n > (std::numeric_limits<std::uint64_t>::max() - 3) / 12) {
    throw Error(Errc::kSize, "n too large for 64-bit evaluation");
  }
  const std::uint64_t arg = 12 * n - 3;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(arg)));
  // Compare by division so the squares never overflow.
  while (root > 0 && root > arg / root) --root;
  while (root + 1 <= arg / (root + 1)) ++root;
  // floor(3n - sqrt(arg)) = 3n - ceil(sqrt(arg))
  const std::uint64_t ceil_root = root * root == arg ? root : root + 1;
  return 3 * n - ceil_root;
}

}  // namespace toruspenny
