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

// Planarity for small graphs.
//
// Each biconnected block is embedded incrementally: start from a cycle, then
// repeatedly pick a fragment (a chord, or a component of the unembedded part
// with its attachment edges) and route one of its paths through a face that
// contains all of the fragment's attachment vertices. A fragment with no such
// face proves the block non-planar. Fragments with a single admissible face
// are placed first, which makes the greedy choice safe.

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "toruspenny/error.hpp"
#include "toruspenny/graph.hpp"

namespace toruspenny {
namespace {

using Mask = std::uint32_t;

bool has(Mask m, int v) { return (m >> v) & 1u; }

// Edge lists of the biconnected blocks (Hopcroft-Tarjan lowpoint DFS).
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const SmallGraph& g) {
  const int n = g.size();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    for (int v = 0; v < n; ++v) {
      if (!has(g.neighbors(u), v) || v == parent) continue;
      if (disc[static_cast<std::size_t>(v)] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(u, v)) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, v);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
  };

  for (int s = 0; s < n; ++s)
    if (disc[static_cast<std::size_t>(s)] == -1) dfs(s, -1);
  return blocks;
}

// Any cycle in a biconnected block with at least three vertices.
std::vector<int> find_cycle(const SmallGraph& g, Mask vertices) {
  const int n = g.size();
  const int root = std::countr_zero(vertices);
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> order{root};
  parent[static_cast<std::size_t>(root)] = -1;
  std::vector<int> depth(static_cast<std::size_t>(n), 0);

  std::function<std::vector<int>(int)> dfs = [&](int u) -> std::vector<int> {
    for (int v = 0; v < n; ++v) {
      if (!has(g.neighbors(u), v)) continue;
      if (parent[static_cast<std::size_t>(v)] == -2) {
        parent[static_cast<std::size_t>(v)] = u;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        auto c = dfs(v);
        if (!c.empty()) return c;
      } else if (v != parent[static_cast<std::size_t>(u)] &&
                 depth[static_cast<std::size_t>(v)] < depth[static_cast<std::size_t>(u)]) {
        std::vector<int> cycle;
        for (int w = u; w != v; w = parent[static_cast<std::size_t>(w)]) cycle.push_back(w);
        cycle.push_back(v);
        return cycle;
      }
    }
    return {};
  };
  return dfs(root);
}

struct Fragment {
  Mask attachments = 0;
  std::vector<int> path;  // attachment, interior..., attachment
};

bool block_is_planar(const SmallGraph& g, Mask vertices) {
  const int nv = std::popcount(vertices);
  const int ne = g.edge_count();
  if (ne <= nv) return true;  // a single cycle
  if (nv >= 3 && ne > 3 * nv - 6) return false;

  const int n = g.size();
  std::vector<int> cycle = find_cycle(g, vertices);
  SmallGraph embedded(n);
  Mask placed = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    placed |= 1u << cycle[i];
  }
  std::vector<std::vector<int>> faces{cycle, cycle};

  auto face_mask = [](const std::vector<int>& f) {
    Mask m = 0;
    for (int v : f) m |= 1u << v;
    return m;
  };

  while (true) {
    std::vector<Fragment> fragments;
    for (auto [u, v] : g.edges()) {
      if (has(placed, u) && has(placed, v) && !embedded.has_edge(u, v)) {
        fragments.push_back({(1u << u) | (1u << v), {u, v}});
      }
    }
    Mask seen = placed;
    for (int s = 0; s < n; ++s) {
      if (!has(vertices, s) || has(seen, s)) continue;
      // Component of the unplaced part, plus its attachments.
      Mask comp = 1u << s;
      std::deque<int> queue{s};
      Mask attach = 0;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
          if (!has(g.neighbors(u), v)) continue;
          if (has(placed, v)) {
            attach |= 1u << v;
          } else if (!has(comp, v)) {
            comp |= 1u << v;
            queue.push_back(v);
          }
        }
      }
      seen |= comp;
      // Route between the two lowest attachments through the component.
      const int a = std::countr_zero(attach);
      const int b = std::countr_zero(attach & ~(1u << a));
      std::vector<int> prev(static_cast<std::size_t>(n), -1);
      std::deque<int> bfs;
      for (int v = 0; v < n; ++v) {
        if (has(comp, v) && has(g.neighbors(a), v)) {
          prev[static_cast<std::size_t>(v)] = a;
          bfs.push_back(v);
        }
      }
      int end = -1;
      while (!bfs.empty() && end == -1) {
        int u = bfs.front();
        bfs.pop_front();
        if (has(g.neighbors(u), b)) {
          end = u;
          break;
        }
        for (int v = 0; v < n; ++v) {
          if (has(comp, v) && has(g.neighbors(u), v) && prev[static_cast<std::size_t>(v)] == -1) {
            prev[static_cast<std::size_t>(v)] = u;
            bfs.push_back(v);
          }
        }
      }
      std::vector<int> path{b};
      for (int w = end; w != a; w = prev[static_cast<std::size_t>(w)]) path.push_back(w);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      fragments.push_back({attach, std::move(path)});
    }

    if (fragments.empty()) return true;

    std::size_t chosen = fragments.size();
    std::size_t chosen_face = 0;
    for (std::size_t k = 0; k < fragments.size(); ++k) {
      std::vector<std::size_t> admissible;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if ((fragments[k].attachments & ~face_mask(faces[f])) == 0) admissible.push_back(f);
      }
      if (admissible.empty()) return false;
      if (chosen == fragments.size() || admissible.size() == 1) {
        chosen = k;
        chosen_face = admissible.front();
      }
      if (admissible.size() == 1) break;
    }

    const std::vector<int>& path = fragments[chosen].path;
    const std::vector<int> face = faces[chosen_face];
    const int a = path.front();
    const int b = path.back();
    const auto ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const auto ib = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());
    auto arc = [&](std::size_t from, std::size_t to) {
      std::vector<int> out;
      for (std::size_t i = from;; i = (i + 1) % face.size()) {
        out.push_back(face[i]);
        if (i == to) break;
      }
      return out;
    };
    std::vector<int> first = arc(ia, ib);   // a .. b
    std::vector<int> second = arc(ib, ia);  // b .. a
    for (std::size_t i = path.size() - 2; i >= 1; --i) first.push_back(path[i]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) second.push_back(path[i]);
    faces[chosen_face] = std::move(first);
    faces.push_back(std::move(second));

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      embedded.add_edge(path[i], path[i + 1]);
      placed |= 1u << path[i + 1];
    }
  }
}

bool planar_verdict(const SmallGraph& g) {
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() < 3) continue;
    SmallGraph sub(g.size());
    Mask vertices = 0;
    for (auto [u, v] : block) {
      sub.add_edge(u, v);
      vertices |= (1u << u) | (1u << v);
    }
    if (!block_is_planar(sub, vertices)) return false;
  }
  return true;
}

// Walks from branch vertex `start` through `first` along degree-2 vertices.
std::vector<int> trace_path(const SmallGraph& g, int start, int first) {
  std::vector<int> path{start, first};
  int prev = start;
  int cur = first;
  while (g.degree(cur) == 2) {
    const Mask next_mask = g.neighbors(cur) & ~(1u << prev);
    const int next = std::countr_zero(next_mask);
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

std::optional<KuratowskiWitness> extract_witness(SmallGraph g) {
  for (auto [u, v] : g.edges()) {
    g.remove_edge(u, v);
    if (planar_verdict(g)) g.add_edge(u, v);
  }
  KuratowskiWitness w;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 3) w.branch_vertices.push_back(v);
  for (int b : w.branch_vertices) {
    for (int v = 0; v < g.size(); ++v) {
      if (!has(g.neighbors(b), v)) continue;
      auto path = trace_path(g, b, v);
      if (path.front() < path.back()) w.paths.push_back(std::move(path));
    }
  }
  std::sort(w.paths.begin(), w.paths.end());
  if (w.branch_vertices.size() == 5 && w.paths.size() == 10) {
    w.kind = KuratowskiKind::kK5;
  } else if (w.branch_vertices.size() == 6 && w.paths.size() == 9) {
    w.kind = KuratowskiKind::kK33;
  } else {
    return std::nullopt;
  }
  return w;
}

}  // namespace

PlanarityResult is_planar(const SmallGraph& g, bool want_witness) {
  PlanarityResult result;
  result.planar = planar_verdict(g);
  if (!result.planar && want_witness) result.witness = extract_witness(g);
  return result;
}

}  // namespace toruspenny
