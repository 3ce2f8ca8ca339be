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

#ifndef TORUSPENNY_GRAPH_HPP_
#define TORUSPENNY_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toruspenny {

// Simple undirected graph on at most 16 vertices, stored as one adjacency
// bitmask per vertex.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 16;

  SmallGraph() = default;
  explicit SmallGraph(int n);

  int size() const noexcept { return n_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::uint32_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int edge_count() const;

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degrees() const;
  std::optional<int> regular_degree() const;

  // perm[old] = new.
  SmallGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint32_t> adj_;
};

// Recognized names: K<n> (1 <= n <= 16), K33 (or K3,3), octahedron,
// cycle(<n>) with n >= 3, path(<n>) with n >= 1. Case-insensitive.
// Throws Error(kCatalog) for anything else.
SmallGraph named_graph(std::string_view name);

// Returns mapping[v of g] = vertex of h, the lexicographically first adjacency
// preserving bijection, or nullopt.
std::optional<std::vector<int>> is_isomorphic(const SmallGraph& g,
                                              const SmallGraph& h);

// First catalog name whose graph is isomorphic to g, trying K<n>, K33,
// octahedron, cycle(<n>) and path(<n>) in that order.
std::optional<std::string> identify_named_graph(const SmallGraph& g);

struct Bipartition {
  std::vector<int> left;   // contains the lowest vertex of each component
  std::vector<int> right;
};

std::optional<Bipartition> is_bipartite(const SmallGraph& g);

enum class KuratowskiKind { kK5, kK33 };

// A subdivision of K5 or K3,3 inside the host graph: its branch vertices and
// one vertex path per edge of the underlying K5 / K3,3.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::kK5;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;
};

// Face-by-face path embedding per biconnected block. When `want_witness` is
// set, a non-planar verdict is accompanied by a Kuratowski subdivision
// obtained by edge-minimal reduction.
PlanarityResult is_planar(const SmallGraph& g, bool want_witness = true);

// floor(3n - sqrt(12n - 3)), exact at perfect squares. Throws kInvalidInput
// for n == 0 and kSize when 12n - 3 would overflow.
std::uint64_t harborth_bound(std::uint64_t n);

}  // namespace toruspenny

#endif  // TORUSPENNY_GRAPH_HPP_
