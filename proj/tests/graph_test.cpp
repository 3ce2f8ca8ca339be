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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "test_util.hpp"
#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

using testing::brute_isomorphic;
using testing::random_graph;

TEST(NamedGraphTest, Shapes) {
  const SmallGraph k5 = named_graph("K5");
  EXPECT_EQ(k5.size(), 5);
  EXPECT_EQ(k5.edge_count(), 10);
  EXPECT_EQ(k5.regular_degree(), 4);

  const SmallGraph k33 = named_graph("K33");
  EXPECT_EQ(k33.size(), 6);
  EXPECT_EQ(k33.edge_count(), 9);
  EXPECT_EQ(k33.regular_degree(), 3);
  EXPECT_EQ(named_graph("k3,3"), k33);

  const SmallGraph oct = named_graph("octahedron");
  EXPECT_EQ(oct.size(), 6);
  EXPECT_EQ(oct.edge_count(), 12);
  EXPECT_EQ(oct.regular_degree(), 4);

  EXPECT_EQ(named_graph("cycle(6)").edge_count(), 6);
  EXPECT_EQ(named_graph("path(4)").edge_count(), 3);
  EXPECT_EQ(named_graph("K7").edge_count(), 21);
  EXPECT_FALSE(named_graph("path(4)").regular_degree().has_value());
}

TEST(NamedGraphTest, UnknownNamesAreCatalogErrors) {
  for (const char* bad : {"K17", "petersen", "cycle(2)", "cycle(x)", ""}) {
    try {
      named_graph(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kCatalog) << bad;
    }
  }
}

TEST(NamedGraphTest, Identification) {
  EXPECT_EQ(identify_named_graph(named_graph("K5")), "K5");
  EXPECT_EQ(identify_named_graph(named_graph("octahedron")), "octahedron");
  SmallGraph shuffled(6);
  for (auto [u, v] : named_graph("K33").edges()) shuffled.add_edge((u * 5) % 6, (v * 5) % 6);
  EXPECT_EQ(identify_named_graph(shuffled), "K33");
  EXPECT_FALSE(identify_named_graph(SmallGraph(3)).has_value());
}

TEST(SmallGraphTest, BasicInvariants) {
  SmallGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 4), Error);
  EXPECT_THROW(SmallGraph(17), Error);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const SmallGraph r = random_graph(9, 0.4, rng);
    const auto deg = r.degrees();
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), 0), 2 * r.edge_count());
    for (int u = 0; u < r.size(); ++u) {
      EXPECT_FALSE(r.has_edge(u, u));
      for (int v = 0; v < r.size(); ++v) EXPECT_EQ(r.has_edge(u, v), r.has_edge(v, u));
    }
  }
}

TEST(IsomorphismTest, Examples) {
  EXPECT_TRUE(is_isomorphic(named_graph("K5"), named_graph("K5")).has_value());
  EXPECT_FALSE(is_isomorphic(named_graph("K33"), named_graph("octahedron")).has_value());
  EXPECT_FALSE(is_isomorphic(named_graph("cycle(6)"), named_graph("K33")).has_value());
  EXPECT_FALSE(is_isomorphic(named_graph("K4"), named_graph("K5")).has_value());
}

TEST(IsomorphismTest, WitnessPreservesAdjacency) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const SmallGraph g = random_graph(8, 0.5, rng);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SmallGraph h = g.relabeled(perm);
    const auto w = is_isomorphic(g, h);
    ASSERT_TRUE(w.has_value());
    for (auto [u, v] : g.edges()) {
      ASSERT_TRUE(h.has_edge((*w)[static_cast<std::size_t>(u)], (*w)[static_cast<std::size_t>(v)]));
    }
  }
}

// First bijection in lexicographic order, by enumeration.
std::optional<std::vector<int>> brute_first_witness(const SmallGraph& g, const SmallGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      ok = ok && h.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

TEST(IsomorphismTest, AgreesWithBruteForceUpToSevenVertices) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  int positives = 0;
  for (int k = 0; k < 600; ++k) {
    const int n = size(rng);
    const SmallGraph g = random_graph(n, density(rng), rng);
    SmallGraph h;
    if (k % 2 == 0) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      h = g.relabeled(perm);
      // Flip one edge pair sometimes so near-misses are exercised too.
      if (k % 4 == 0 && n >= 4) {
        const auto edges = h.edges();
        if (!edges.empty() && !h.has_edge(0, 1)) {
          h.remove_edge(edges.front().first, edges.front().second);
          h.add_edge(0, 1);
        }
      }
    } else {
      h = random_graph(n, density(rng), rng);
    }
    const auto expected = brute_first_witness(g, h);
    const auto got = is_isomorphic(g, h);
    ASSERT_EQ(got.has_value(), expected.has_value()) << k;
    if (got) {
      EXPECT_EQ(*got, *expected) << k;
      ++positives;
    }
  }
  EXPECT_GT(positives, 150);
}

TEST(BipartiteTest, Examples) {
  const auto k33 = is_bipartite(named_graph("K33"));
  ASSERT_TRUE(k33.has_value());
  EXPECT_EQ(k33->left, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(k33->right, (std::vector<int>{3, 4, 5}));
  EXPECT_FALSE(is_bipartite(named_graph("K5")).has_value());
  EXPECT_TRUE(is_bipartite(named_graph("cycle(6)")).has_value());
  EXPECT_FALSE(is_bipartite(named_graph("cycle(7)")).has_value());
}

TEST(BipartiteTest, PartsAreIndependentSets) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 300; ++k) {
    const SmallGraph g = random_graph(10, 0.15, rng);
    const auto parts = is_bipartite(g);
    if (!parts) continue;
    for (const auto* side : {&parts->left, &parts->right}) {
      for (int u : *side) {
        for (int v : *side) EXPECT_FALSE(g.has_edge(u, v));
      }
    }
    EXPECT_EQ(parts->left.size() + parts->right.size(), 10u);
  }
}

// floor(3n - sqrt(12n - 3)) with 50 significant digits.
std::uint64_t harborth_oracle(std::uint64_t n) {
  using Big = boost::multiprecision::cpp_dec_float_50;
  const Big value = Big(3 * n) - boost::multiprecision::sqrt(Big(12 * n - 3));
  return static_cast<std::uint64_t>(boost::multiprecision::floor(value));
}

TEST(HarborthTest, MatchesHighPrecisionEvaluation) {
  for (std::uint64_t n = 1; n <= 100; ++n) EXPECT_EQ(harborth_bound(n), harborth_oracle(n)) << n;
  for (std::uint64_t n : {1000ULL, 123456ULL, 987654321ULL, 1ULL << 40}) {
    EXPECT_EQ(harborth_bound(n), harborth_oracle(n)) << n;
  }
}

TEST(HarborthTest, Examples) {
  EXPECT_EQ(harborth_bound(11), 21u);
  EXPECT_EQ(harborth_bound(1), 0u);
  EXPECT_EQ(harborth_bound(7), 12u);
  EXPECT_THROW(harborth_bound(0), Error);
}

TEST(HarborthTest, BelowThreeNAndNondecreasing) {
  std::uint64_t previous = 0;
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const std::uint64_t b = harborth_bound(n);
    ASSERT_LT(b, 3 * n);
    ASSERT_GE(b, previous);
    previous = b;
  }
}

}  // namespace
}  // namespace toruspenny
