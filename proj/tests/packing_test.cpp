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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "toruspenny/catalog.hpp"
#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

using testing::brute_distance;
using testing::random_point;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::kInvalidInput;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const ContactGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges) out.emplace(e.i, e.j);
  return out;
}

TEST(ConfigurationTest, FactoriesValidateAndWrap) {
  EXPECT_EQ(code_of([] { Configuration::numeric({}); }), Errc::kSize);
  EXPECT_EQ(code_of([] { Configuration::numeric(std::vector<Point>(kMaxConfigurationSize + 1)); }),
            Errc::kSize);
  EXPECT_EQ(code_of([] { Configuration::numeric({{std::nan(""), 0.0}}); }), Errc::kInvalidInput);
  const auto c = Configuration::numeric({{0.75, -0.5}});
  EXPECT_EQ(c[0], (Point{-0.25, -0.5}));
  EXPECT_FALSE(c.exact_mode());
  EXPECT_EQ(code_of([&] { c.exact_points(); }), Errc::kMode);

  const auto e = Configuration::exact({{Rational(3, 2), Rational(-1, 2)}}, "x");
  EXPECT_EQ(e.exact_points()[0], (ExactPoint{Rational(-1, 2), Rational(-1, 2)}));
  EXPECT_EQ(e.label(), "x");
}

TEST(ConfigurationTest, PermuteAndTransform) {
  const Configuration k33 = k33_config();
  const std::vector<std::size_t> order{5, 4, 3, 2, 1, 0};
  const Configuration rev = k33.permuted(order);
  EXPECT_EQ(rev.exact_points()[0], k33.exact_points()[5]);
  EXPECT_TRUE(rev.exact_mode());
  EXPECT_EQ(code_of([&] { k33.permuted(std::vector<std::size_t>{0, 0, 1, 2, 3, 4}); }),
            Errc::kInvalidInput);

  const ExactIsometryMap g{SquareSymmetry::kMirrorDiagonal, {Rational(1, 7), Rational(0)}};
  const Configuration moved = k33.transformed(g);
  EXPECT_TRUE(moved.exact_mode());
  EXPECT_EQ(moved.exact_points()[1], apply_isometry(g, k33.exact_points()[1]));
  EXPECT_FALSE(k33.transformed(IsometryMap{}).exact_mode());
}

TEST(PackingDiameterTest, Examples) {
  EXPECT_NEAR(packing_diameter(k5_config()), 1.0 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(packing_diameter(k33_config()), 5.0 * std::sqrt(2.0) / 18.0, 1e-15);
  EXPECT_NEAR(packing_diameter(Configuration::numeric({{0, 0}, {-0.5, -0.5}})),
              std::sqrt(2.0) / 2.0, 1e-15);
  EXPECT_EQ(code_of([] { packing_diameter(Configuration::numeric({{0, 0}})); }),
            Errc::kDegenerateConfiguration);
}

TEST(PackingDiameterTest, ExactExamples) {
  EXPECT_EQ(packing_diameter_squared_exact(k5_config()), Rational(1, 5));
  EXPECT_EQ(packing_diameter_squared_exact(k33_config()), Rational(25, 162));
  EXPECT_EQ(packing_diameter_squared_exact(
                Configuration::exact({{Rational(0), Rational(0)}, {Rational(1, 3), Rational(0)}})),
            Rational(1, 9));
  EXPECT_EQ(code_of([] { packing_diameter_squared_exact(octahedral_config()); }), Errc::kMode);
}

TEST(PackingDiameterTest, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    std::vector<Point> pts(2 + k % 9);
    for (Point& p : pts) p = random_point(rng);
    ASSERT_NEAR(packing_diameter(Configuration::numeric(pts)), testing::brute_min_distance(pts),
                1e-15);
  }
}

TEST(PackingDiameterTest, InvariantUnderIsometries) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<long> num(-50, 50);
  for (const Configuration& c : {k5_config(), k33_config(), octahedral_config()}) {
    const double d = packing_diameter(c);
    for (int k = 0; k < 100; ++k) {
      const IsometryMap g{kAllSquareSymmetries[pick(rng)], random_point(rng)};
      ASSERT_NEAR(packing_diameter(c.transformed(g)), d, 1e-12);
    }
  }
  for (const Configuration& c : {k5_config(), k33_config()}) {
    const Rational d2 = packing_diameter_squared_exact(c);
    for (int k = 0; k < 50; ++k) {
      const ExactIsometryMap g{kAllSquareSymmetries[pick(rng)],
                               {Rational(num(rng), 101), Rational(num(rng), 103)}};
      ASSERT_EQ(packing_diameter_squared_exact(c.transformed(g)), d2);
    }
  }
}

TEST(ContactGraphTest, K5PackingIsComplete) {
  const ContactGraph g = contact_graph(k5_config(), 1e-9);
  EXPECT_EQ(g.edges.size(), 10u);
  EXPECT_EQ(g.degrees(), std::vector<int>(5, 4));
  for (const auto& e : g.edges) EXPECT_EQ(e.realizations.size(), 1u);
}

TEST(ContactGraphTest, K33PackingExactIsBipartite) {
  const ContactGraph g = contact_graph(k33_config(), 0.0);
  ASSERT_TRUE(g.diameter_squared_exact.has_value());
  EXPECT_EQ(*g.diameter_squared_exact, Rational(25, 162));
  EXPECT_EQ(g.edges.size(), 9u);
  for (const auto& e : g.edges) EXPECT_NE(e.i % 2, e.j % 2) << e.i << "-" << e.j;
}

TEST(ContactGraphTest, OctahedralPackingHasTwelveEdges) {
  const ContactGraph g = contact_graph(octahedral_config(), 1e-9);
  EXPECT_EQ(g.edges.size(), 12u);
  EXPECT_EQ(g.degrees(), std::vector<int>(6, 4));
}

TEST(ContactGraphTest, RecordsEveryRealizingTranslate) {
  const ContactGraph g = contact_graph(Configuration::numeric({{0, 0}, {-0.5, 0}}), 1e-9);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].realizations.size(), 2u);
  const ContactGraph corner = contact_graph(
      Configuration::exact({{Rational(0), Rational(0)}, {Rational(-1, 2), Rational(-1, 2)}}), 0.0);
  EXPECT_EQ(corner.edges[0].realizations.size(), 4u);
}

TEST(ContactGraphTest, CoincidentPointsNameThePair) {
  try {
    contact_graph(Configuration::numeric({{0.1, 0.1}, {0.3, 0}, {0.1, 0.1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateConfiguration);
    EXPECT_NE(std::string(e.what()).find("1 and 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { contact_graph(k5_config(), -1.0); }), Errc::kInvalidInput);
}

TEST(ContactGraphTest, MatchesBruteForceClassification) {
  std::mt19937_64 rng(33);
  const double tol = 1e-9;
  for (int k = 0; k < 300; ++k) {
    std::vector<Point> pts(2 + k % 7);
    for (Point& p : pts) p = random_point(rng);
    const double d = testing::brute_min_distance(pts);
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (brute_distance(pts[i], pts[j]) <= d * (1 + tol)) expected.emplace(i, j);
      }
    }
    ASSERT_EQ(edge_set(contact_graph(Configuration::numeric(pts), tol)), expected);
  }
}

TEST(ContactGraphTest, ExactAgreesWithNumericOnCatalog) {
  for (const auto& name : catalog_names()) {
    const Configuration c = catalog_config(name);
    const Configuration numeric = Configuration::numeric({c.points().begin(), c.points().end()});
    const double tol = c.exact_mode() ? 0.0 : 1e-9;
    EXPECT_EQ(edge_set(contact_graph(c, tol)), edge_set(contact_graph(numeric, 1e-12))) << name;
  }
}

TEST(ContactGraphTest, InvariantUnderIsometryAndRelabeling) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> pick(0, 7);
  for (const Configuration& c : {k5_config(), k33_config(), octahedral_config()}) {
    const SmallGraph base = contact_graph(c, 1e-9).to_small_graph();
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 50; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      const IsometryMap g{kAllSquareSymmetries[pick(rng)], random_point(rng)};
      const Configuration moved = c.transformed(g).permuted(order);
      const SmallGraph h = contact_graph(moved, 1e-9).to_small_graph();
      // Point k of `moved` is point order[k] of c.
      for (auto [u, v] : h.edges()) {
        ASSERT_TRUE(base.has_edge(static_cast<int>(order[static_cast<std::size_t>(u)]),
                                  static_cast<int>(order[static_cast<std::size_t>(v)])));
      }
      ASSERT_EQ(h.edge_count(), base.edge_count());
    }
  }
}

TEST(ContactGraphTest, K33DiameterBelowOctahedral) {
  EXPECT_LT(packing_diameter(k33_config()), packing_diameter(octahedral_config()));
}

TEST(VerifyPennyTest, Examples) {
  const PennyVerdict k33 = verify_penny(k33_config(), named_graph("K33"), 0.0);
  EXPECT_TRUE(k33.pass);
  ASSERT_TRUE(k33.witness.has_value());
  EXPECT_TRUE(k33.violations.empty());

  const PennyVerdict mismatch = verify_penny(k5_config(), named_graph("K33"), 1e-9);
  EXPECT_FALSE(mismatch.pass);
  ASSERT_EQ(mismatch.diagnostics.size(), 1u);
  EXPECT_EQ(mismatch.diagnostics[0], "vertex counts 5 != 6");

  auto pts = testing::k33_reference_points();
  pts[0] = {14.0 / 36, -13.0 / 36};
  const PennyVerdict moved = verify_penny(Configuration::numeric(pts), named_graph("K33"), 1e-9);
  EXPECT_FALSE(moved.pass);
  EXPECT_FALSE(moved.violations.empty());
  for (const auto& v : moved.violations) {
    EXPECT_GT(v.distance, packing_diameter(Configuration::numeric(pts)));
    EXPECT_GT(v.relative_deviation, 1e-9);
  }
}

TEST(VerifyPennyTest, CatalogPasses) {
  EXPECT_TRUE(verify_penny(k5_config(), named_graph("K5"), 0.0).pass);
  EXPECT_TRUE(verify_penny(k33_config(), named_graph("K33"), 0.0).pass);
  EXPECT_TRUE(verify_penny(octahedral_config(), named_graph("octahedron"), 1e-9).pass);
  EXPECT_FALSE(verify_penny(octahedral_config(), named_graph("K33"), 1e-9).pass);
}

TEST(AnalyzeTest, Examples) {
  const PackingReport oct = analyze(octahedral_config());
  EXPECT_NEAR(oct.diameter, 0.400406, 1e-6);
  EXPECT_EQ(oct.named_match, "octahedron");
  EXPECT_EQ(oct.planar, true);
  EXPECT_EQ(oct.regular, 4);
  EXPECT_FALSE(oct.diameter_squared_exact.has_value());

  const PackingReport k5 = analyze(k5_config(), 0.0);
  EXPECT_EQ(k5.named_match, "K5");
  EXPECT_EQ(k5.planar, false);
  EXPECT_EQ(k5.regular, 4);
  EXPECT_EQ(k5.diameter_squared_exact, Rational(1, 5));

  const PackingReport k33 = analyze(k33_config(), 0.0);
  EXPECT_EQ(k33.named_match, "K33");
  EXPECT_EQ(k33.planar, false);
  EXPECT_EQ(k33.regular, 3);
  ASSERT_TRUE(k33.bipartite.has_value());
  EXPECT_EQ(k33.bipartite->left, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(k33.bipartite->right, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(k33.degree_sequence, std::vector<int>(6, 3));
}

TEST(AnalyzeTest, LargeConfigurationsSkipGraphFields) {
  std::mt19937_64 rng(35);
  std::vector<Point> pts(40);
  for (Point& p : pts) p = random_point(rng);
  const PackingReport r = analyze(Configuration::numeric(pts));
  EXPECT_FALSE(r.planar.has_value());
  EXPECT_FALSE(r.named_match.has_value());
  EXPECT_EQ(r.degree_sequence.size(), 40u);
}

}  // namespace
}  // namespace toruspenny
