// Copyright 2026 The hfree Authors
//
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
#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "hfree/coloring.hpp"
#include "hfree/fixtures.hpp"
#include "hfree/io.hpp"

namespace hfree {
namespace {

TEST(Coloring, SolverAgreesWithEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + trial % 11;
    Graph g = brute::random_graph(n, 0.25 + 0.05 * (trial % 8), rng);
    for (Color k : {2u, 3u, 4u}) {
      auto c = find_proper_coloring(g, k);
      EXPECT_EQ(c.has_value(), brute::colorable(g, k)) << to_edge_list(g) << " k=" << k;
      if (c) {
        EXPECT_TRUE(c->is_proper(g));
        EXPECT_EQ(c->palette(), k);
      }
    }
  }
}

TEST(Coloring, KnownChromaticNumbers) {
  EXPECT_TRUE(is_colorable(cycle_graph(5), 3));
  EXPECT_FALSE(is_colorable(cycle_graph(5), 2));
  EXPECT_TRUE(is_colorable(cycle_graph(6), 2));
  EXPECT_FALSE(is_colorable(complete_graph(4), 3));
  EXPECT_TRUE(is_colorable(complete_graph(4), 4));
  EXPECT_TRUE(is_colorable(Graph(0), 3));
}

TEST(Coloring, PartialAssignmentsMatchEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 2 + trial % 9;
    Graph g = brute::random_graph(n, 0.35, rng);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Color> partial(n, kUncolored);
    partial[pick(rng)] = trial % 3;
    partial[pick(rng)] = (trial / 3) % 3;
    bool expected = false;
    brute::for_each_coloring(brute::matrix(g), 3, [&](const std::vector<Color>& c) {
      bool agrees = true;
      for (Vertex v = 0; v < n; ++v)
        agrees = agrees && (partial[v] == kUncolored || partial[v] == c[v]);
      if (agrees) expected = true;
      return !expected;
    });
    auto c = find_proper_coloring(g, 3, partial);
    EXPECT_EQ(c.has_value(), expected);
    if (!c) continue;
    for (Vertex v = 0; v < n; ++v)
      if (partial[v] != kUncolored) {
        EXPECT_EQ((*c)[v], partial[v]);
      }
  }
}

TEST(Coloring, EnumerateExtendableMatchesProjection) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 3 + trial % 8;
    Graph g = brute::random_graph(n, 0.4, rng);
    std::vector<Vertex> terms = {0, n - 1, n / 2};
    if (terms[2] == 0 || terms[2] == n - 1) terms.pop_back();
    auto got = enumerate_extendable_colorings(g, terms);
    auto want = brute::projection(g, terms);
    EXPECT_EQ(std::set<std::vector<Color>>(got.begin(), got.end()), want);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Coloring, FeasibleColorsMatchEnumeration) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 3 + trial % 8;
    Graph g = brute::random_graph(n, 0.4, rng);
    std::vector<Color> partial(n, kUncolored);
    partial[0] = trial % 3;
    std::vector<Vertex> probe(n);
    std::iota(probe.begin(), probe.end(), Vertex{0});
    std::vector<std::uint32_t> want(n, 0);
    bool any = false;
    brute::for_each_coloring(brute::matrix(g), 3, [&](const std::vector<Color>& c) {
      if (c[0] != partial[0]) return true;
      any = true;
      for (Vertex v = 0; v < n; ++v) want[v] |= 1u << c[v];
      return true;
    });
    auto got = feasible_colors(g, partial, probe);
    if (!any)
      EXPECT_TRUE(got.empty());
    else
      EXPECT_EQ(got, want);
  }
}

TEST(Coloring, DisconnectedComponentsSolvedIndependently) {
  // the K4 refutation must not be retried across the colorable C5 parts
  GraphBuilder b;
  for (int i = 0; i < 40; ++i) b.attach(cycle_graph(5));
  b.attach(complete_graph(4));
  EXPECT_FALSE(is_colorable(b.build(), 3));
}

TEST(Coloring, EdgeCritical) {
  EXPECT_TRUE(is_edge_critical(complete_graph(4), 3));
  EXPECT_TRUE(is_edge_critical(cycle_graph(5), 2));
  EXPECT_FALSE(is_edge_critical(cycle_graph(5), 3));
  GraphBuilder b;
  b.attach(complete_graph(4));
  b.add_vertices(1);
  b.add_edge(0, 4);
  EXPECT_FALSE(is_edge_critical(b.build(), 3));
}

}  // namespace
}  // namespace hfree
