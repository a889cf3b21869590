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

#include <set>

#include "brute.hpp"
#include "hfree/fixtures.hpp"
#include "hfree/io.hpp"
#include "hfree/gadgets.hpp"

namespace hfree {
namespace {

using Tuples = std::set<std::vector<Color>>;

Tuples equal_pairs() { return {{0, 0}, {1, 1}, {2, 2}}; }

Tuples unequal_pairs() {
  Tuples t;
  for (Color a = 0; a < 3; ++a)
    for (Color b = 0; b < 3; ++b)
      if (a != b) t.insert({a, b});
  return t;
}

TEST(Grotzsch, ShapeAndCriticality) {
  Gadget g = grotzsch();
  EXPECT_EQ(g.graph.num_vertices(), 11u);
  EXPECT_EQ(g.graph.num_edges(), 20u);
  EXPECT_EQ(brute::triangles(g.graph), 0u);
  EXPECT_FALSE(brute::colorable(g.graph, 3));
  EXPECT_TRUE(brute::colorable(g.graph, 4));
  for (auto [u, v] : g.graph.edges())
    EXPECT_TRUE(brute::colorable(g.graph.without_edge(u, v), 3)) << u << "-" << v;
  EXPECT_TRUE(verify_gadget(g).ok);
}

TEST(Grotzsch, IsTheMycielskianOfC5) {
  // degree sequence: five outer vertices of degree 4, five shadows of
  // degree 3, one apex of degree 5
  std::multiset<std::size_t> degrees;
  Graph g = grotzsch().graph;
  for (Vertex v = 0; v < 11; ++v) degrees.insert(g.degree(v));
  EXPECT_EQ(degrees, (std::multiset<std::size_t>{3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5}));
}

TEST(EqGadget, ProjectionIsTheEqualPairs) {
  Gadget g = eq_gadget();
  EXPECT_EQ(g.graph.num_vertices(), 11u);
  EXPECT_EQ(g.graph.num_edges(), 19u);
  EXPECT_FALSE(g.graph.has_edge(g.terminals.at("u"), g.terminals.at("v")));
  EXPECT_EQ(brute::projection(g.graph, {g.terminals.at("u"), g.terminals.at("v")}),
            equal_pairs());
  EXPECT_EQ(brute::triangles(g.graph), 0u);
  EXPECT_TRUE(verify_gadget(g).ok);
}

TEST(NeqGadget, ProjectionIsTheUnequalPairs) {
  Gadget g = neq_gadget();
  EXPECT_EQ(g.graph.num_vertices(), 12u);
  EXPECT_EQ(brute::projection(g.graph, {g.terminals.at("u"), g.terminals.at("v")}),
            unequal_pairs());
  EXPECT_EQ(brute::triangles(g.graph), 0u);
  EXPECT_TRUE(verify_gadget(g).ok);
}

TEST(EqSetGadget, AllTerminalsEqual) {
  for (Vertex s : {1u, 2u, 3u}) {
    Gadget g = eq_set_gadget(s);
    EXPECT_EQ(g.graph.num_vertices(), 1 + 10 * s);
    EXPECT_EQ(g.terminals.size(), s + 1);
    EXPECT_EQ(count_triangles(g.graph), 0u);
    EXPECT_TRUE(verify_gadget(g).ok);
    auto proj = enumerate_extendable_colorings(g.graph, g.interface);
    EXPECT_EQ(proj.size(), 3u);
    for (const auto& a : proj)
      for (Color c : a) EXPECT_EQ(c, a.front());
  }
  EXPECT_THROW(eq_set_gadget(0), DomainError);
}

TEST(EqSetGadget, TwoTerminalProjectionMatchesEnumeration) {
  Gadget g = eq_set_gadget(2);
  auto got = enumerate_extendable_colorings(g.graph, g.interface);
  Tuples want = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  EXPECT_EQ(Tuples(got.begin(), got.end()), want);
}

TEST(RigidityChecks, RejectNonRigidGraphs) {
  Graph p3 = path_graph(3);
  std::vector<Vertex> other = {2};
  EXPECT_FALSE(is_equality_rigid(p3, 0, other));
  EXPECT_FALSE(is_inequality_rigid(p3, 0, 2));
  EXPECT_TRUE(is_inequality_rigid(path_graph(2), 0, 1));
  std::vector<Vertex> nine = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_FALSE(is_pair_rigid(Graph(9), nine));
  std::vector<Vertex> eight = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(is_pair_rigid(Graph(9), eight), DomainError);
}

TEST(GadgetX, TriangleFreeAndPairRigid) {
  Gadget x = gadget_x();
  EXPECT_EQ(x.graph.num_vertices(), 39u);
  EXPECT_EQ(brute::triangles(x.graph), 0u);
  auto proj = enumerate_extendable_colorings(x.graph, x.interface);
  // the core takes one of 6 rainbow colorings, which fixes every pair
  EXPECT_EQ(proj.size(), 6u);
  for (const auto& a : proj) {
    std::set<std::pair<Color, Color>> pairs;
    for (int i = 0; i < 3; ++i) {
      Color p = a[3 + 2 * i], q = a[4 + 2 * i];
      ASSERT_NE(p, q);
      pairs.emplace(std::min(p, q), std::max(p, q));
    }
    EXPECT_EQ(pairs.size(), 3u);
  }
  EXPECT_TRUE(verify_gadget(x).ok);
}

TEST(GadgetX, ProjectionMatchesEnumeration) {
  Gadget x = gadget_x();
  auto got = enumerate_extendable_colorings(x.graph, x.interface);
  EXPECT_EQ(Tuples(got.begin(), got.end()), brute::projection(x.graph, x.interface));
}

std::vector<Pattern> corpus() {
  return {colored_c6(), colored_edge(), colored_p4(), colored_k3(), colored_k3_pendant()};
}

TEST(Hstar, SoundOnCorpus) {
  for (const Pattern& h : corpus()) {
    Gadget hs = build_hstar(h);
    auto r = verify_hstar_soundness(h, hs);
    EXPECT_TRUE(r.sound) << to_edge_list(h.graph);
    EXPECT_EQ(r.matched_copy.size(), r.interface_colorings);
    EXPECT_EQ(r.interface_colorings, 6u);
    for (int m : r.matched_copy) EXPECT_GE(m, 0);
    EXPECT_EQ(count_triangles(hs.graph), brute::triangles(h.graph));
    EXPECT_TRUE(is_colorable(hs.graph, 3));
    EXPECT_EQ(hs.copies.size(), 6u);
    for (const auto& e : hs.copies) EXPECT_TRUE(e.is_valid(h.graph, hs.graph));
  }
}

TEST(Hstar, SizesOfTriangleFreeConstruction) {
  // X (39) plus six copies
  EXPECT_EQ(build_hstar(colored_c6()).graph.num_vertices(), 39u + 6 * 6);
  EXPECT_EQ(build_hstar(colored_edge()).graph.num_vertices(), 39u + 6 * 2);
  EXPECT_EQ(build_hstar(colored_p4()).graph.num_vertices(), 39u + 6 * 4);
}

TEST(Hstar, EmptyColorClassFlag) {
  EXPECT_TRUE(build_hstar(colored_edge()).empty_color_class);
  EXPECT_FALSE(build_hstar(colored_c6()).empty_color_class);
  EXPECT_FALSE(build_hstar(colored_p4()).empty_color_class);
}

TEST(Hstar, SolverColoringContainsTheColoredPattern) {
  Pattern h = colored_c6();
  Gadget hs = build_hstar(h);
  auto c = find_proper_coloring(hs.graph, 3);
  ASSERT_TRUE(c);
  EXPECT_TRUE(find_colored_copy(h, hs.graph, *c));
}

TEST(Hstar, EveryColoringContainsTheColoredPattern) {
  // stronger spot check on small H*: many distinct colorings, each must
  // contain a color-preserving copy
  for (const Pattern& h : {colored_edge(), colored_k3(), colored_p4()}) {
    Gadget hs = build_hstar(h);
    for (Color first = 0; first < 3; ++first) {
      std::vector<Color> partial(hs.graph.num_vertices(), kUncolored);
      partial[hs.interface[0]] = first;
      auto c = find_proper_coloring(hs.graph, 3, partial);
      ASSERT_TRUE(c);
      EXPECT_TRUE(find_colored_copy(h, hs.graph, *c));
    }
  }
}

TEST(Hstar, RejectsUnsuitablePatterns) {
  EXPECT_THROW(build_hstar(Pattern(path_graph(3))), DomainError);
  EXPECT_THROW(build_hstar(Pattern(Graph::from_edges(
                   6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
                   Coloring(3, {0, 1, 2, 0, 1, 2}))),
               DomainError);
  EXPECT_THROW(hstar_trianglefree(colored_k3()), DomainError);
  EXPECT_THROW(hstar_triangle(colored_c6()), DomainError);
}

TEST(Hstar, UnsoundWhenCopiesAreMissing) {
  Pattern h = colored_p4();
  Gadget hs = build_hstar(h);
  hs.copies.resize(1);
  EXPECT_FALSE(verify_hstar_soundness(h, hs).sound);
  hs.copies.clear();
  EXPECT_FALSE(verify_hstar_soundness(h, hs).sound);
}

}  // namespace
}  // namespace hfree
