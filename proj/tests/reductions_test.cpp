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

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "hfree/fixtures.hpp"
#include "hfree/reductions.hpp"

namespace hfree {
namespace {

TEST(Arithmetic, CeilSqrtAndBinomial) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    auto s = ceil_sqrt(n);
    EXPECT_GE(s * s, n);
    if (s > 0) {
      EXPECT_LT((s - 1) * (s - 1), n);
    }
  }
  EXPECT_EQ(ceil_sqrt(std::uint64_t{1} << 62), std::uint64_t{1} << 31);
  EXPECT_EQ(binomial3(2), 0u);
  EXPECT_EQ(binomial3(3), 1u);
  EXPECT_EQ(binomial3(10), 120u);
}

std::vector<Graph> hosts(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < 40; ++i)
    out.push_back(brute::random_graph(5 + 7 * (i % 9), 0.03 + 0.04 * (i % 6), rng));
  out.push_back(odd_cycle_blowup(9, 4).graph);
  out.push_back(odd_cycle_blowup(5, 7, 0.7, 3).graph);
  out.push_back(complete_tripartite(5).graph);
  out.push_back(Graph(10));
  out.push_back(Graph(0));
  return out;
}

TEST(SqrtColoring, TriangleOrProperColoringWithFewClasses) {
  for (const Graph& g : hosts(41)) {
    auto r = triangle_or_sqrt_coloring(g);
    if (auto* t = std::get_if<Triangle>(&r)) {
      EXPECT_TRUE(is_triangle(g, *t));
      continue;
    }
    const Coloring& c = std::get<Coloring>(r);
    if (g.num_vertices() == 0) continue;
    const auto s = ceil_sqrt(g.num_vertices());
    EXPECT_TRUE(c.is_proper(g));
    EXPECT_LE(c.palette(), std::max<std::uint64_t>(1, 2 * s));
    for (const auto& cls : c.classes()) EXPECT_FALSE(cls.empty());
  }
}

TEST(SqrtColoring, TriangleFreeHostsAlwaysColored) {
  for (Vertex b : {1u, 3u, 6u, 10u}) {
    Graph g = odd_cycle_blowup(7, b).graph;
    EXPECT_TRUE(std::holds_alternative<Coloring>(triangle_or_sqrt_coloring(g)));
  }
}

TEST(SqrtColoring, DenseHostYieldsTriangle) {
  auto r = triangle_or_sqrt_coloring(complete_graph(30));
  ASSERT_TRUE(std::holds_alternative<Triangle>(r));
  EXPECT_TRUE(is_triangle(complete_graph(30), std::get<Triangle>(r)));
}

TEST(RefineClasses, CapsClassSizes) {
  const std::uint64_t n = 100;  // s = 10, cap 20
  std::vector<Color> colors(n);
  for (Vertex v = 0; v < n; ++v) colors[v] = v < 85 ? 0 : 1;
  Coloring refined = refine_classes(Coloring(2, colors), n);
  for (const auto& cls : refined.classes()) EXPECT_LE(cls.size(), 20u);
  // seven blocks of 10 are peeled from the 85, leaving 15
  EXPECT_EQ(refined.palette(), 2u + 7u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(refined[v], 2u);
  for (Vertex v = 70; v < 85; ++v) EXPECT_EQ(refined[v], 0u);
  // the small class is untouched
  for (Vertex v = 85; v < n; ++v) EXPECT_EQ(refined[v], 1u);
  Coloring loose = refine_classes(Coloring(2, colors), n, 5.0);  // cap 100
  EXPECT_EQ(loose.palette(), 2u);
}

TEST(ColorCode, PartitionsTrianglesExactly) {
  for (const Graph& g : hosts(42)) {
    auto r = color_code(g);
    if (r.triangle) {
      EXPECT_TRUE(is_triangle(g, *r.triangle));
      continue;
    }
    const auto n = g.num_vertices();
    const auto s = ceil_sqrt(n);
    std::uint64_t sum = 0;
    std::set<Triangle> seen;
    for (const auto& inst : r.instances) {
      EXPECT_LE(inst.subgraph.num_vertices(), 6 * s);
      EXPECT_TRUE(inst.coloring.is_proper(inst.subgraph));
      EXPECT_EQ(inst.coloring.palette(), 3u);
      // induced subgraph of the host under back_map
      EXPECT_EQ(induced_subgraph(g, inst.back_map).graph, inst.subgraph);
      for (const auto& t : list_triangles(inst.subgraph)) {
        auto mapped = sorted_triangle(inst.back_map[t[0]], inst.back_map[t[1]],
                                      inst.back_map[t[2]]);
        EXPECT_TRUE(seen.insert(mapped).second) << "triangle in two instances";
        ++sum;
      }
    }
    EXPECT_EQ(sum, brute::triangles(g));
    EXPECT_LE(r.instances.size(), binomial3(3 * s));
    EXPECT_EQ(r.instances.size(), binomial3(r.classes.palette()));
    for (const auto& cls : r.classes.classes()) EXPECT_LE(cls.size(), 2 * s);
  }
}

TEST(ColorCode, StreamingMatchesMaterialized) {
  Graph g = odd_cycle_blowup(5, 6).graph;
  auto r = color_code(g);
  ASSERT_FALSE(r.triangle);
  ColorCodedHost host(g, r.classes);
  std::size_t i = 0;
  host.for_each_instance([&](Instance&& inst) {
    EXPECT_EQ(inst.back_map, r.instances[i].back_map);
    EXPECT_EQ(inst.subgraph, r.instances[i].subgraph);
    ++i;
    return true;
  });
  EXPECT_EQ(i, r.instances.size());
}

Instance tripartite_instance(Vertex s) {
  Fixture f = complete_tripartite(s);
  std::vector<Vertex> id(3 * s);
  std::iota(id.begin(), id.end(), Vertex{0});
  return {f.graph, *f.coloring, id};
}

TEST(Sieve, GuessSchedule) {
  EXPECT_EQ(sieve_guesses(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(sieve_guesses(6), (std::vector<std::uint64_t>{1, 2, 4, 6}));
  EXPECT_EQ(sieve_guesses(8), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(sieve_guesses(0), (std::vector<std::uint64_t>{1}));
}

TEST(Sieve, OutputsAreInducedSubgraphsOfTheInstance) {
  Instance inst = tripartite_instance(4);
  PipelineConfig config;
  config.sieve_repetitions = 2;
  Rng rng(5);
  auto outs = sieve(inst, config, rng);
  EXPECT_EQ(outs.size(), 3u * 3 * 3 * 2);  // guesses {1, 2, 4} per class
  for (const auto& o : outs) {
    EXPECT_EQ(induced_subgraph(inst.subgraph, o.back_map).graph, o.subgraph);
    for (Vertex v = 0; v < o.back_map.size(); ++v)
      EXPECT_EQ(o.coloring[v], inst.coloring[o.back_map[v]]);
  }
  // the all-ones guess keeps everything
  EXPECT_EQ(outs.front().subgraph.num_vertices(), 12u);
}

TEST(Sieve, IsolatesATriangleOnTripartiteHost) {
  Instance inst = tripartite_instance(6);
  PipelineConfig config;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    bool hit = false;
    for_each_sieve_output(inst, config.sieve_repetitions, rng, [&](Instance&& o) {
      hit = count_triangles(o.subgraph) == 1;
      return !hit;
    });
    hits += hit;
  }
  EXPECT_GE(hits, 45);
}

TEST(Sieve, DeterministicGivenSeed) {
  Graph g = odd_cycle_blowup(9, 3).graph;
  PipelineConfig config;
  config.seed = 17;
  config.sieve_repetitions = 2;
  auto a = reduce_to_unique(g, config);
  auto b = reduce_to_unique(g, config);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i)
    EXPECT_EQ(a.instances[i].back_map, b.instances[i].back_map);
}

TEST(Config, Validation) {
  PipelineConfig c;
  c.sieve_repetitions = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.amplification_runs = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.class_cap_factor = 0.5;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(make_base_detector("fast"), DomainError);
}

// Triangle-free, induced-P5-free host: a blowup of C5 with uneven blocks.
Graph p5_free_host(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> size(1, 6);
  std::vector<Vertex> sizes(5);
  for (auto& s : sizes) s = size(rng);
  return twin_blowup(cycle_graph(5), sizes);
}

TEST(Detect, NoFalsePositivesOnTriangleFreeHosts) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = p5_free_host(seed);
    PipelineConfig config;
    config.seed = seed;
    config.audit_promise = true;
    auto r = detect_induced_hfree(g, Pattern(path_graph(5)), config);
    EXPECT_EQ(r.verdict, Verdict::kTriangleFree);
    EXPECT_FALSE(r.witness);
    EXPECT_EQ(r.seed, seed);
    EXPECT_EQ(r.stats.hplus_vertices, 17u);
  }
}

TEST(Detect, FindsPlantedTriangle) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Fixture f = plant_triangle(Fixture{p5_free_host(seed), std::nullopt}, seed);
    PipelineConfig config;
    config.seed = seed;
    auto r = detect_induced_hfree(f.graph, Pattern(path_graph(5)), config);
    ASSERT_EQ(r.verdict, Verdict::kTriangleFound);
    EXPECT_TRUE(is_triangle(f.graph, *r.witness));
  }
}

TEST(Detect, LyingDetectorNeverCausesFalsePositive) {
  BaseDetector liar{"liar",
                    [](const Graph& g, Rng&) -> std::optional<Triangle> {
                      if (g.num_vertices() < 3) return std::nullopt;
                      return Triangle{0, 1, 2};
                    },
                    true};
  Graph g = p5_free_host(3);
  auto r = detect_induced_hfree(g, Pattern(path_graph(5)), PipelineConfig{}, liar);
  EXPECT_EQ(r.verdict, Verdict::kTriangleFree);
  EXPECT_GT(r.stats.rejected_witnesses, 0u);
}

TEST(Detect, MajorityVoteOverRandomizedDetector) {
  // answers correctly in 2 of 3 calls on average; majority of 15 fixes it
  BaseDetector noisy{"noisy",
                     [](const Graph& g, Rng& rng) -> std::optional<Triangle> {
                       if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                         return std::nullopt;
                       return find_triangle(g);
                     },
                     false};
  Fixture f = plant_triangle(Fixture{p5_free_host(4), std::nullopt}, 4);
  PipelineConfig config;
  auto r = detect_induced_hfree(f.graph, Pattern(path_graph(5)), config, noisy);
  EXPECT_EQ(r.verdict, Verdict::kTriangleFound);
  EXPECT_EQ(r.stats.detector_calls % config.amplification_runs, 0u);
}

TEST(Detect, AuditRejectsHostsBreakingThePromise) {
  PipelineConfig config;
  config.audit_promise = true;
  EXPECT_THROW(detect_induced_hfree(path_graph(7), Pattern(path_graph(5)), config),
               PromiseViolation);
}

TEST(Detect, PhaseOneTriangleIsVerified) {
  auto r = detect_induced_hfree(complete_graph(20), Pattern(path_graph(5)), PipelineConfig{});
  EXPECT_EQ(r.verdict, Verdict::kTriangleFound);
  EXPECT_TRUE(r.stats.phase_one_triangle);
  EXPECT_TRUE(is_triangle(complete_graph(20), *r.witness));
}

TEST(Instances, AugmentedPatternAbsentFromInstancesOfFreeHosts) {
  // triangle-free, induced-P5-free host: no instance holds P5+ as a subgraph
  const Graph plus = augment(path_graph(5)).graph;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Graph g = p5_free_host(seed);
    ASSERT_FALSE(find_copy(path_graph(5), g, CopyMode::kInduced));
    auto r = color_code(g);
    ASSERT_FALSE(r.triangle);
    for (const auto& inst : r.instances) {
      EXPECT_FALSE(find_copy(plus, inst.subgraph, CopyMode::kSubgraph));
      EXPECT_FALSE(find_copy(path_graph(5), inst.subgraph, CopyMode::kInduced));
    }
  }
}

TEST(ColoredSetting, RepetitionsAndPartitions) {
  EXPECT_EQ(colored_setting_repetitions(1), 1u);
  EXPECT_GE(std::pow(7.0 / 9.0, colored_setting_repetitions(1000)), 0.0);
  EXPECT_LE(std::pow(7.0 / 9.0, colored_setting_repetitions(1000)), 1.0 / 1000);
  Graph g = complete_tripartite(3).graph;
  PipelineConfig config;
  auto parts = color_code_for_colored_setting(g, config);
  EXPECT_EQ(parts.size(), colored_setting_repetitions(9));
  for (const auto& p : parts) {
    EXPECT_TRUE(p.coloring.is_proper(p.graph));
    for (auto [u, v] : p.graph.edges()) EXPECT_TRUE(g.has_edge(u, v));
  }
}

}  // namespace
}  // namespace hfree
