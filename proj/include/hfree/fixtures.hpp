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

#ifndef HFREE_FIXTURES_HPP
#define HFREE_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

enum class Family {
  kRandomGnp,
  kOddCycleBlowup,
  kCompleteTripartite,
  kPlantedTriangle,
  kPath,
  kCycle,
  kClique,
};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::kRandomGnp: return "random_gnp";
    case Family::kOddCycleBlowup: return "odd_cycle_blowup";
    case Family::kCompleteTripartite: return "complete_tripartite";
    case Family::kPlantedTriangle: return "planted_triangle";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kClique: return "clique";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::kRandomGnp, Family::kOddCycleBlowup,
                   Family::kCompleteTripartite, Family::kPlantedTriangle,
                   Family::kPath, Family::kCycle, Family::kClique})
    if (to_string(f) == name) return f;
  throw DomainError("unknown fixture family '" + std::string(name) + "'");
}

/// Parameters of a generated host. Fields a family does not use are ignored.
struct FixtureSpec {
  Family family = Family::kPath;
  Vertex n = 0;                 // gnp, path, cycle, clique
  double p = 1.0;               // gnp edge probability; blowup edge keep rate
  Vertex cycle_length = 9;      // blowup base cycle (odd)
  Vertex block = 1;             // blowup block size; tripartite part size
  Family base = Family::kOddCycleBlowup;  // planted_triangle base family
  std::uint64_t seed = 1;
};

struct Fixture {
  Graph graph;
  std::optional<Coloring> coloring;
};

inline Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(Vertex n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Fixture random_gnp(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return {Graph::from_edges(n, e), std::nullopt};
}

/// Proper 3-coloring of C_k used for blowups: i mod 3 when 3 divides k,
/// otherwise 0/1 alternating with the last vertex colored 2.
inline std::vector<Color> odd_cycle_coloring(Vertex k) {
  std::vector<Color> c(k);
  for (Vertex i = 0; i < k; ++i) c[i] = k % 3 == 0 ? i % 3 : i % 2;
  if (k % 3 != 0) c[k - 1] = 2;
  return c;
}

/// Each vertex of C_k becomes an independent block of `block` vertices and
/// each cycle edge a complete bipartite graph, every edge kept with
/// probability `keep`. Block i holds ids i*block .. (i+1)*block-1 and all of
/// a block share its cycle vertex's color.
inline Fixture odd_cycle_blowup(Vertex k, Vertex block, double keep = 1.0,
                                std::uint64_t seed = 1) {
  if (k < 3 || k % 2 == 0) throw DomainError("blowup needs an odd cycle length >= 3");
  if (block < 1) throw DomainError("blowup block size must be >= 1");
  if (!(keep >= 0.0 && keep <= 1.0)) throw DomainError("keep rate must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    Vertex j = (i + 1) % k;
    for (Vertex a = 0; a < block; ++a)
      for (Vertex b = 0; b < block; ++b)
        if (keep >= 1.0 || coin(rng)) e.emplace_back(i * block + a, j * block + b);
  }
  auto base = odd_cycle_coloring(k);
  std::vector<Color> colors(static_cast<std::size_t>(k) * block);
  for (Vertex v = 0; v < colors.size(); ++v) colors[v] = base[v / block];
  return {Graph::from_edges(k * block, e), Coloring(3, std::move(colors))};
}

/// K_{s,s,s}; part i holds ids i*s .. (i+1)*s-1 and has color i.
inline Fixture complete_tripartite(Vertex s) {
  std::vector<Edge> e;
  std::vector<Color> colors(3 * static_cast<std::size_t>(s));
  for (Vertex v = 0; v < 3 * s; ++v) {
    colors[v] = v / s;
    for (Vertex w = v + 1; w < 3 * s; ++w)
      if (v / s != w / s) e.emplace_back(v, w);
  }
  return {Graph::from_edges(3 * s, e), Coloring(3, std::move(colors))};
}

/// Replaces vertex i of `base` by an independent set of sizes[i] vertices
/// (ids in block order) and every edge by a complete bipartite graph. An
/// induced copy of a pattern without non-adjacent twins takes at most one
/// vertex per block, so the blowup is induced-free of every such pattern
/// the base is induced-free of (P5, for instance).
inline Graph twin_blowup(const Graph& base, std::span<const Vertex> sizes) {
  if (sizes.size() != base.num_vertices())
    throw DomainError("twin_blowup needs one block size per base vertex");
  std::vector<Vertex> first(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) first[i + 1] = first[i] + sizes[i];
  std::vector<Edge> e;
  for (auto [u, v] : base.edges())
    for (Vertex a = first[u]; a < first[u + 1]; ++a)
      for (Vertex b = first[v]; b < first[v + 1]; ++b) e.emplace_back(a, b);
  return Graph::from_edges(first.back(), e);
}

/// `a` followed by `b` (ids of b shifted by |V(a)|). The coloring is kept
/// when both parts have one.
inline Fixture disjoint_union(const Fixture& a, const Fixture& b) {
  const Vertex shift = a.graph.num_vertices();
  std::vector<Edge> e = a.graph.edges();
  for (auto [u, v] : b.graph.edges()) e.emplace_back(u + shift, v + shift);
  Fixture out{Graph::from_edges(shift + b.graph.num_vertices(), e), std::nullopt};
  if (a.coloring && b.coloring) {
    std::vector<Color> colors(a.coloring->colors().begin(), a.coloring->colors().end());
    colors.insert(colors.end(), b.coloring->colors().begin(), b.coloring->colors().end());
    out.coloring = Coloring(std::max(a.coloring->palette(), b.coloring->palette()),
                            std::move(colors));
  }
  return out;
}

/// Disjoint union of `base` and a new triangle, with all ids shuffled. The
/// triangle count grows by exactly one, and induced-subgraph properties
/// shared by the base and a lone triangle carry over.
inline Fixture plant_triangle(const Fixture& base, std::uint64_t seed) {
  const Vertex n = base.graph.num_vertices() + 3;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : base.graph.edges()) e.emplace_back(relabel[u], relabel[v]);
  const Vertex t = base.graph.num_vertices();
  e.emplace_back(relabel[t], relabel[t + 1]);
  e.emplace_back(relabel[t + 1], relabel[t + 2]);
  e.emplace_back(relabel[t], relabel[t + 2]);
  Fixture out{Graph::from_edges(n, e), std::nullopt};
  if (base.coloring) {
    std::vector<Color> colors(n);
    for (Vertex v = 0; v < t; ++v) colors[relabel[v]] = (*base.coloring)[v];
    for (Vertex i = 0; i < 3; ++i) colors[relabel[t + i]] = i;
    out.coloring = Coloring(3, std::move(colors));
  }
  return out;
}

inline Fixture generate_fixture(const FixtureSpec& spec) {
  switch (spec.family) {
    case Family::kRandomGnp:
      return random_gnp(spec.n, spec.p, spec.seed);
    case Family::kOddCycleBlowup:
      return odd_cycle_blowup(spec.cycle_length, spec.block, spec.p, spec.seed);
    case Family::kCompleteTripartite:
      return complete_tripartite(spec.block);
    case Family::kPlantedTriangle: {
      if (spec.base == Family::kPlantedTriangle)
        throw DomainError("planted_triangle cannot use itself as base");
      FixtureSpec base = spec;
      base.family = spec.base;
      // distinct streams for the base and the relabeling
      return plant_triangle(generate_fixture(base), spec.seed ^ 0x9e3779b97f4a7c15ULL);
    }
    case Family::kPath:
      return {path_graph(spec.n), std::nullopt};
    case Family::kCycle:
      return {cycle_graph(spec.n), std::nullopt};
    case Family::kClique:
      return {complete_graph(spec.n), std::nullopt};
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Colored patterns used as H* fixtures.

/// C6 colored 0,1,2,0,1,2 around the cycle. Every vertex sees two colors,
/// and it has no color-preserving copy in the colored C9 blowup: each step
/// of such a walk moves one block forward exactly when the color goes up by
/// one, so the closed walk would wind 6 blocks around a 9-cycle.
inline Pattern colored_c6() {
  return Pattern(cycle_graph(6), Coloring(3, {0, 1, 2, 0, 1, 2}));
}

inline Pattern colored_edge() {
  return Pattern(path_graph(2), Coloring(3, {0, 1}));
}

inline Pattern colored_p4() {
  return Pattern(path_graph(4), Coloring(3, {0, 1, 2, 0}));
}

inline Pattern colored_k3() {
  return Pattern(complete_graph(3), Coloring(3, {0, 1, 2}));
}

/// Triangle 0,1,2 plus vertex 3 hanging off 0, colored like 1.
inline Pattern colored_k3_pendant() {
  return Pattern(Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}),
                 Coloring(3, {0, 1, 2, 1}));
}

}  // namespace hfree

#endif  // HFREE_FIXTURES_HPP
