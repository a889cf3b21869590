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

#ifndef HFREE_PATTERNS_HPP
#define HFREE_PATTERNS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hfree/coloring.hpp"
#include "hfree/graph.hpp"
#include "hfree/oracles.hpp"

namespace hfree {

/// H plus two wedge vertices x_uv, y_uv on every non-edge {u, v} of H.
///
/// Base vertices keep their ids. Wedge vertices follow in lexicographic
/// order of the non-edges (u < v): non-edge i owns ids n + 2i and n + 2i + 1.
struct AugmentedPattern {
  Pattern base;
  Graph graph;
  std::map<Edge, std::pair<Vertex, Vertex>> wedge_index;
};

inline AugmentedPattern augment(const Pattern& h) {
  const Graph& g = h.graph;
  const Vertex n = g.num_vertices();
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  std::map<Edge, std::pair<Vertex, Vertex>> wedges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Vertex x = b.add_vertex();
      Vertex y = b.add_vertex();
      b.add_edge(u, x);
      b.add_edge(v, x);
      b.add_edge(u, y);
      b.add_edge(v, y);
      wedges.emplace(Edge{u, v}, std::pair{x, y});
    }
  }
  return {h, b.build(), std::move(wedges)};
}

inline AugmentedPattern augment(const Graph& h) { return augment(Pattern(h)); }

struct AugmentReport {
  bool base_colorable = false;
  bool augmented_colorable = false;
  std::uint64_t base_triangles = 0;
  std::uint64_t augmented_triangles = 0;
  /// H 3-colorable implies H+ 3-colorable.
  bool chromatic_ok = false;
  /// H+ has exactly as many triangles as H.
  bool triangle_ok = false;
};

/// Checks that augmentation preserves 3-colorability and the triangle count.
/// Throws if H+ would exceed `max_vertices`.
inline AugmentReport verify_augment_preserves(const Pattern& h,
                                              Vertex max_vertices = 512) {
  const std::uint64_t size =
      h.graph.num_vertices() + 2 * h.graph.num_non_edges();
  if (size > max_vertices)
    throw DomainError("augmented pattern would have " + std::to_string(size) +
                      " vertices, above the bound " +
                      std::to_string(max_vertices));
  AugmentedPattern plus = augment(h);
  AugmentReport r;
  r.base_colorable = is_colorable(h.graph, 3);
  r.augmented_colorable = is_colorable(plus.graph, 3);
  r.base_triangles = count_triangles(h.graph);
  r.augmented_triangles = count_triangles(plus.graph);
  r.chromatic_ok = !r.base_colorable || r.augmented_colorable;
  r.triangle_ok = r.base_triangles == r.augmented_triangles;
  return r;
}

namespace detail {

// True iff the neighbors of v that are alive use at most one color.
inline bool monochromatic_neighborhood(const Graph& g,
                                       std::span<const Color> colors,
                                       const std::vector<char>& alive,
                                       Vertex v) {
  Color seen = kUncolored;
  for (Vertex w : g.neighbors(v)) {
    if (!alive[w]) continue;
    if (seen == kUncolored) {
      seen = colors[w];
    } else if (colors[w] != seen) {
      return false;
    }
  }
  return true;
}

// Greedy peel restricted to `alive`: repeatedly removes the lowest-id vertex
// whose surviving neighborhood is monochromatic or empty. Returns true iff
// what survives is empty or exactly a triangle. `alive` is consumed.
inline bool peels(const Graph& g, std::span<const Color> colors,
                  std::vector<char>& alive,
                  std::vector<Vertex>* order = nullptr) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (alive[v] && monochromatic_neighborhood(g, colors, alive, v)) {
        alive[v] = 0;
        if (order) order->push_back(v);
        progress = true;
        break;
      }
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (alive[v]) rest.push_back(v);
  if (rest.empty()) return true;
  return rest.size() == 3 && is_triangle(g, {rest[0], rest[1], rest[2]});
}

inline void require_at_most_one_triangle(const Graph& h) {
  if (count_triangles(h) > 1)
    throw DomainError(
        "degenerate colorings are only defined for patterns with at most one "
        "triangle");
}

}  // namespace detail

/// Whether every induced subgraph of `h` other than a triangle has a vertex
/// whose neighborhood inside it is monochromatic (or empty). Decided by
/// greedy peeling, which is order-independent: the first peeled vertex of
/// any subset already had a monochromatic neighborhood in a superset.
inline bool check_degenerate_coloring(const Graph& h, const Coloring& c) {
  if (c.palette() != 3) throw DomainError("degenerate colorings use palette 3");
  if (!c.is_proper(h)) throw DomainError("coloring is not proper");
  detail::require_at_most_one_triangle(h);
  std::vector<char> alive(h.num_vertices(), 1);
  return detail::peels(h, c.colors(), alive);
}

/// The vertex removal order of the greedy peel (possibly partial).
inline std::vector<Vertex> degenerate_peel_order(const Graph& h,
                                                 const Coloring& c) {
  std::vector<char> alive(h.num_vertices(), 1);
  std::vector<Vertex> order;
  detail::peels(h, c.colors(), alive, &order);
  return order;
}

enum class SearchStatus { kFound, kNone, kInconclusive };

struct DegenerateSearch {
  SearchStatus status = SearchStatus::kNone;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultDegenerateBudget = 100'000'000;

/// Backtracking search for a degenerate proper 3-coloring.
///
/// Vertices are colored in an order that keeps each next vertex as attached
/// to the colored prefix as possible. Colors are tried with the usual
/// "at most one new color" symmetry break, and a partial coloring is cut as
/// soon as its colored prefix fails to peel (the property is inherited by
/// induced subgraphs, so no extension could repair it).
inline DegenerateSearch find_degenerate_coloring(
    const Graph& h, std::uint64_t node_budget = kDefaultDegenerateBudget) {
  detail::require_at_most_one_triangle(h);
  const Vertex n = h.num_vertices();
  DegenerateSearch result;
  if (n == 0) {
    result.status = SearchStatus::kFound;
    result.coloring = Coloring(3, {});
    return result;
  }

  std::vector<Vertex> order;
  {
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> links(n, 0);
    for (Vertex step = 0; step < n; ++step) {
      Vertex best = kMaxVertices;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kMaxVertices || links[v] > links[best] ||
            (links[v] == links[best] && h.degree(v) > h.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (Vertex w : h.neighbors(best)) ++links[w];
    }
  }

  std::vector<Color> colors(n, kUncolored);
  bool out_of_budget = false;

  auto recurse = [&](auto&& self, Vertex depth, Color used) -> bool {
    if (depth == n) return true;
    if (++result.nodes > node_budget) {
      out_of_budget = true;
      return false;
    }
    Vertex v = order[depth];
    for (Color c = 0; c < 3 && c <= used; ++c) {
      bool clash = false;
      for (Vertex w : h.neighbors(v))
        if (colors[w] == c) clash = true;
      if (clash) continue;
      colors[v] = c;
      std::vector<char> prefix(n, 0);
      for (Vertex i = 0; i <= depth; ++i) prefix[order[i]] = 1;
      if (detail::peels(h, colors, prefix) &&
          self(self, depth + 1, std::max(used, c + 1)))
        return true;
      colors[v] = kUncolored;
      if (out_of_budget) return false;
    }
    return false;
  };

  if (recurse(recurse, 0, 0)) {
    result.status = SearchStatus::kFound;
    result.coloring = Coloring(3, colors);
  } else {
    result.status =
        out_of_budget ? SearchStatus::kInconclusive : SearchStatus::kNone;
  }
  return result;
}

}  // namespace hfree

#endif  // HFREE_PATTERNS_HPP
