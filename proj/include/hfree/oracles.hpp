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

#ifndef HFREE_ORACLES_HPP
#define HFREE_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

/// Lexicographically smallest triangle (x < y < z), if any.
inline std::optional<Triangle> find_triangle(const Graph& g) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto nx = g.neighbors(x);
    for (Vertex y : nx) {
      if (y <= x) continue;
      for (Vertex z : g.neighbors(y)) {
        if (z <= y) continue;
        if (std::binary_search(nx.begin(), nx.end(), z)) return Triangle{x, y, z};
      }
    }
  }
  return std::nullopt;
}

/// Calls `fn(x, y, z)` with x < y < z for every triangle.
template <class Fn>
void for_each_triangle(const Graph& g, Fn&& fn) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto nx = g.neighbors(x);
    auto xs = std::upper_bound(nx.begin(), nx.end(), x);
    for (auto yi = xs; yi != nx.end(); ++yi) {
      auto ny = g.neighbors(*yi);
      // merge-intersect the parts of N(x) and N(y) above y
      auto a = yi + 1;
      auto b = std::upper_bound(ny.begin(), ny.end(), *yi);
      while (a != nx.end() && b != ny.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          fn(x, *yi, *a);
          ++a;
          ++b;
        }
      }
    }
  }
}

inline std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t count = 0;
  for_each_triangle(g, [&](Vertex, Vertex, Vertex) { ++count; });
  return count;
}

inline std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(g, [&](Vertex x, Vertex y, Vertex z) {
    out.push_back({x, y, z});
  });
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> back_map;  // local id -> original id
};

/// Subgraph induced by `vertices`, which keep their listed order as local
/// ids. Every edge of `g` between listed vertices is kept.
inline InducedSubgraph induced_subgraph(const Graph& g,
                                        std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), kMaxVertices);
  for (Vertex i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices())
      throw DomainError("vertex " + std::to_string(vertices[i]) +
                        " out of range");
    if (local[vertices[i]] != kMaxVertices)
      throw DomainError("vertex " + std::to_string(vertices[i]) +
                        " listed twice");
    local[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j != kMaxVertices && i < j) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(static_cast<Vertex>(vertices.size()), edges),
          {vertices.begin(), vertices.end()}};
}

namespace detail {

// Backtracking copy search. Pattern vertices are placed in id order and host
// candidates tried in increasing id order, so the first embedding found is
// the lexicographically smallest one. `accept(p, h)` filters single
// placements (used for color constraints).
template <class Accept>
std::optional<Embedding> search_copy(const Graph& pattern, const Graph& host,
                                     CopyMode mode, Accept&& accept) {
  const Vertex k = pattern.num_vertices();
  const Vertex n = host.num_vertices();
  if (k > n) return std::nullopt;
  if (k == 0) return Embedding{{}, mode};

  std::vector<std::uint8_t> padj(static_cast<std::size_t>(k) * k, 0);
  for (auto [a, b] : pattern.edges()) {
    padj[static_cast<std::size_t>(a) * k + b] = 1;
    padj[static_cast<std::size_t>(b) * k + a] = 1;
  }
  // Earlier neighbors of each pattern vertex, used to narrow candidates.
  std::vector<std::vector<Vertex>> back(k);
  for (Vertex p = 0; p < k; ++p)
    for (Vertex q : pattern.neighbors(p))
      if (q < p) back[p].push_back(q);

  std::vector<Vertex> map(k);
  std::vector<char> used(n, 0);

  auto fits = [&](Vertex p, Vertex h) {
    if (used[h] || host.degree(h) < pattern.degree(p) || !accept(p, h))
      return false;
    for (Vertex q = 0; q < p; ++q) {
      bool pe = padj[static_cast<std::size_t>(p) * k + q];
      if (pe) {
        if (!host.has_edge(h, map[q])) return false;
      } else if (mode == CopyMode::kInduced && host.has_edge(h, map[q])) {
        return false;
      }
    }
    return true;
  };

  auto place = [&](auto&& self, Vertex p) -> bool {
    if (p == k) return true;
    auto try_host = [&](Vertex h) {
      if (!fits(p, h)) return false;
      map[p] = h;
      used[h] = 1;
      if (self(self, p + 1)) return true;
      used[h] = 0;
      return false;
    };
    if (!back[p].empty()) {
      Vertex anchor = back[p].front();
      for (Vertex q : back[p])
        if (host.degree(map[q]) < host.degree(map[anchor])) anchor = q;
      for (Vertex h : host.neighbors(map[anchor]))
        if (try_host(h)) return true;
    } else {
      for (Vertex h = 0; h < n; ++h)
        if (try_host(h)) return true;
    }
    return false;
  };

  if (!place(place, 0)) return std::nullopt;
  return Embedding{std::move(map), mode};
}

}  // namespace detail

/// Lexicographically smallest copy of `pattern` in `host` in the given mode.
inline std::optional<Embedding> find_copy(const Graph& pattern,
                                          const Graph& host, CopyMode mode) {
  return detail::search_copy(pattern, host, mode,
                             [](Vertex, Vertex) { return true; });
}

/// Color-preserving (non-induced) copy of a 3-colored pattern.
inline std::optional<Embedding> find_colored_copy(const Pattern& pattern,
                                                  const Graph& host,
                                                  const Coloring& host_coloring) {
  if (!pattern.fixed_coloring)
    throw DomainError("colored copy search needs a pattern coloring");
  const Coloring& pc = *pattern.fixed_coloring;
  if (pc.palette() != 3 || host_coloring.palette() != 3)
    throw DomainError("colored copy search needs palette 3 on both sides (got " +
                      std::to_string(pc.palette()) + " and " +
                      std::to_string(host_coloring.palette()) + ")");
  if (host_coloring.size() != host.num_vertices())
    throw DomainError("host coloring size does not match host");
  return detail::search_copy(
      pattern.graph, host, CopyMode::kSubgraph,
      [&](Vertex p, Vertex h) { return pc[p] == host_coloring[h]; });
}

}  // namespace hfree

#endif  // HFREE_ORACLES_HPP
