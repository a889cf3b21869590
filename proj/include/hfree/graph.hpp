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

#ifndef HFREE_GRAPH_HPP
#define HFREE_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfree {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;

inline constexpr Vertex kMaxVertices = std::numeric_limits<std::int32_t>::max();

/// Raised when an input violates a domain invariant (improper coloring,
/// wrong triangle count, broken promise). Maps to CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed text input. Maps to CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1, stored as CSR with sorted
/// neighbor lists. Immutable once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Edgeless graph on `n` vertices.
  explicit Graph(Vertex n) : offsets_(static_cast<std::size_t>(n) + 1, 0) {
    check_size(n);
  }

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are merged; self-loops and out-of-range endpoints throw.
  static Graph from_edges(Vertex n, std::span<const Edge> edges) {
    check_size(n);
    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw DomainError("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") out of range for n=" +
                          std::to_string(n));
      }
      if (u == v) {
        throw DomainError("self-loop at vertex " + std::to_string(u));
      }
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& a : arcs) ++g.offsets_[a.first + 1];
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adj_.reserve(arcs.size());
    for (const auto& a : arcs) g.adj_.push_back(a.second);
    return g;
  }

  static Graph from_edges(Vertex n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  Vertex num_vertices() const {
    return static_cast<Vertex>(offsets_.size() - 1);
  }
  std::uint64_t num_edges() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Canonical edge list: u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::uint64_t num_non_edges() const {
    const std::uint64_t n = num_vertices();
    return n * (n - (n > 0 ? 1 : 0)) / 2 - num_edges();
  }

  /// Copy of this graph with one edge removed.
  Graph without_edge(Vertex u, Vertex v) const {
    auto es = edges();
    std::erase(es, Edge{std::min(u, v), std::max(u, v)});
    return from_edges(num_vertices(), es);
  }

  bool operator==(const Graph&) const = default;

 private:
  static void check_size(Vertex n) {
    if (n > kMaxVertices) throw DomainError("vertex count exceeds 2^31-1");
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

/// Incremental graph assembly, used by the gadget and pattern constructions.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(Vertex n) : n_(n) {}

  Vertex num_vertices() const { return n_; }

  Vertex add_vertex() { return n_++; }

  /// Appends `count` vertices; returns the id of the first.
  Vertex add_vertices(Vertex count) {
    Vertex first = n_;
    n_ += count;
    return first;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  /// Copies `g` into the builder. Vertices listed in `identify` are glued
  /// onto existing builder vertices; the rest get fresh ids in increasing
  /// order. Returns the id each vertex of `g` received.
  std::vector<Vertex> attach(const Graph& g,
                             const std::map<Vertex, Vertex>& identify = {}) {
    std::vector<Vertex> image(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto it = identify.find(v);
      image[v] = it != identify.end() ? it->second : add_vertex();
    }
    for (auto [u, v] : g.edges()) add_edge(image[u], image[v]);
    return image;
  }

  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
};

/// Total vertex -> color map over a palette of `palette` colors.
class Coloring {
 public:
  Coloring() = default;
  Coloring(Color palette, std::vector<Color> assign)
      : palette_(palette), assign_(std::move(assign)) {
    if (palette_ == 0) throw DomainError("palette must be at least 1");
    for (std::size_t v = 0; v < assign_.size(); ++v) {
      if (assign_[v] >= palette_) {
        throw DomainError("vertex " + std::to_string(v) + " has color " +
                          std::to_string(assign_[v]) + " outside palette " +
                          std::to_string(palette_));
      }
    }
  }

  Color palette() const { return palette_; }
  std::size_t size() const { return assign_.size(); }
  Color operator[](Vertex v) const { return assign_[v]; }
  std::span<const Color> colors() const { return assign_; }

  bool is_proper(const Graph& g) const {
    if (assign_.size() != g.num_vertices()) return false;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      for (Vertex v : g.neighbors(u))
        if (assign_[u] == assign_[v]) return false;
    return true;
  }

  /// Members of every color class, each sorted by vertex id.
  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(palette_);
    for (Vertex v = 0; v < assign_.size(); ++v) out[assign_[v]].push_back(v);
    return out;
  }

  bool operator==(const Coloring&) const = default;

 private:
  Color palette_ = 1;
  std::vector<Color> assign_;
};

/// A graph used as a forbidden pattern. The optional fixed coloring is the
/// forbidden coloring of the colored setting; terminals label gadget ports.
struct Pattern {
  Graph graph;
  std::optional<Coloring> fixed_coloring;
  std::map<std::string, Vertex> terminals;

  Pattern() = default;
  explicit Pattern(Graph g, std::optional<Coloring> coloring = std::nullopt,
                   std::map<std::string, Vertex> terms = {})
      : graph(std::move(g)),
        fixed_coloring(std::move(coloring)),
        terminals(std::move(terms)) {
    if (fixed_coloring) {
      if (fixed_coloring->palette() != 3)
        throw DomainError("pattern coloring must use palette 3");
      if (!fixed_coloring->is_proper(graph))
        throw DomainError("pattern coloring is not proper");
    }
    for (const auto& [name, v] : terminals) {
      if (v >= graph.num_vertices())
        throw DomainError("terminal '" + name + "' maps to invalid vertex " +
                          std::to_string(v));
    }
  }
};

enum class CopyMode { kSubgraph, kInduced };

/// Injective map pattern-vertex -> host-vertex.
struct Embedding {
  std::vector<Vertex> map;
  CopyMode mode = CopyMode::kSubgraph;

  /// Checks injectivity, edge preservation and (for induced mode) edge
  /// reflection against the given pattern and host.
  bool is_valid(const Graph& pattern, const Graph& host) const {
    if (map.size() != pattern.num_vertices()) return false;
    std::vector<char> used(host.num_vertices(), 0);
    for (Vertex h : map) {
      if (h >= host.num_vertices() || used[h]) return false;
      used[h] = 1;
    }
    for (Vertex a = 0; a < pattern.num_vertices(); ++a) {
      for (Vertex b = a + 1; b < pattern.num_vertices(); ++b) {
        bool pe = pattern.has_edge(a, b);
        bool he = host.has_edge(map[a], map[b]);
        if (pe && !he) return false;
        if (mode == CopyMode::kInduced && !pe && he) return false;
      }
    }
    return true;
  }
};

inline Triangle sorted_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline bool is_triangle(const Graph& g, const Triangle& t) {
  return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] &&
         std::max({t[0], t[1], t[2]}) < g.num_vertices() &&
         g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) &&
         g.has_edge(t[0], t[2]);
}

}  // namespace hfree

#endif  // HFREE_GRAPH_HPP
