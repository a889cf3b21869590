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

/// \file coloring.hpp
///
/// Exact proper-coloring search over small palettes.
///
/// Every vertex carries a bitmask domain of still-allowed colors. Fixing a
/// vertex removes its color from all neighbors; a vertex whose neighbors
/// already use all but one color becomes fixed in turn, and so on until a
/// fixpoint or a wiped-out domain. Branching picks the undecided vertex with
/// the smallest domain.
///
/// After propagation the undecided vertices are split into connected
/// components (decided vertices no longer constrain anything, their colors
/// having been removed from neighbor domains) and each component is solved
/// on its own. This matters for the composed gadgets: once the interface of
/// H* is colored, the six pattern copies and the equality gadgets are
/// independent subproblems, and a contradiction inside one gadget must not
/// be rediscovered for every coloring of an unrelated copy.

#ifndef HFREE_COLORING_HPP
#define HFREE_COLORING_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

inline constexpr Color kUncolored = static_cast<Color>(-1);

namespace detail {

class DomainSearch {
 public:
  using Mask = std::uint32_t;

  DomainSearch(const Graph& g, Color palette) : g_(g), palette_(palette) {
    if (palette == 0 || palette > 31)
      throw DomainError("palette must be in 1..31");
    full_ = (Mask{1} << palette) - 1;
  }

  std::vector<Mask> initial_domains() const {
    return std::vector<Mask>(g_.num_vertices(), full_);
  }

  /// Restricts `v` to `c` and propagates. False on contradiction.
  bool assign(std::vector<Mask>& dom, Vertex v, Color c) const {
    Mask bit = Mask{1} << c;
    if (!(dom[v] & bit)) return false;
    if (dom[v] == bit) return true;
    dom[v] = bit;
    std::vector<Vertex> queue{v};
    return propagate(dom, queue);
  }

  /// Propagates all currently singleton domains. False on contradiction.
  bool propagate_all(std::vector<Mask>& dom) const {
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < dom.size(); ++v) {
      if (dom[v] == 0) return false;
      if (std::has_single_bit(dom[v])) queue.push_back(v);
    }
    return propagate(dom, queue);
  }

  /// Decides whether `dom` extends to a full proper coloring. On success the
  /// domains are all singletons describing one such coloring.
  bool solve(std::vector<Mask>& dom) const {
    if (!propagate_all(dom)) return false;
    std::vector<Vertex> scope;
    for (Vertex v = 0; v < dom.size(); ++v)
      if (!std::has_single_bit(dom[v])) scope.push_back(v);
    return solve_scope(dom, scope);
  }

  static std::vector<Color> to_colors(const std::vector<Mask>& dom) {
    std::vector<Color> out(dom.size());
    for (std::size_t v = 0; v < dom.size(); ++v)
      out[v] = static_cast<Color>(std::countr_zero(dom[v]));
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool propagate(std::vector<Mask>& dom, std::vector<Vertex>& queue) const {
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      Mask bit = dom[v];
      for (Vertex w : g_.neighbors(v)) {
        if (!(dom[w] & bit)) continue;
        dom[w] &= ~bit;
        if (dom[w] == 0) return false;
        if (std::has_single_bit(dom[w])) queue.push_back(w);
      }
    }
    return true;
  }

  // Solves the undecided vertices in `scope` (all domains already
  // propagated). Writes the solution back into `dom` on success.
  bool solve_scope(std::vector<Mask>& dom,
                   const std::vector<Vertex>& scope) const {
    for (const auto& comp : components(dom, scope)) {
      if (!solve_component(dom, comp)) return false;
    }
    return true;
  }

  bool solve_component(std::vector<Mask>& dom,
                       const std::vector<Vertex>& comp) const {
    ++nodes_;
    Vertex pick = comp.front();
    int best = 64;
    std::size_t best_deg = 0;
    for (Vertex v : comp) {
      int size = std::popcount(dom[v]);
      if (size < best || (size == best && g_.degree(v) > best_deg)) {
        pick = v;
        best = size;
        best_deg = g_.degree(v);
      }
    }
    for (Mask rest = dom[pick]; rest; rest &= rest - 1) {
      Color c = static_cast<Color>(std::countr_zero(rest));
      std::vector<Mask> trial = dom;
      if (!assign(trial, pick, c)) continue;
      std::vector<Vertex> sub;
      for (Vertex v : comp)
        if (!std::has_single_bit(trial[v])) sub.push_back(v);
      if (solve_scope(trial, sub)) {
        for (Vertex v : comp) dom[v] = trial[v];
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<Vertex>> components(
      const std::vector<Mask>& dom, const std::vector<Vertex>& scope) const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(dom.size(), 0);
    for (Vertex s : scope) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : g_.neighbors(comp[i])) {
          if (!seen[w] && !std::has_single_bit(dom[w])) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  const Graph& g_;
  Color palette_;
  Mask full_ = 0;
  mutable std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Finds a proper coloring extending `partial` (entries equal to
/// kUncolored are free). An empty `partial` means no vertex is fixed.
inline std::optional<Coloring> find_proper_coloring(
    const Graph& g, Color palette = 3, std::span<const Color> partial = {}) {
  detail::DomainSearch search(g, palette);
  auto dom = search.initial_domains();
  for (Vertex v = 0; v < partial.size(); ++v) {
    if (partial[v] == kUncolored) continue;
    if (partial[v] >= palette) return std::nullopt;
    dom[v] &= detail::DomainSearch::Mask{1} << partial[v];
    if (dom[v] == 0) return std::nullopt;
  }
  if (!search.solve(dom)) return std::nullopt;
  return Coloring(palette, detail::DomainSearch::to_colors(dom));
}

inline bool is_colorable(const Graph& g, Color palette = 3) {
  return find_proper_coloring(g, palette).has_value();
}

/// True iff `partial` extends to a proper coloring of `g`.
inline bool is_extendable(const Graph& g, std::span<const Color> partial,
                          Color palette = 3) {
  return find_proper_coloring(g, palette, partial).has_value();
}

/// Not `palette`-colorable, but colorable after deleting any single edge.
inline bool is_edge_critical(const Graph& g, Color palette = 3) {
  if (is_colorable(g, palette)) return false;
  for (auto [u, v] : g.edges())
    if (!is_colorable(g.without_edge(u, v), palette)) return false;
  return true;
}

/// All assignments to `terminals` (listed in the order of `terminals`,
/// enumerated lexicographically) that extend to a proper coloring of `g`.
///
/// Terminals are fixed first, one at a time with propagation after each, so
/// rigid gadgets prune almost every prefix before the extension test runs.
inline std::vector<std::vector<Color>> enumerate_extendable_colorings(
    const Graph& g, std::span<const Vertex> terminals, Color palette = 3) {
  using Mask = detail::DomainSearch::Mask;
  detail::DomainSearch search(g, palette);
  std::vector<std::vector<Color>> out;
  std::vector<Color> current(terminals.size(), 0);

  auto recurse = [&](auto&& self, std::size_t i,
                     const std::vector<Mask>& dom) -> void {
    if (i == terminals.size()) {
      std::vector<Mask> rest = dom;
      if (search.solve(rest)) out.push_back(current);
      return;
    }
    Vertex t = terminals[i];
    for (Color c = 0; c < palette; ++c) {
      std::vector<Mask> trial = dom;
      if (!search.assign(trial, t, c)) continue;
      current[i] = c;
      self(self, i + 1, trial);
    }
  };
  auto dom = search.initial_domains();
  recurse(recurse, 0, dom);
  return out;
}

/// For each vertex in `probe`, the bitmask of colors it takes in at least one
/// proper coloring extending `partial`. A single-bit mask means the vertex is
/// forced. Returns an empty vector when `partial` does not extend at all.
inline std::vector<std::uint32_t> feasible_colors(
    const Graph& g, std::span<const Color> partial,
    std::span<const Vertex> probe, Color palette = 3) {
  if (!is_extendable(g, partial, palette)) return {};
  std::vector<Color> trial(g.num_vertices(), kUncolored);
  std::copy(partial.begin(), partial.end(), trial.begin());
  std::vector<std::uint32_t> out;
  out.reserve(probe.size());
  for (Vertex v : probe) {
    std::uint32_t mask = 0;
    Color saved = trial[v];
    for (Color c = 0; c < palette; ++c) {
      if (saved != kUncolored && saved != c) continue;
      trial[v] = c;
      if (is_extendable(g, trial, palette)) mask |= 1u << c;
    }
    trial[v] = saved;
    out.push_back(mask);
  }
  return out;
}

}  // namespace hfree

#endif  // HFREE_COLORING_HPP
