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

/// \file gadgets.hpp
///
/// Coloring gadgets built from the Grötzsch graph, and the pattern H* that
/// turns colored H-freeness into plain H*-freeness.
///
/// All constructions fix their vertex numbering:
///   - Grötzsch: outer C5 on 0..4, shadows 5..9 (5+i sees the outer
///     neighbors of i), apex 10.
///   - EQ(u, v): Grötzsch minus edge {0, 1}; u = 0, v = 1.
///   - NEQ(u, v): EQ plus pendant 11 on vertex 1; u = 11, v = 0.
///   - X: u, v, w = 0, 1, 2; x1, x2, y1, y2, z1, z2 = 3..8; then the
///     internals of NEQ(u,v), NEQ(v,w), NEQ(w,u).
///   - H*: interface first (X core and pairs, or the core triangle), then
///     the six pattern copies in lexicographic permutation order, then
///     gadget internals.

#ifndef HFREE_GADGETS_HPP
#define HFREE_GADGETS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/coloring.hpp"
#include "hfree/graph.hpp"
#include "hfree/oracles.hpp"

namespace hfree {

enum class GadgetKind {
  kGrotzsch,
  kEq,
  kEqSet,
  kNeq,
  kX,
  kHstarTriangleFree,
  kHstarTriangle,
};

inline std::string_view to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::kGrotzsch: return "grotzsch";
    case GadgetKind::kEq: return "eq";
    case GadgetKind::kEqSet: return "eq_set";
    case GadgetKind::kNeq: return "neq";
    case GadgetKind::kX: return "X";
    case GadgetKind::kHstarTriangleFree: return "hstar_trianglefree";
    case GadgetKind::kHstarTriangle: return "hstar_triangle";
  }
  return "?";
}

struct Gadget {
  Graph graph;
  std::map<std::string, Vertex> terminals;
  GadgetKind kind = GadgetKind::kGrotzsch;
  /// Vertices whose joint colorings carry the gadget's guarantee.
  std::vector<Vertex> interface;
  /// H* only: the six embedded copies of the source pattern.
  std::vector<Embedding> copies;
  /// H* only: some color class of the source pattern is empty, so the
  /// corresponding attachments are vacuous.
  bool empty_color_class = false;
};

inline Gadget grotzsch() {
  GraphBuilder b(11);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(10, 5 + i);
  }
  Gadget g;
  g.graph = b.build();
  g.kind = GadgetKind::kGrotzsch;
  g.terminals = {{"p", 0}, {"q", 1}};
  return g;
}

/// Forces c(u) = c(v) in every proper 3-coloring.
inline Gadget eq_gadget() {
  Gadget g;
  g.graph = grotzsch().graph.without_edge(0, 1);
  g.kind = GadgetKind::kEq;
  g.terminals = {{"u", 0}, {"v", 1}};
  g.interface = {0, 1};
  return g;
}

/// Forces c(u) = c(s) for every s in an independent set of size `s`:
/// `s` copies of EQ sharing u. Terminals u, v1..vs.
inline Gadget eq_set_gadget(Vertex s) {
  if (s == 0) throw DomainError("eq_set gadget needs |S| >= 1");
  const Graph eq = eq_gadget().graph;
  GraphBuilder b;
  Vertex u = b.add_vertex();
  Gadget g;
  g.kind = GadgetKind::kEqSet;
  g.terminals["u"] = u;
  g.interface.push_back(u);
  for (Vertex i = 0; i < s; ++i) {
    auto image = b.attach(eq, {{0, u}});
    g.terminals["v" + std::to_string(i + 1)] = image[1];
    g.interface.push_back(image[1]);
  }
  g.graph = b.build();
  return g;
}

/// Forces c(u) != c(v) in every proper 3-coloring.
inline Gadget neq_gadget() {
  GraphBuilder b;
  b.attach(eq_gadget().graph);
  Vertex pendant = b.add_vertex();
  b.add_edge(pendant, 1);
  Gadget g;
  g.graph = b.build();
  g.kind = GadgetKind::kNeq;
  g.terminals = {{"u", pendant}, {"v", 0}};
  g.interface = {pendant, 0};
  return g;
}

namespace detail {

inline constexpr std::array<std::string_view, 9> kXTerminalNames = {
    "u", "v", "w", "x1", "x2", "y1", "y2", "z1", "z2"};

// Lexicographic permutations of {0, 1, 2}.
inline constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Wires the X gadget onto builder vertices ids[0..8] (u, v, w, x1..z2):
// the twelve core-to-pair edges now, the NEQ internals appended.
inline void wire_x(GraphBuilder& b, const std::array<Vertex, 9>& ids) {
  const Vertex u = ids[0], v = ids[1], w = ids[2];
  const std::array<std::array<Vertex, 2>, 6> links = {{
      {v, w}, {u, w},  // x1 -> c(u), x2 -> c(v)
      {u, w}, {u, v},  // y1 -> c(v), y2 -> c(w)
      {w, v}, {u, v},  // z1 -> c(u), z2 -> c(w)
  }};
  for (std::size_t i = 0; i < 6; ++i)
    for (Vertex c : links[i]) b.add_edge(ids[3 + i], c);
  const Gadget neq = neq_gadget();
  const Vertex nu = neq.terminals.at("u"), nv = neq.terminals.at("v");
  b.attach(neq.graph, {{nu, u}, {nv, v}});
  b.attach(neq.graph, {{nu, v}, {nv, w}});
  b.attach(neq.graph, {{nu, w}, {nv, u}});
}

inline void check_colored_pattern(const Pattern& h) {
  if (!h.fixed_coloring)
    throw DomainError("H* needs a pattern with a fixed 3-coloring");
  if (h.fixed_coloring->palette() != 3 || !h.fixed_coloring->is_proper(h.graph))
    throw DomainError("pattern coloring must be a proper 3-coloring");
}

}  // namespace detail

/// Six-terminal gadget: in every proper 3-coloring the pairs {x1,x2},
/// {y1,y2}, {z1,z2} get the three distinct unordered pairs of colors.
inline Gadget gadget_x() {
  GraphBuilder b(9);
  std::array<Vertex, 9> ids{};
  for (Vertex i = 0; i < 9; ++i) ids[i] = i;
  detail::wire_x(b, ids);
  Gadget g;
  g.graph = b.build();
  g.kind = GadgetKind::kX;
  for (Vertex i = 0; i < 9; ++i) {
    g.terminals[std::string(detail::kXTerminalNames[i])] = i;
    g.interface.push_back(i);
  }
  return g;
}

/// H* for a triangle-free 3-colored H: X plus one copy of H per bijection
/// from the three X-pairs to the color classes of H, each pair joined
/// completely to its class in that copy.
inline Gadget hstar_trianglefree(const Pattern& h) {
  detail::check_colored_pattern(h);
  if (count_triangles(h.graph) != 0)
    throw DomainError("hstar_trianglefree needs a triangle-free pattern");
  const Coloring& ch = *h.fixed_coloring;
  const Vertex nh = h.graph.num_vertices();

  GraphBuilder b(9);
  std::array<Vertex, 9> ids{};
  for (Vertex i = 0; i < 9; ++i) ids[i] = i;

  Gadget g;
  g.kind = GadgetKind::kHstarTriangleFree;
  for (const auto& cls : ch.classes())
    if (cls.empty()) g.empty_color_class = true;

  for (const auto& perm : detail::kPermutations) {
    // perm[pair] = color class assigned to that pair
    auto image = b.attach(h.graph);
    for (Vertex p = 0; p < nh; ++p) {
      for (int pair = 0; pair < 3; ++pair) {
        if (perm[pair] != static_cast<int>(ch[p])) continue;
        b.add_edge(image[p], ids[3 + 2 * pair]);
        b.add_edge(image[p], ids[4 + 2 * pair]);
      }
    }
    g.copies.push_back(Embedding{std::move(image), CopyMode::kSubgraph});
  }
  detail::wire_x(b, ids);

  g.graph = b.build();
  for (Vertex i = 0; i < 9; ++i) {
    g.terminals[std::string(detail::kXTerminalNames[i])] = i;
    g.interface.push_back(i);
  }
  return g;
}

/// H* for a 3-colored H with exactly one triangle xyz: a core triangle
/// u, v, w shared by six copies of H - {x, y, z}, one per bijection
/// phi: {u, v, w} -> {x, y, z}. Core vertex l is wired to the copy as
/// phi(l) is in H, and tied by equality gadgets to the copy's vertices in
/// the color class of phi(l).
inline Gadget hstar_triangle(const Pattern& h) {
  detail::check_colored_pattern(h);
  auto triangles = list_triangles(h.graph);
  if (triangles.size() != 1)
    throw DomainError("hstar_triangle needs exactly one triangle, found " +
                      std::to_string(triangles.size()));
  const Coloring& ch = *h.fixed_coloring;
  const Triangle tri = triangles.front();
  const Vertex nh = h.graph.num_vertices();

  std::vector<Vertex> rest;  // H' = H - {x, y, z}
  for (Vertex p = 0; p < nh; ++p)
    if (p != tri[0] && p != tri[1] && p != tri[2]) rest.push_back(p);
  const auto local =
      induced_subgraph(h.graph, std::span<const Vertex>(rest)).graph;

  GraphBuilder b(3);
  const std::array<Vertex, 3> core = {0, 1, 2};
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);

  Gadget g;
  g.kind = GadgetKind::kHstarTriangle;
  {
    // classes of H' by color; a class that is empty in H' leaves a core
    // vertex without equality gadgets in every copy
    std::array<bool, 3> seen{};
    for (Vertex p : rest) seen[ch[p]] = true;
    g.empty_color_class = !(seen[0] && seen[1] && seen[2]);
  }

  struct Tie {
    Vertex core, member;
  };
  std::vector<Tie> ties;
  for (const auto& perm : detail::kPermutations) {
    // phi(core[l]) = tri[perm[l]]
    auto image = b.attach(local);
    Embedding e;
    e.map.assign(nh, 0);
    for (int l = 0; l < 3; ++l) e.map[tri[perm[l]]] = core[l];
    for (Vertex i = 0; i < rest.size(); ++i) {
      const Vertex p = rest[i];
      e.map[p] = image[i];
      for (int l = 0; l < 3; ++l) {
        const Vertex role = tri[perm[l]];
        if (h.graph.has_edge(p, role)) b.add_edge(image[i], core[l]);
        if (ch[p] == ch[role]) ties.push_back({core[l], image[i]});
      }
    }
    g.copies.push_back(std::move(e));
  }
  const Graph eq = eq_gadget().graph;
  for (const Tie& t : ties) b.attach(eq, {{0, t.core}, {1, t.member}});

  g.graph = b.build();
  g.terminals = {{"u", 0}, {"v", 1}, {"w", 2}};
  g.interface = {0, 1, 2};
  return g;
}

/// Dispatches on the triangle count of h (0 or 1).
inline Gadget build_hstar(const Pattern& h) {
  auto t = count_triangles(h.graph);
  if (t == 0) return hstar_trianglefree(h);
  if (t == 1) return hstar_triangle(h);
  throw DomainError("H* needs a pattern with at most one triangle, found " +
                    std::to_string(t));
}

// ---------------------------------------------------------------------------
// Verification

/// Every extendable coloring of {u} ∪ others has all terminals equal, and
/// each of the three constant assignments occurs.
inline bool is_equality_rigid(const Graph& g, Vertex u,
                              std::span<const Vertex> others) {
  std::vector<Vertex> t{u};
  t.insert(t.end(), others.begin(), others.end());
  auto all = enumerate_extendable_colorings(g, t);
  if (all.size() != 3) return false;
  for (const auto& a : all)
    if (std::adjacent_find(a.begin(), a.end(), std::not_equal_to<>()) !=
        a.end())
      return false;
  return true;
}

/// The extendable colorings of (u, v) are exactly the six unequal pairs.
inline bool is_inequality_rigid(const Graph& g, Vertex u, Vertex v) {
  const std::array<Vertex, 2> t{u, v};
  auto all = enumerate_extendable_colorings(g, t);
  if (all.size() != 6) return false;
  return std::all_of(all.begin(), all.end(),
                     [](const auto& a) { return a[0] != a[1]; });
}

/// For terminals ordered (u, v, w, x1, x2, y1, y2, z1, z2): every extendable
/// coloring gives the core three distinct colors and the pairs the three
/// distinct unordered color pairs. Also requires at least one extension.
inline bool is_pair_rigid(const Graph& g, std::span<const Vertex> nine) {
  if (nine.size() != 9) throw DomainError("pair rigidity needs 9 terminals");
  auto all = enumerate_extendable_colorings(g, nine);
  if (all.empty()) return false;
  for (const auto& a : all) {
    if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) return false;
    std::set<std::pair<Color, Color>> pairs;
    for (int i = 0; i < 3; ++i) {
      Color p = a[3 + 2 * i], q = a[4 + 2 * i];
      if (p == q) return false;
      pairs.emplace(std::min(p, q), std::max(p, q));
    }
    if (pairs.size() != 3) return false;
  }
  return true;
}

struct GadgetCheck {
  std::uint64_t triangles = 0;
  bool colorable = false;
  bool rigid = false;  // kind-specific coloring guarantee
  bool ok = false;
};

/// Brute-force check of the invariants of each gadget kind.
inline GadgetCheck verify_gadget(const Gadget& g) {
  GadgetCheck r;
  r.triangles = count_triangles(g.graph);
  r.colorable = is_colorable(g.graph, 3);
  switch (g.kind) {
    case GadgetKind::kGrotzsch:
      r.rigid = is_edge_critical(g.graph, 3);
      r.ok = r.triangles == 0 && !r.colorable && r.rigid;
      return r;
    case GadgetKind::kEq:
    case GadgetKind::kEqSet: {
      std::vector<Vertex> others(g.interface.begin() + 1, g.interface.end());
      r.rigid = is_equality_rigid(g.graph, g.interface.front(), others);
      break;
    }
    case GadgetKind::kNeq:
      r.rigid = is_inequality_rigid(g.graph, g.interface[0], g.interface[1]);
      break;
    case GadgetKind::kX:
    case GadgetKind::kHstarTriangleFree:
      r.rigid = is_pair_rigid(g.graph, g.interface);
      break;
    case GadgetKind::kHstarTriangle: {
      auto tris = list_triangles(g.graph);
      r.rigid = tris.size() == 1 && tris.front() == Triangle{0, 1, 2};
      r.ok = r.rigid && r.colorable;
      return r;
    }
  }
  r.ok = r.triangles == 0 && r.colorable && r.rigid;
  return r;
}

struct SoundnessReport {
  bool sound = false;
  /// Extendable colorings of the H* interface that were checked.
  std::size_t interface_colorings = 0;
  /// For each of them, the index of a copy forced to the forbidden coloring
  /// (-1 if none; then `sound` is false).
  std::vector<int> matched_copy;
  bool empty_color_class = false;
};

/// Checks that every proper 3-coloring of H* contains a copy of H colored
/// exactly as H's fixed coloring: for every extendable coloring of the
/// interface, some embedded copy has each vertex forced (over all
/// extensions) to the color the pattern prescribes.
inline SoundnessReport verify_hstar_soundness(const Pattern& h,
                                              const Gadget& hstar) {
  detail::check_colored_pattern(h);
  const Coloring& ch = *h.fixed_coloring;
  SoundnessReport r;
  r.empty_color_class = hstar.empty_color_class;
  if (hstar.copies.empty()) return r;
  for (const auto& e : hstar.copies)
    if (!e.is_valid(h.graph, hstar.graph)) return r;

  const Vertex n = hstar.graph.num_vertices();
  auto assignments = enumerate_extendable_colorings(hstar.graph, hstar.interface);
  r.interface_colorings = assignments.size();
  if (assignments.empty()) return r;

  bool all_ok = true;
  for (const auto& a : assignments) {
    std::vector<Color> partial(n, kUncolored);
    for (std::size_t i = 0; i < a.size(); ++i) partial[hstar.interface[i]] = a[i];
    // A forced copy agrees with every extension, so one witness extension
    // screens the candidates before the per-vertex forcing test.
    auto witness = find_proper_coloring(hstar.graph, 3, partial);
    int matched = -1;
    for (std::size_t ci = 0; ci < hstar.copies.size() && matched < 0; ++ci) {
      const auto& map = hstar.copies[ci].map;
      bool candidate = true;
      for (Vertex p = 0; p < map.size() && candidate; ++p)
        candidate = (*witness)[map[p]] == ch[p];
      if (!candidate) continue;
      auto masks = feasible_colors(hstar.graph, partial, map);
      bool forced = !masks.empty();
      for (Vertex p = 0; p < map.size() && forced; ++p)
        forced = masks[p] == (1u << ch[p]);
      if (forced) matched = static_cast<int>(ci);
    }
    r.matched_copy.push_back(matched);
    if (matched < 0) all_ok = false;
  }
  r.sound = all_ok;
  return r;
}

}  // namespace hfree

#endif  // HFREE_GADGETS_HPP
