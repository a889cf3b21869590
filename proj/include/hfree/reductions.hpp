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

/// \file reductions.hpp
///
/// Self-reduction from triangle detection in induced H-free graphs to
/// unique triangle detection on small induced subgraphs.
///
///   triangle_or_sqrt_coloring  either a triangle, or a proper coloring
///                              with at most 2*ceil(sqrt n) colors
///   refine_classes             split classes above 2*ceil(sqrt n)
///   color_code                 one induced instance per triple of classes;
///                              each triangle lands in exactly one
///   sieve                      geometric vertex subsampling per class
///   detect_induced_hfree       run a base detector on every output
///
/// Every output is an induced subgraph of the host (vertices are dropped,
/// edges never are), so induced H-freeness carries over to each of them.

#ifndef HFREE_REDUCTIONS_HPP
#define HFREE_REDUCTIONS_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/oracles.hpp"
#include "hfree/patterns.hpp"

namespace hfree {

using Rng = std::mt19937_64;

/// Smallest s with s*s >= n.
inline std::uint64_t ceil_sqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= n) --s;
  return s;
}

inline std::uint64_t binomial3(std::uint64_t k) {
  return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6;
}

/// A 3-colored induced subgraph of the host.
struct Instance {
  Graph subgraph;
  Coloring coloring;
  std::vector<Vertex> back_map;  // instance vertex -> host vertex
};

struct PipelineConfig {
  std::uint64_t seed = 1;
  /// Multiplier on the 2*ceil(sqrt n) class-size cap used by refinement.
  double class_cap_factor = 1.0;
  std::uint32_t sieve_repetitions = 8;
  std::uint32_t amplification_runs = 15;
  std::string base_detector = "brute";
  /// Check the induced-H-freeness promise by brute force before running.
  bool audit_promise = false;

  void validate() const {
    if (!(class_cap_factor >= 1.0))
      throw DomainError("class_cap_factor must be >= 1");
    if (sieve_repetitions < 1) throw DomainError("sieve_repetitions must be >= 1");
    if (amplification_runs < 1)
      throw DomainError("amplification_runs must be >= 1");
  }
};

/// A triangle detector for the leaves of the reduction. It only has to be
/// right on H+-free inputs and may answer arbitrarily otherwise; the
/// pipeline re-checks every witness against the host.
struct BaseDetector {
  std::string name;
  std::function<std::optional<Triangle>(const Graph&, Rng&)> detect;
  /// Deterministic detectors are run once per instance: a majority over
  /// repeated identical answers is that answer.
  bool deterministic = true;
};

inline BaseDetector brute_force_detector() {
  return {"brute", [](const Graph& g, Rng&) { return find_triangle(g); }, true};
}

inline BaseDetector make_base_detector(std::string_view name) {
  if (name == "brute") return brute_force_detector();
  throw DomainError("unknown base detector '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Coloring with O(sqrt n) classes

/// Phase I: while some vertex v has at least s = ceil(sqrt n) live
/// neighbors, look at its first s live neighbors U. An edge inside U closes
/// a triangle with v. Otherwise U gets a fresh color and is deleted. The
/// independence test scans the adjacency of U only, so Phase I costs O(m)
/// overall. Phase II: the rest has max degree < s and is greedily colored
/// from a fresh palette of s colors.
///
/// Colors of the result are renumbered densely, Phase I classes first.
inline std::variant<Triangle, Coloring> triangle_or_sqrt_coloring(
    const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n == 0) return Coloring(1, {});
  const std::uint64_t s = std::max<std::uint64_t>(1, ceil_sqrt(n));

  std::vector<std::uint64_t> live_degree(n);
  for (Vertex v = 0; v < n; ++v) live_degree[v] = g.degree(v);
  std::vector<char> alive(n, 1), in_block(n, 0);
  std::vector<Color> color(n, kUncolored);
  Color next = 0;

  for (Vertex scan = 0; scan < n;) {
    if (!alive[scan] || live_degree[scan] < s) {
      ++scan;
      continue;
    }
    const Vertex v = scan;
    std::vector<Vertex> block;
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      block.push_back(u);
      if (block.size() == s) break;
    }
    for (Vertex u : block) in_block[u] = 1;
    for (Vertex u : block)
      for (Vertex w : g.neighbors(u))
        if (in_block[w]) return sorted_triangle(v, u, w);
    for (Vertex u : block) {
      in_block[u] = 0;
      alive[u] = 0;
      color[u] = next;
      for (Vertex w : g.neighbors(u))
        if (alive[w]) --live_degree[w];
    }
    ++next;
    // deleting U only lowers degrees, so vertices before `scan` stay below s
  }

  const Color base = next;
  std::vector<char> taken(s, 0);
  Color top = base;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && color[w] != kUncolored) taken[color[w] - base] = 1;
    Color c = 0;
    while (taken[c]) ++c;
    color[v] = base + c;
    top = std::max(top, color[v] + 1);
    for (Vertex w : g.neighbors(v))
      if (alive[w] && color[w] != kUncolored) taken[color[w] - base] = 0;
  }

  // renumber densely, keeping the order of color ids
  std::vector<Color> remap(top, kUncolored);
  Color used = 0;
  std::vector<char> present(top, 0);
  for (Color c : color) present[c] = 1;
  for (Color c = 0; c < top; ++c) remap[c] = present[c] ? used++ : kUncolored;
  for (Color& c : color) c = remap[c];
  return Coloring(std::max<Color>(used, 1), std::move(color));
}

/// Splits every class larger than cap = floor(cap_factor * 2 ceil(sqrt n))
/// by peeling blocks of ceil(sqrt n) lowest-id members into new classes
/// (appended after the existing ones) until it fits.
inline Coloring refine_classes(const Coloring& c, std::uint64_t n,
                               double cap_factor = 1.0) {
  const std::uint64_t s = std::max<std::uint64_t>(1, ceil_sqrt(n));
  const auto cap = static_cast<std::uint64_t>(
      std::floor(cap_factor * static_cast<double>(2 * s)));
  std::vector<Color> assign(c.colors().begin(), c.colors().end());
  Color palette = c.palette();
  for (const auto& members : c.classes()) {
    std::size_t start = 0;
    while (members.size() - start > cap) {
      for (std::size_t i = 0; i < s; ++i) assign[members[start + i]] = palette;
      ++palette;
      start += s;
    }
  }
  return Coloring(palette, std::move(assign));
}

/// Host graph partitioned into independent classes, with each adjacency
/// list sorted by (class, id) so the edges between any two classes are a
/// contiguous range per vertex.
class ColorCodedHost {
 public:
  ColorCodedHost(const Graph& g, const Coloring& classes) {
    const Vertex n = g.num_vertices();
    std::vector<Color> id_of(classes.palette(), kUncolored);
    for (const auto& members : classes.classes()) {
      if (members.empty()) continue;
      id_of[classes[members.front()]] = static_cast<Color>(members_.size());
      members_.push_back(members);
    }
    class_.resize(n);
    pos_.resize(n);
    for (Color k = 0; k < members_.size(); ++k)
      for (Vertex i = 0; i < members_[k].size(); ++i) {
        class_[members_[k][i]] = k;
        pos_[members_[k][i]] = i;
      }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + g.degree(v);
    sorted_adj_.resize(offsets_[n]);
    for (Vertex v = 0; v < n; ++v) {
      auto nb = g.neighbors(v);
      auto out = sorted_adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      std::copy(nb.begin(), nb.end(), out);
      std::stable_sort(out, out + static_cast<std::ptrdiff_t>(nb.size()),
                       [&](Vertex a, Vertex b) { return class_[a] < class_[b]; });
    }
  }

  std::size_t num_classes() const { return members_.size(); }
  std::uint64_t num_instances() const { return binomial3(members_.size()); }
  std::size_t class_size(Color k) const { return members_[k].size(); }

  /// The induced subgraph on classes a < b < c; local ids list class a,
  /// then b, then c, each in increasing host id.
  Instance instance(Color a, Color b, Color c) const {
    const std::array<Color, 3> ks{a, b, c};
    std::array<Vertex, 3> offset{0, 0, 0};
    offset[1] = static_cast<Vertex>(members_[a].size());
    offset[2] = offset[1] + static_cast<Vertex>(members_[b].size());
    const Vertex size = offset[2] + static_cast<Vertex>(members_[c].size());

    Instance inst;
    inst.back_map.reserve(size);
    std::vector<Color> colors;
    colors.reserve(size);
    for (int slot = 0; slot < 3; ++slot)
      for (Vertex v : members_[ks[slot]]) {
        inst.back_map.push_back(v);
        colors.push_back(static_cast<Color>(slot));
      }

    std::vector<Edge> edges;
    for (int slot = 0; slot < 2; ++slot) {
      for (Vertex v : members_[ks[slot]]) {
        const Vertex lv = offset[slot] + pos_[v];
        for (int other = slot + 1; other < 3; ++other) {
          auto [lo, hi] = range(v, ks[other]);
          for (auto it = lo; it != hi; ++it)
            edges.emplace_back(lv, offset[other] + pos_[*it]);
        }
      }
    }
    inst.subgraph = Graph::from_edges(size, edges);
    inst.coloring = Coloring(3, std::move(colors));
    return inst;
  }

  /// Calls fn(instance) for every class triple in lexicographic order;
  /// stops early when fn returns false.
  template <class Fn>
  void for_each_instance(Fn&& fn) const {
    const auto k = static_cast<Color>(members_.size());
    for (Color a = 0; a < k; ++a)
      for (Color b = a + 1; b < k; ++b)
        for (Color c = b + 1; c < k; ++c)
          if (!fn(instance(a, b, c))) return;
  }

 private:
  using Iter = std::vector<Vertex>::const_iterator;

  std::pair<Iter, Iter> range(Vertex v, Color k) const {
    auto first = sorted_adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = sorted_adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    auto lo = std::partition_point(first, last,
                                   [&](Vertex w) { return class_[w] < k; });
    auto hi = std::partition_point(lo, last,
                                   [&](Vertex w) { return class_[w] <= k; });
    return {lo, hi};
  }

  std::vector<std::vector<Vertex>> members_;
  std::vector<Color> class_;
  std::vector<Vertex> pos_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> sorted_adj_;
};

/// Phase I triangle, or the refined class coloring ready for instance
/// generation.
inline std::variant<Triangle, Coloring> color_code_classes(
    const Graph& g, double cap_factor = 1.0) {
  auto first = triangle_or_sqrt_coloring(g);
  if (auto* t = std::get_if<Triangle>(&first)) return *t;
  return refine_classes(std::get<Coloring>(first), g.num_vertices(), cap_factor);
}

struct ColorCodeResult {
  std::optional<Triangle> triangle;  // found by Phase I
  Coloring classes;
  std::vector<Instance> instances;
};

/// Materialized color coding. Large hosts should stream through
/// ColorCodedHost::for_each_instance instead.
inline ColorCodeResult color_code(const Graph& g, double cap_factor = 1.0) {
  ColorCodeResult r;
  auto cc = color_code_classes(g, cap_factor);
  if (auto* t = std::get_if<Triangle>(&cc)) {
    r.triangle = *t;
    return r;
  }
  r.classes = std::get<Coloring>(cc);
  ColorCodedHost host(g, r.classes);
  host.for_each_instance([&](Instance&& inst) {
    r.instances.push_back(std::move(inst));
    return true;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Sieving

/// Subsampling rates tried for a class of `size` vertices: 1, 2, 4, ...
/// below size, then size itself.
inline std::vector<std::uint64_t> sieve_guesses(std::uint64_t size) {
  std::vector<std::uint64_t> out{1};
  for (std::uint64_t t = 2; t < size; t *= 2) out.push_back(t);
  if (size > 1) out.push_back(size);
  return out;
}

/// For every guess triple (t0, t1, t2) and repetition, keeps each vertex of
/// class k independently with probability 1/t_k and emits the induced
/// subgraph. Stops early when fn returns false.
template <class Fn>
void for_each_sieve_output(const Instance& inst, std::uint32_t repetitions,
                           Rng& rng, Fn&& fn) {
  const Vertex n = inst.subgraph.num_vertices();
  std::array<std::uint64_t, 3> sizes{0, 0, 0};
  for (Vertex v = 0; v < n; ++v) ++sizes[inst.coloring[v]];
  const auto g0 = sieve_guesses(sizes[0]);
  const auto g1 = sieve_guesses(sizes[1]);
  const auto g2 = sieve_guesses(sizes[2]);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Vertex> kept;
  for (auto t0 : g0)
    for (auto t1 : g1)
      for (auto t2 : g2) {
        const std::array<std::uint64_t, 3> t{t0, t1, t2};
        for (std::uint32_t r = 0; r < repetitions; ++r) {
          kept.clear();
          for (Vertex v = 0; v < n; ++v) {
            auto rate = t[inst.coloring[v]];
            if (rate == 1 || unit(rng) * static_cast<double>(rate) < 1.0)
              kept.push_back(v);
          }
          auto sub = induced_subgraph(inst.subgraph, kept);
          Instance out;
          out.subgraph = std::move(sub.graph);
          std::vector<Color> colors;
          colors.reserve(kept.size());
          out.back_map.reserve(kept.size());
          for (Vertex v : kept) {
            colors.push_back(inst.coloring[v]);
            out.back_map.push_back(inst.back_map[v]);
          }
          out.coloring = Coloring(3, std::move(colors));
          if (!fn(std::move(out))) return;
        }
      }
}

inline std::vector<Instance> sieve(const Instance& inst,
                                   const PipelineConfig& config, Rng& rng) {
  config.validate();
  std::vector<Instance> out;
  for_each_sieve_output(inst, config.sieve_repetitions, rng,
                        [&](Instance&& o) {
                          out.push_back(std::move(o));
                          return true;
                        });
  return out;
}

struct ReductionOutput {
  std::optional<Triangle> triangle;  // found by Phase I
  std::vector<Instance> instances;
};

/// Streams color_code followed by sieve. fn(instance) returns false to stop.
/// Returns the Phase I triangle if there was one (then fn is never called).
template <class Fn>
std::optional<Triangle> for_each_unique_candidate(const Graph& g,
                                                  const PipelineConfig& config,
                                                  Rng& rng, Fn&& fn) {
  config.validate();
  auto cc = color_code_classes(g, config.class_cap_factor);
  if (auto* t = std::get_if<Triangle>(&cc)) return *t;
  ColorCodedHost host(g, std::get<Coloring>(cc));
  bool go = true;
  host.for_each_instance([&](Instance&& inst) {
    for_each_sieve_output(inst, config.sieve_repetitions, rng,
                          [&](Instance&& o) { return go = fn(std::move(o)); });
    return go;
  });
  return std::nullopt;
}

inline ReductionOutput reduce_to_unique(const Graph& g,
                                        const PipelineConfig& config) {
  Rng rng(config.seed);
  ReductionOutput r;
  r.triangle = for_each_unique_candidate(g, config, rng, [&](Instance&& o) {
    r.instances.push_back(std::move(o));
    return true;
  });
  return r;
}

// ---------------------------------------------------------------------------
// End-to-end detection

class PromiseViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Verdict { kTriangleFound, kTriangleFree };

struct DetectionStats {
  std::uint64_t color_code_instances = 0;
  std::uint64_t sieve_outputs = 0;
  std::uint64_t max_instance_size = 0;
  std::uint64_t detector_calls = 0;
  std::uint64_t rejected_witnesses = 0;
  bool phase_one_triangle = false;
  Vertex hplus_vertices = 0;
  double wall_ms = 0.0;
};

struct DetectionReport {
  Verdict verdict = Verdict::kTriangleFree;
  std::optional<Triangle> witness;  // host ids, verified
  DetectionStats stats;
  std::uint64_t seed = 0;
};

/// Triangle detection in an induced H-free host through the unique-triangle
/// reduction. Each output instance goes to the base detector (majority over
/// config.amplification_runs runs for randomized detectors); a claimed
/// triangle is mapped back and re-checked in `g` before it is accepted, so a
/// triangle_found verdict is never wrong. Stops at the first accepted
/// witness, so stats then cover only the instances processed so far.
inline DetectionReport detect_induced_hfree(const Graph& g, const Pattern& h,
                                            const PipelineConfig& config,
                                            const BaseDetector& detector) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  DetectionReport report;
  report.seed = config.seed;
  report.stats.hplus_vertices = augment(h).graph.num_vertices();

  if (config.audit_promise) {
    if (auto e = find_copy(h.graph, g, CopyMode::kInduced)) {
      std::string where;
      for (Vertex v : e->map) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw PromiseViolation("host contains an induced copy of the pattern at {" +
                             where + "}");
    }
  }

  Rng rng(config.seed);
  auto cc = color_code_classes(g, config.class_cap_factor);
  if (auto* t = std::get_if<Triangle>(&cc)) {
    if (is_triangle(g, *t)) {
      report.verdict = Verdict::kTriangleFound;
      report.witness = *t;
      report.stats.phase_one_triangle = true;
    }
  } else {
    ColorCodedHost host(g, std::get<Coloring>(cc));
    const std::uint32_t runs = detector.deterministic ? 1 : config.amplification_runs;
    host.for_each_instance([&](Instance&& inst) {
      ++report.stats.color_code_instances;
      report.stats.max_instance_size = std::max<std::uint64_t>(
          report.stats.max_instance_size, inst.subgraph.num_vertices());
      bool found = false;
      for_each_sieve_output(inst, config.sieve_repetitions, rng, [&](Instance&& out) {
        ++report.stats.sieve_outputs;
        std::uint32_t yes = 0;
        std::optional<Triangle> claim;
        for (std::uint32_t r = 0; r < runs; ++r) {
          ++report.stats.detector_calls;
          auto t = detector.detect(out.subgraph, rng);
          if (!t) continue;
          ++yes;
          if (!claim) claim = *t;
        }
        if (2 * yes <= runs || !claim) return true;
        const auto& c = *claim;
        if (std::max({c[0], c[1], c[2]}) >= out.back_map.size()) {
          ++report.stats.rejected_witnesses;
          return true;
        }
        Triangle mapped = sorted_triangle(out.back_map[c[0]], out.back_map[c[1]],
                                          out.back_map[c[2]]);
        if (!is_triangle(g, mapped)) {
          ++report.stats.rejected_witnesses;
          return true;
        }
        report.verdict = Verdict::kTriangleFound;
        report.witness = mapped;
        found = true;
        return false;
      });
      return !found;
    });
  }
  report.stats.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

inline DetectionReport detect_induced_hfree(const Graph& g, const Pattern& h,
                                            const PipelineConfig& config) {
  return detect_induced_hfree(g, h, config, make_base_detector(config.base_detector));
}

// ---------------------------------------------------------------------------
// Plain color coding for the colored setting

struct ColoredSubgraph {
  Graph graph;
  Coloring coloring;
};

/// Random 3-partition of the vertices with all edges inside a part removed.
/// A fixed triangle survives with probability 6/27 = 2/9.
inline ColoredSubgraph random_tripartite_subgraph(const Graph& g, Rng& rng) {
  std::uniform_int_distribution<Color> part(0, 2);
  std::vector<Color> colors(g.num_vertices());
  for (auto& c : colors) c = part(rng);
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if (colors[u] != colors[v]) kept.emplace_back(u, v);
  return {Graph::from_edges(g.num_vertices(), kept), Coloring(3, std::move(colors))};
}

/// Number of independent partitions so a fixed triangle survives in one of
/// them with probability at least 1 - 1/n: ceil(ln n / ln(9/7)).
inline std::uint32_t colored_setting_repetitions(std::uint64_t n) {
  if (n < 2) return 1;
  return static_cast<std::uint32_t>(
      std::ceil(std::log(static_cast<double>(n)) / std::log(9.0 / 7.0)));
}

inline std::vector<ColoredSubgraph> color_code_for_colored_setting(
    const Graph& g, const PipelineConfig& config) {
  Rng rng(config.seed);
  std::vector<ColoredSubgraph> out;
  const auto reps = colored_setting_repetitions(g.num_vertices());
  for (std::uint32_t i = 0; i < reps; ++i)
    out.push_back(random_tripartite_subgraph(g, rng));
  return out;
}

}  // namespace hfree

#endif  // HFREE_REDUCTIONS_HPP
