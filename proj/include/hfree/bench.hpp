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

#ifndef HFREE_BENCH_HPP
#define HFREE_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hfree/fixtures.hpp"
#include "hfree/oracles.hpp"
#include "hfree/reductions.hpp"

namespace hfree {

struct BenchConfig {
  std::vector<Vertex> ladder{256, 1024, 4096};
  double average_degree = 6.0;
  std::uint64_t seed = 1;
  /// Build every instance (timed, and checked against the triangle count of
  /// the host). Otherwise only the class structure is computed.
  bool materialize = true;
  /// Hosts on which Phase I finds a triangle are redrawn up to this often.
  std::uint32_t max_redraws = 16;
};

struct BenchRow {
  Vertex n = 0;
  std::uint64_t m = 0;
  std::uint64_t host_seed = 0;
  std::uint64_t classes = 0;
  std::uint64_t instance_count = 0;
  std::uint64_t instance_bound = 0;     // binom(3 ceil(sqrt n), 3)
  std::uint64_t max_instance_size = 0;
  std::uint64_t size_bound = 0;         // 6 ceil(sqrt n)
  bool triangle_partition_ok = true;    // left true unless materialized
  double gen_ms = 0.0;
};

/// One ladder step: a sparse random host with the configured average degree,
/// color coded. Instance count and sizes follow from the refined classes;
/// with `materialize` every instance is also built.
inline BenchRow bench_one(Vertex n, const BenchConfig& config) {
  if (n < 3) throw DomainError("bench needs n >= 3");
  const double p = std::min(1.0, config.average_degree / static_cast<double>(n - 1));
  for (std::uint32_t attempt = 0; attempt <= config.max_redraws; ++attempt) {
    BenchRow row;
    row.n = n;
    row.host_seed = config.seed + 1000003ULL * n + attempt;
    const Graph g = random_gnp(n, p, row.host_seed).graph;
    row.m = g.num_edges();
    const std::uint64_t s = ceil_sqrt(n);
    row.size_bound = 6 * s;
    row.instance_bound = binomial3(3 * s);

    const auto start = std::chrono::steady_clock::now();
    auto cc = color_code_classes(g);
    if (std::holds_alternative<Triangle>(cc)) continue;
    ColorCodedHost host(g, std::get<Coloring>(cc));
    row.classes = host.num_classes();
    row.instance_count = host.num_instances();
    if (config.materialize) {
      std::uint64_t triangles = 0;
      host.for_each_instance([&](Instance&& inst) {
        row.max_instance_size = std::max<std::uint64_t>(
            row.max_instance_size, inst.subgraph.num_vertices());
        triangles += count_triangles(inst.subgraph);
        return true;
      });
      row.triangle_partition_ok = triangles == count_triangles(g);
    } else {
      std::vector<std::uint64_t> sizes;
      for (Color k = 0; k < host.num_classes(); ++k) sizes.push_back(host.class_size(k));
      std::sort(sizes.rbegin(), sizes.rend());
      for (std::size_t i = 0; i < std::min<std::size_t>(3, sizes.size()); ++i)
        row.max_instance_size += sizes[i];
    }
    row.gen_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return row;
  }
  throw DomainError("bench: Phase I kept finding triangles at n = " + std::to_string(n) +
                    "; lower the degree");
}

inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (Vertex n : config.ladder) rows.push_back(bench_one(n, config));
  return rows;
}

/// Least-squares slope of log(instance_count) against log(n).
inline double fit_exponent(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) throw DomainError("exponent fit needs at least two rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    if (r.instance_count == 0) throw DomainError("exponent fit on a row with no instances");
    double x = std::log(static_cast<double>(r.n));
    double y = std::log(static_cast<double>(r.instance_count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw DomainError("exponent fit needs distinct n");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace hfree

#endif  // HFREE_BENCH_HPP
