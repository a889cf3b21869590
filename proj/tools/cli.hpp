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

/// \file cli.hpp
///
/// The `hfree` command-line driver. `run` takes the argument list and the
/// two output streams so tests can drive it in-process.
///
/// Exit codes: 0 success, 1 domain error or failed check, 2 usage, I/O or
/// parse error.

#ifndef HFREE_TOOLS_CLI_HPP
#define HFREE_TOOLS_CLI_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfree/bench.hpp"
#include "hfree/coloring.hpp"
#include "hfree/fixtures.hpp"
#include "hfree/gadgets.hpp"
#include "hfree/graph.hpp"
#include "hfree/io.hpp"
#include "hfree/oracles.hpp"
#include "hfree/patterns.hpp"
#include "hfree/reductions.hpp"

namespace hfree::cli {

inline constexpr const char* kSeedEnv = "HFREE_SEED";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs fn on `path`, or on `fallback` when the path is empty.
inline void with_output(const std::string& path, std::ostream& fallback,
                        const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  fn(f);
  if (!f) throw IoError("write to '" + path + "' failed");
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
  with_output(path, std::cout, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

inline void emit_graph(std::ostream& os, const std::string& format, const Graph& g,
                       const Coloring* coloring,
                       const std::map<std::string, Vertex>* terminals) {
  if (format == "dot")
    write_dot(os, g, coloring, terminals);
  else
    write_graph(os, g, coloring);
}

inline Pattern load_pattern(const std::string& path) {
  GraphFile f = read_graph_file(path);
  if (f.coloring && f.coloring->palette() != 3)
    throw DomainError(path + ": pattern colors must be 0, 1 or 2");
  try {
    return Pattern(std::move(f.graph), std::move(f.coloring));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

inline Pattern load_colored_pattern(const std::string& path) {
  Pattern p = load_pattern(path);
  if (!p.fixed_coloring) throw DomainError(path + ": pattern has no colors block");
  return p;
}

inline Vertex terminal(const std::map<std::string, Vertex>& t, const std::string& name,
                       const std::string& source, const Graph& g) {
  auto it = t.find(name);
  if (it == t.end()) throw DomainError(source + ": missing terminal '" + name + "'");
  if (it->second >= g.num_vertices())
    throw DomainError(source + ": terminal '" + name + "' is not a vertex");
  return it->second;
}

// Resolved configuration of a subcommand, one `key=value` per option.
inline std::string describe(const CLI::App& sub, std::uint64_t seed, bool uses_seed) {
  std::ostringstream os;
  os << "# hfree " << sub.get_name();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string& name = opt->get_single_name();
    if (name == "help" || name == "seed") continue;
    const bool flag = opt->get_expected_max() == 0;
    std::string value;
    if (flag) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
    } else {
      value = opt->get_default_str();
    }
    os << ' ' << name << '=' << value;
  }
  if (uses_seed) os << " seed=" << seed;
  return os.str();
}

struct PartitionCheck {
  bool phase_one_triangle = false;
  std::uint64_t classes = 0;
  std::uint64_t instance_count = 0;
  std::uint64_t max_instance_size = 0;
  std::uint64_t instance_triangles = 0;
  std::uint64_t host_triangles = 0;
  bool ok = false;
};

// Streams every color-coding instance and compares the triangle totals.
inline PartitionCheck check_partition(const Graph& g, double cap_factor,
                                      const std::function<void(const Instance&)>& each = {}) {
  PartitionCheck r;
  r.host_triangles = count_triangles(g);
  auto cc = color_code_classes(g, cap_factor);
  if (std::holds_alternative<Triangle>(cc)) {
    r.phase_one_triangle = true;
    return r;
  }
  ColorCodedHost host(g, std::get<Coloring>(cc));
  r.classes = host.num_classes();
  host.for_each_instance([&](Instance&& inst) {
    ++r.instance_count;
    r.max_instance_size =
        std::max<std::uint64_t>(r.max_instance_size, inst.subgraph.num_vertices());
    r.instance_triangles += count_triangles(inst.subgraph);
    if (each) each(inst);
    return true;
  });
  r.ok = r.instance_triangles == r.host_triangles;
  return r;
}

inline nlohmann::json stats_json(const std::string& command, std::uint64_t seed,
                                 const Graph& g, const PartitionCheck& p,
                                 double wall_ms) {
  nlohmann::json j;
  j["command"] = command;
  j["seed"] = seed;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["instance_count"] = p.instance_count;
  j["max_instance_size"] = p.max_instance_size;
  if (p.phase_one_triangle)
    j["triangle_partition_ok"] = nullptr;  // no instances to partition
  else
    j["triangle_partition_ok"] = p.ok;
  j["wall_ms"] = wall_ms;
  return j;
}

inline std::string join(const Triangle& t) {
  return std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]);
}

inline std::string instance_path(const std::string& dir, const char* stem, std::uint64_t i) {
  std::ostringstream os;
  os << stem << '_' << std::setw(6) << std::setfill('0') << i << ".el";
  return (std::filesystem::path(dir) / os.str()).string();
}

// ---------------------------------------------------------------------------
// verify checks. Each returns (passed, detail) and wraps one module oracle.

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct CheckInput {
  std::string graph_path;
  std::string terminals_path;
};

inline CheckResult check_eq_rigidity(const CheckInput& in) {
  Graph g = read_graph_file(in.graph_path).graph;
  auto t = read_terminals_file(in.terminals_path);
  Vertex u = terminal(t, "u", in.terminals_path, g);
  std::vector<Vertex> others;
  for (const auto& [name, v] : t)
    if (name != "u") others.push_back(terminal(t, name, in.terminals_path, g));
  if (others.empty()) throw DomainError(in.terminals_path + ": no terminal besides u");
  bool ok = is_equality_rigid(g, u, others);
  return {ok, ok ? "every extension colors the terminals alike"
                 : "terminal projection is not the constant assignments"};
}

inline CheckResult check_neq_rigidity(const CheckInput& in) {
  Graph g = read_graph_file(in.graph_path).graph;
  auto t = read_terminals_file(in.terminals_path);
  bool ok = is_inequality_rigid(g, terminal(t, "u", in.terminals_path, g),
                                terminal(t, "v", in.terminals_path, g));
  return {ok, ok ? "terminal projection is the 6 unequal pairs"
                 : "terminal projection is not the unequal pairs"};
}

inline CheckResult check_pair_rigidity(const CheckInput& in) {
  Graph g = read_graph_file(in.graph_path).graph;
  auto t = read_terminals_file(in.terminals_path);
  std::vector<Vertex> nine;
  for (auto name : {"u", "v", "w", "x1", "x2", "y1", "y2", "z1", "z2"})
    nine.push_back(terminal(t, name, in.terminals_path, g));
  bool ok = is_pair_rigid(g, nine);
  auto assignments = enumerate_extendable_colorings(g, nine);
  return {ok, std::to_string(assignments.size()) + " extendable terminal colorings"};
}

inline CheckResult check_critical(const CheckInput& in) {
  Graph g = read_graph_file(in.graph_path).graph;
  auto tri = count_triangles(g);
  bool colorable = is_colorable(g, 3);
  bool critical = is_edge_critical(g, 3);
  bool ok = tri == 0 && !colorable && critical;
  std::ostringstream os;
  os << "triangles=" << tri << " 3-colorable=" << colorable
     << " edge-critical=" << critical;
  return {ok, os.str()};
}

inline CheckResult check_triangle_free(const CheckInput& in) {
  Graph g = read_graph_file(in.graph_path).graph;
  auto t = find_triangle(g);
  return {!t, t ? "triangle " + join(*t) : "no triangle"};
}

inline CheckResult check_augment(const CheckInput& in) {
  Pattern h = load_pattern(in.graph_path);
  auto r = verify_augment_preserves(h);
  std::ostringstream os;
  os << "triangles " << r.base_triangles << "->" << r.augmented_triangles
     << " 3-colorable " << r.base_colorable << "->" << r.augmented_colorable;
  return {r.chromatic_ok && r.triangle_ok, os.str()};
}

inline CheckResult check_hstar_soundness(const CheckInput& in) {
  Pattern h = load_colored_pattern(in.graph_path);
  Gadget hs = build_hstar(h);
  auto r = verify_hstar_soundness(h, hs);
  auto th = count_triangles(h.graph), ts = count_triangles(hs.graph);
  bool colorable = is_colorable(hs.graph, 3);
  std::ostringstream os;
  os << "H* has " << hs.graph.num_vertices() << " vertices, "
     << r.interface_colorings << " interface colorings, triangles " << th << "/" << ts
     << ", 3-colorable=" << colorable;
  if (r.empty_color_class) os << ", empty color class";
  return {r.sound && th == ts && colorable, os.str()};
}

inline CheckResult check_degenerate(const CheckInput& in) {
  Pattern h = load_colored_pattern(in.graph_path);
  bool ok = check_degenerate_coloring(h.graph, *h.fixed_coloring);
  return {ok, ok ? "coloring peels" : "coloring does not peel"};
}

using CheckFn = CheckResult (*)(const CheckInput&);

inline const std::map<std::string, CheckFn>& checks() {
  static const std::map<std::string, CheckFn> table = {
      {"eq-rigidity", check_eq_rigidity},
      {"neq-rigidity", check_neq_rigidity},
      {"pair-rigidity", check_pair_rigidity},
      {"critical", check_critical},
      {"triangle-free", check_triangle_free},
      {"augment", check_augment},
      {"hstar-soundness", check_hstar_soundness},
      {"degenerate-coloring", check_degenerate},
  };
  return table;
}

inline bool needs_terminals(const std::string& check) {
  return check == "eq-rigidity" || check == "neq-rigidity" || check == "pair-rigidity";
}

}  // namespace detail

/// Runs the driver on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using namespace detail;
  CLI::App app{"Triangle detection in H-free graphs: constructions, checks, reductions",
               "hfree"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(36);

  std::uint64_t seed = 1;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (default from $HFREE_SEED, else 1)")
        ->envname(kSeedEnv);
  };
  const std::vector<std::string> graph_formats{"el", "dot"};

  // augment
  std::string pattern_path, out_path, format = "el", terminals_path;
  auto* augment_cmd = app.add_subcommand("augment", "Write H+ (two wedges per non-edge)");
  augment_cmd->add_option("--pattern", pattern_path, "Pattern edge list")
      ->required()->check(CLI::ExistingFile);
  augment_cmd->add_option("--out", out_path, "Output file (default stdout)");
  augment_cmd->add_option("--format", format)->check(CLI::IsMember(graph_formats))
      ->capture_default_str();

  // gadget
  std::string kind;
  Vertex eq_size = 2;
  auto* gadget_cmd = app.add_subcommand("gadget", "Write a gadget graph and its terminals");
  gadget_cmd->add_option("--kind", kind, "grotzsch | eq | eq_set | neq | X")
      ->required()->check(CLI::IsMember({"grotzsch", "eq", "eq_set", "neq", "X"}));
  gadget_cmd->add_option("--size", eq_size, "Number of equated vertices for eq_set")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gadget_cmd->add_option("--out", out_path, "Output file (default stdout)");
  gadget_cmd->add_option("--terminals", terminals_path,
                         "Terminal sidecar (default <out>.t when --out is set)");
  gadget_cmd->add_option("--format", format)->check(CLI::IsMember(graph_formats))
      ->capture_default_str();

  // colored-augment
  auto* hstar_cmd = app.add_subcommand(
      "colored-augment", "Write H* for a 3-colored pattern with at most one triangle");
  hstar_cmd->add_option("--pattern", pattern_path, "Colored pattern file")
      ->required()->check(CLI::ExistingFile);
  hstar_cmd->add_option("--out", out_path, "Output file (default stdout)");
  hstar_cmd->add_option("--terminals", terminals_path,
                        "Interface sidecar (default <out>.t when --out is set)");
  hstar_cmd->add_option("--format", format)->check(CLI::IsMember(graph_formats))
      ->capture_default_str();

  // verify
  std::string check, gadget_path, fixtures_dir = "fixtures";
  bool verify_all = false;
  std::vector<std::string> check_names;
  for (const auto& [name, fn] : checks()) check_names.push_back(name);
  auto* verify_cmd = app.add_subcommand("verify", "Run a brute-force check");
  verify_cmd->add_option("--check", check)->check(CLI::IsMember(check_names));
  verify_cmd->add_option("--gadget,--pattern,--graph", gadget_path, "Graph under test")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--terminals", terminals_path, "Terminal sidecar")
      ->check(CLI::ExistingFile);
  verify_cmd->add_flag("--all", verify_all, "Run every check listed in the corpus manifest");
  verify_cmd->add_option("--fixtures", fixtures_dir, "Corpus directory for --all")
      ->capture_default_str();

  // degenerate-color
  std::uint64_t budget = kDefaultDegenerateBudget;
  auto* degen_cmd = app.add_subcommand("degenerate-color",
                                       "Search a degenerate proper 3-coloring");
  degen_cmd->add_option("--pattern", pattern_path)->required()->check(CLI::ExistingFile);
  degen_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();
  degen_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // colorcode / sieve / detect
  std::string host_path, out_dir, stats_path;
  PipelineConfig pc;
  auto* cc_cmd = app.add_subcommand("colorcode", "Color-code a host into 3-colored instances");
  cc_cmd->add_option("--host", host_path)->required()->check(CLI::ExistingFile);
  cc_cmd->add_option("--cap-factor", pc.class_cap_factor)->capture_default_str();
  cc_cmd->add_option("--out-dir", out_dir, "Write each instance as a colored edge list");
  cc_cmd->add_option("--stats-json", stats_path);
  add_seed(cc_cmd);

  auto* sieve_cmd = app.add_subcommand("sieve", "Color-code then subsample each instance");
  sieve_cmd->add_option("--host", host_path)->required()->check(CLI::ExistingFile);
  sieve_cmd->add_option("--cap-factor", pc.class_cap_factor)->capture_default_str();
  sieve_cmd->add_option("--sieve-reps", pc.sieve_repetitions)->capture_default_str();
  sieve_cmd->add_option("--out-dir", out_dir, "Write each output as a colored edge list");
  sieve_cmd->add_option("--stats-json", stats_path);
  add_seed(sieve_cmd);

  auto* detect_cmd = app.add_subcommand("detect", "Triangle detection in an induced H-free host");
  detect_cmd->add_option("--pattern", pattern_path)->required()->check(CLI::ExistingFile);
  detect_cmd->add_option("--host", host_path)->required()->check(CLI::ExistingFile);
  detect_cmd->add_option("--sieve-reps", pc.sieve_repetitions)->capture_default_str();
  detect_cmd->add_option("--amplify", pc.amplification_runs)->capture_default_str();
  detect_cmd->add_option("--base-detector", pc.base_detector)
      ->check(CLI::IsMember({"brute"}))->capture_default_str();
  detect_cmd->add_option("--cap-factor", pc.class_cap_factor)->capture_default_str();
  detect_cmd->add_flag("--audit-promise", pc.audit_promise,
                       "Reject hosts containing an induced copy of the pattern");
  detect_cmd->add_option("--stats-json", stats_path);
  add_seed(detect_cmd);

  // gen
  FixtureSpec spec;
  std::string family, base_family = "odd_cycle_blowup";
  std::vector<std::string> family_names;
  for (Family f : {Family::kRandomGnp, Family::kOddCycleBlowup, Family::kCompleteTripartite,
                   Family::kPlantedTriangle, Family::kPath, Family::kCycle, Family::kClique})
    family_names.emplace_back(to_string(f));
  auto* gen_cmd = app.add_subcommand("gen", "Generate a fixture host");
  gen_cmd->add_option("--family", family)->required()->check(CLI::IsMember(family_names));
  gen_cmd->add_option("--n", spec.n, "Vertex count (gnp, path, cycle, clique)")
      ->capture_default_str();
  gen_cmd->add_option("--p", spec.p, "Edge probability (gnp) or keep rate (blowup)")
      ->capture_default_str();
  gen_cmd->add_option("--cycle-length", spec.cycle_length)->capture_default_str();
  gen_cmd->add_option("--block", spec.block, "Blowup block / tripartite part size")
      ->capture_default_str();
  gen_cmd->add_option("--base", base_family, "Base family of planted_triangle")
      ->check(CLI::IsMember(family_names))->capture_default_str();
  gen_cmd->add_option("--out", out_path);
  gen_cmd->add_option("--format", format)->check(CLI::IsMember(graph_formats))
      ->capture_default_str();
  add_seed(gen_cmd);

  // bench
  BenchConfig bc;
  bool no_materialize = false;
  std::string json_path;
  auto* bench_cmd = app.add_subcommand("bench", "Color-coding scaling ladder");
  bench_cmd->add_option("--ladder", bc.ladder)->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--degree", bc.average_degree, "Average degree of the hosts")
      ->capture_default_str();
  bench_cmd->add_flag("--no-materialize", no_materialize,
                      "Count instances without building them");
  bench_cmd->add_option("--json", json_path, "Write rows as JSON");
  add_seed(bench_cmd);

  // export
  auto* export_cmd = app.add_subcommand("export", "Convert a graph file (edge list or DOT)");
  export_cmd->add_option("--graph", gadget_path)->required()->check(CLI::ExistingFile);
  export_cmd->add_option("--terminals", terminals_path)->check(CLI::ExistingFile);
  export_cmd->add_option("--format", format)->check(CLI::IsMember(graph_formats))
      ->capture_default_str();
  export_cmd->add_option("--out", out_path);

  std::vector<std::string> argv_store{"hfree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; every other parse failure is a usage error
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  const bool uses_seed = sub->get_option_no_throw("--seed") != nullptr;
  pc.seed = seed;
  err << describe(*sub, seed, uses_seed) << '\n';

  try {
    if (cmd == "augment") {
      Pattern h = load_pattern(pattern_path);
      AugmentedPattern plus = augment(h);
      with_output(out_path, out, [&](std::ostream& os) {
        emit_graph(os, format, plus.graph, nullptr, nullptr);
      });
      err << "H+ has " << plus.graph.num_vertices() << " vertices and "
          << plus.graph.num_edges() << " edges\n";
      return 0;
    }

    if (cmd == "gadget" || cmd == "colored-augment") {
      Gadget g;
      if (cmd == "gadget") {
        if (kind == "grotzsch") g = grotzsch();
        else if (kind == "eq") g = eq_gadget();
        else if (kind == "eq_set") g = eq_set_gadget(eq_size);
        else if (kind == "neq") g = neq_gadget();
        else g = gadget_x();
      } else {
        g = build_hstar(load_colored_pattern(pattern_path));
      }
      with_output(out_path, out, [&](std::ostream& os) {
        emit_graph(os, format, g.graph, nullptr, &g.terminals);
      });
      std::string sidecar = terminals_path;
      if (sidecar.empty() && !out_path.empty()) sidecar = out_path + ".t";
      if (!sidecar.empty())
        with_output(sidecar, out, [&](std::ostream& os) { write_terminals(os, g.terminals); });
      err << to_string(g.kind) << ": " << g.graph.num_vertices() << " vertices, "
          << g.graph.num_edges() << " edges, " << count_triangles(g.graph)
          << " triangles\n";
      if (g.empty_color_class)
        err << "warning: the pattern has an empty color class; its attachments are vacuous\n";
      return 0;
    }

    if (cmd == "verify") {
      std::vector<std::pair<std::string, CheckInput>> jobs;
      if (verify_all) {
        const auto manifest = std::filesystem::path(fixtures_dir) / "manifest.txt";
        std::ifstream in(manifest);
        if (!in) throw IoError("cannot open '" + manifest.string() + "'");
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
          ++lineno;
          std::istringstream ls(line);
          std::string name, file, terms;
          if (!(ls >> name) || name.front() == '#') continue;
          if (!(ls >> file))
            throw ParseError(manifest.string() + ":" + std::to_string(lineno) +
                             ": expected `check file [terminals]`");
          ls >> terms;
          if (!checks().count(name))
            throw ParseError(manifest.string() + ":" + std::to_string(lineno) +
                             ": unknown check '" + name + "'");
          CheckInput ci{(std::filesystem::path(fixtures_dir) / file).string(),
                        terms.empty() ? ""
                                      : (std::filesystem::path(fixtures_dir) / terms).string()};
          jobs.emplace_back(name, ci);
        }
      } else {
        if (check.empty() || gadget_path.empty())
          throw DomainError("verify needs --check and --gadget/--pattern, or --all");
        jobs.emplace_back(check, CheckInput{gadget_path, terminals_path});
      }
      bool all_pass = true;
      for (const auto& [name, ci] : jobs) {
        if (needs_terminals(name) && ci.terminals_path.empty())
          throw DomainError("check " + name + " needs --terminals");
        CheckResult r = checks().at(name)(ci);
        out << (r.pass ? "PASS " : "FAIL ") << name << ' ' << ci.graph_path << " ("
            << r.detail << ")\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }

    if (cmd == "degenerate-color") {
      Pattern h = load_pattern(pattern_path);
      auto r = find_degenerate_coloring(h.graph, budget);
      err << "search nodes: " << r.nodes << '\n';
      if (r.status == SearchStatus::kFound) {
        with_output(out_path, out, [&](std::ostream& os) {
          write_graph(os, h.graph, &*r.coloring);
        });
        return 0;
      }
      err << (r.status == SearchStatus::kNone
                  ? "no degenerate proper 3-coloring exists\n"
                  : "search budget exhausted without an answer\n");
      return 1;
    }

    if (cmd == "colorcode") {
      const auto start = Clock::now();
      Graph g = read_graph_file(host_path).graph;
      pc.validate();
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      std::uint64_t index = 0;
      auto p = check_partition(g, pc.class_cap_factor, [&](const Instance& inst) {
        if (out_dir.empty()) return;
        with_output(instance_path(out_dir, "instance", index++), out, [&](std::ostream& os) {
          write_graph(os, inst.subgraph, &inst.coloring);
        });
      });
      if (p.phase_one_triangle) {
        auto cc = color_code_classes(g, pc.class_cap_factor);
        out << "phase1_triangle " << join(std::get<Triangle>(cc)) << '\n';
      } else {
        const auto s = ceil_sqrt(g.num_vertices());
        out << "classes " << p.classes << '\n'
            << "instances " << p.instance_count << " (bound " << binomial3(3 * s) << ")\n"
            << "max_instance_size " << p.max_instance_size << " (bound " << 6 * s << ")\n"
            << "triangles " << p.instance_triangles << " of " << p.host_triangles << '\n'
            << "triangle_partition_ok " << (p.ok ? "true" : "false") << '\n';
      }
      if (!stats_path.empty())
        write_json(stats_path, stats_json(cmd, seed, g, p, ms_since(start)));
      return p.phase_one_triangle || p.ok ? 0 : 1;
    }

    if (cmd == "sieve") {
      const auto start = Clock::now();
      Graph g = read_graph_file(host_path).graph;
      pc.validate();
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      Rng rng(seed);
      std::uint64_t outputs = 0, unique = 0, index = 0;
      auto phase_one = for_each_unique_candidate(g, pc, rng, [&](Instance&& o) {
        ++outputs;
        if (count_triangles(o.subgraph) == 1) ++unique;
        if (!out_dir.empty())
          with_output(instance_path(out_dir, "sieve", index++), out, [&](std::ostream& os) {
            write_graph(os, o.subgraph, &o.coloring);
          });
        return true;
      });
      PartitionCheck p;
      if (phase_one) {
        p.phase_one_triangle = true;
        out << "phase1_triangle " << join(*phase_one) << '\n';
      } else {
        p = check_partition(g, pc.class_cap_factor);
        out << "instances " << p.instance_count << '\n'
            << "sieve_outputs " << outputs << '\n'
            << "unique_triangle_outputs " << unique << '\n';
      }
      if (!stats_path.empty()) {
        auto j = stats_json(cmd, seed, g, p, ms_since(start));
        j["sieve_outputs"] = outputs;
        j["unique_triangle_outputs"] = unique;
        write_json(stats_path, j);
      }
      return 0;
    }

    if (cmd == "detect") {
      const auto start = Clock::now();
      Pattern h = load_pattern(pattern_path);
      Graph g = read_graph_file(host_path).graph;
      auto report = detect_induced_hfree(g, h, pc);
      if (report.verdict == Verdict::kTriangleFound)
        out << "triangle_found " << join(*report.witness) << '\n';
      else
        out << "triangle_free\n";
      const auto& s = report.stats;
      err << "instances_processed " << s.color_code_instances << " sieve_outputs "
          << s.sieve_outputs << " detector_calls " << s.detector_calls
          << " rejected_witnesses " << s.rejected_witnesses << '\n';
      if (!stats_path.empty()) {
        auto p = check_partition(g, pc.class_cap_factor);
        auto j = stats_json(cmd, seed, g, p, ms_since(start));
        j["verdict"] = report.verdict == Verdict::kTriangleFound ? "triangle_found"
                                                                 : "triangle_free";
        j["witness"] = report.witness ? nlohmann::json(*report.witness) : nlohmann::json();
        j["instances_processed"] = s.color_code_instances;
        j["sieve_outputs"] = s.sieve_outputs;
        j["detector_calls"] = s.detector_calls;
        j["rejected_witnesses"] = s.rejected_witnesses;
        j["phase_one_triangle"] = s.phase_one_triangle;
        j["hplus_vertices"] = s.hplus_vertices;
        write_json(stats_path, j);
      }
      return 0;
    }

    if (cmd == "gen") {
      spec.family = parse_family(family);
      spec.base = parse_family(base_family);
      spec.seed = seed;
      Fixture f = generate_fixture(spec);
      with_output(out_path, out, [&](std::ostream& os) {
        emit_graph(os, format, f.graph, f.coloring ? &*f.coloring : nullptr, nullptr);
      });
      err << family << ": " << f.graph.num_vertices() << " vertices, "
          << f.graph.num_edges() << " edges\n";
      return 0;
    }

    if (cmd == "bench") {
      bc.seed = seed;
      bc.materialize = !no_materialize;
      auto rows = run_bench(bc);
      bool within = true;
      out << "n m classes instances instance_bound max_size size_bound partition_ok gen_ms\n";
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        out << r.n << ' ' << r.m << ' ' << r.classes << ' ' << r.instance_count << ' '
            << r.instance_bound << ' ' << r.max_instance_size << ' ' << r.size_bound << ' '
            << (!bc.materialize ? "-" : r.triangle_partition_ok ? "true" : "false")
            << ' ' << std::llround(r.gen_ms) << '\n';
        within = within && r.instance_count <= r.instance_bound &&
                 r.max_instance_size <= r.size_bound && r.triangle_partition_ok;
        j.push_back({{"n", r.n}, {"m", r.m}, {"host_seed", r.host_seed},
                     {"classes", r.classes}, {"instance_count", r.instance_count},
                     {"instance_bound", r.instance_bound},
                     {"max_instance_size", r.max_instance_size},
                     {"size_bound", r.size_bound},
                     {"triangle_partition_ok", bc.materialize
                                                   ? nlohmann::json(r.triangle_partition_ok)
                                                   : nlohmann::json(nullptr)},
                     {"gen_ms", r.gen_ms}});
      }
      if (rows.size() >= 2) out << "exponent " << fit_exponent(rows) << '\n';
      if (!json_path.empty()) write_json(json_path, j);
      return within ? 0 : 1;
    }

    if (cmd == "export") {
      GraphFile f = read_graph_file(gadget_path);
      std::map<std::string, Vertex> terms;
      if (!terminals_path.empty()) {
        terms = read_terminals_file(terminals_path);
        for (const auto& [name, v] : terms)
          terminal(terms, name, terminals_path, f.graph);
      }
      with_output(out_path, out, [&](std::ostream& os) {
        emit_graph(os, format, f.graph, f.coloring ? &*f.coloring : nullptr,
                   terminals_path.empty() ? nullptr : &terms);
      });
      return 0;
    }
  } catch (const PromiseViolation& e) {
    err << "hfree: promise violated: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "hfree: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "hfree: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "hfree: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hfree: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "hfree: " << e.what() << '\n';
    return 1;
  }
  err << "hfree: unhandled subcommand " << cmd << '\n';
  return 2;
}

}  // namespace hfree::cli

#endif  // HFREE_TOOLS_CLI_HPP
