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

/// \file io.hpp
///
/// Text formats.
///
///   edge list      first line `n m`, then m lines `u v` (0-based). Written
///                  with u < v in lexicographic order.
///   colored graph  an edge list followed by a line `colors` and n lines
///                  `v c`. The palette is max(3, largest color + 1).
///   terminals      one `name vertex_id` pair per line.
///
/// Blank lines and lines starting with `#` are ignored on input.

#ifndef HFREE_IO_HPP
#define HFREE_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

struct GraphFile {
  Graph graph;
  std::optional<Coloring> coloring;
};

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++lineno_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
        std::size_t j = i;
        while (j < line_.size() && !std::isspace(static_cast<unsigned char>(line_[j]))) ++j;
        if (j > i) tokens.emplace_back(line_.data() + i, j - i);
        i = j;
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ":" + std::to_string(lineno_) + ": " + what);
  }

  std::uint64_t number(std::string_view tok) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail("expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string line_;
  std::size_t lineno_ = 0;
};

}  // namespace detail

/// Reads an edge list, with an optional trailing `colors` block.
inline GraphFile read_graph(std::istream& in, std::string source = "<input>") {
  detail::LineReader reader(in, std::move(source));
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) reader.fail("missing header line `n m`");
  if (tok.size() != 2) reader.fail("header must be `n m`");
  std::uint64_t n = reader.number(tok[0]);
  std::uint64_t m = reader.number(tok[1]);
  if (n > kMaxVertices) reader.fail("vertex count exceeds 2^31-1");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(tok))
      reader.fail("expected " + std::to_string(m) + " edges, found " +
                  std::to_string(i));
    if (tok.size() != 2) reader.fail("edge line must be `u v`");
    std::uint64_t u = reader.number(tok[0]);
    std::uint64_t v = reader.number(tok[1]);
    if (u >= n || v >= n) reader.fail("edge endpoint out of range");
    if (u == v) reader.fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  GraphFile out;
  out.graph = Graph::from_edges(static_cast<Vertex>(n), edges);
  if (out.graph.num_edges() != m) reader.fail("duplicate edges in edge list");

  if (!reader.next(tok)) return out;
  if (tok.size() != 1 || tok[0] != "colors")
    reader.fail("unexpected content after edge list");
  std::vector<Color> assign(n, kMaxVertices);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!reader.next(tok))
      reader.fail("expected " + std::to_string(n) + " color lines");
    if (tok.size() != 2) reader.fail("color line must be `v c`");
    std::uint64_t v = reader.number(tok[0]);
    std::uint64_t c = reader.number(tok[1]);
    if (v >= n) reader.fail("colored vertex out of range");
    if (c >= 31) reader.fail("color id too large");
    if (assign[v] != kMaxVertices) reader.fail("vertex colored twice");
    assign[v] = static_cast<Color>(c);
  }
  if (reader.next(tok)) reader.fail("unexpected content after colors block");
  Color palette = 3;
  for (Color c : assign) palette = std::max(palette, c + 1);
  out.coloring = Coloring(palette, std::move(assign));
  return out;
}

inline GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graph(in, path);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const Coloring* coloring = nullptr) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (coloring) {
    out << "colors\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      out << v << ' ' << (*coloring)[v] << '\n';
  }
}

inline std::string to_edge_list(const Graph& g,
                                const Coloring* coloring = nullptr) {
  std::ostringstream os;
  write_graph(os, g, coloring);
  return os.str();
}

inline GraphFile parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in, "<string>");
}

inline std::map<std::string, Vertex> read_terminals(
    std::istream& in, std::string source = "<terminals>") {
  detail::LineReader reader(in, std::move(source));
  std::vector<std::string_view> tok;
  std::map<std::string, Vertex> out;
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("terminal line must be `name vertex_id`");
    std::uint64_t v = reader.number(tok[1]);
    if (v > kMaxVertices) reader.fail("vertex id too large");
    if (!out.emplace(std::string(tok[0]), static_cast<Vertex>(v)).second)
      reader.fail("duplicate terminal '" + std::string(tok[0]) + "'");
  }
  return out;
}

inline std::map<std::string, Vertex> read_terminals_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_terminals(in, path);
}

/// Writes terminals sorted by vertex id, then name.
inline void write_terminals(std::ostream& out,
                            const std::map<std::string, Vertex>& terminals) {
  std::vector<std::pair<Vertex, std::string>> rows;
  for (const auto& [name, v] : terminals) rows.emplace_back(v, name);
  std::sort(rows.begin(), rows.end());
  for (const auto& [v, name] : rows) out << name << ' ' << v << '\n';
}

inline std::string dot_color_name(Color c) {
  static constexpr std::string_view kNames[] = {"red", "blue", "green"};
  if (c < 3) return std::string(kNames[c]);
  // spread further colors around the hue circle
  std::ostringstream os;
  os << '"' << (static_cast<double>((c * 37) % 100) / 100.0) << " 0.7 0.9\"";
  return os.str();
}

inline void write_dot(std::ostream& out, const Graph& g,
                      const Coloring* coloring = nullptr,
                      const std::map<std::string, Vertex>* terminals = nullptr) {
  std::map<Vertex, std::string> labels;
  if (terminals)
    for (const auto& [name, v] : *terminals) {
      auto& l = labels[v];
      l += l.empty() ? name : "," + name;
    }
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    bool open = false;
    auto attr = [&](const std::string& kv) {
      out << (open ? ", " : " [") << kv;
      open = true;
    };
    if (coloring) {
      attr("color=" + dot_color_name((*coloring)[v]));
      attr("style=filled");
      attr("fillcolor=" + dot_color_name((*coloring)[v]));
    }
    if (auto it = labels.find(v); it != labels.end())
      attr("xlabel=\"" + it->second + "\"");
    if (open) out << ']';
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace hfree

#endif  // HFREE_IO_HPP
