// Copyright 2026 The Kempe Authors
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

#include "kempe/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace kempe::io {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

// Fields separated by single spaces; empty fields are a format error.
std::vector<std::string_view> fields(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(' ', pos);
    const auto f = line.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (f.empty()) {
      fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": malformed spacing");
    }
    out.push_back(f);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

int to_int(std::string_view s, std::size_t lineno) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorCode::kParse,
         "line " + std::to_string(lineno) + ": expected integer, got '" + std::string(s) + "'");
  }
  return value;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + what);
}

EdgeId lookup_edge(const Graph& g, int u, int v, std::size_t lineno) {
  if (u >= v) bad_line(lineno, "edge endpoints must satisfy u < v");
  const auto e = g.find_edge(u, v);
  if (!e) bad_line(lineno, "edge " + std::to_string(u) + " " + std::to_string(v) + " not in graph");
  return *e;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  int n = -1;
  int m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const std::size_t lineno = i + 1;
    if (line.starts_with("c ") || line == "c") {
      if (n >= 0) bad_line(lineno, "comment after header");
      continue;
    }
    const auto f = fields(line, lineno);
    if (f[0] == "p") {
      if (n >= 0) bad_line(lineno, "duplicate header");
      if (f.size() != 4 || f[1] != "edge") bad_line(lineno, "expected 'p edge <n> <m>'");
      n = to_int(f[2], lineno);
      m = to_int(f[3], lineno);
      if (n < 0 || m < 0) bad_line(lineno, "negative size");
    } else if (f[0] == "e") {
      if (n < 0) bad_line(lineno, "edge before header");
      if (f.size() != 3) bad_line(lineno, "expected 'e <u> <v>'");
      const int u = to_int(f[1], lineno);
      const int v = to_int(f[2], lineno);
      if (u < 1 || v > n || u >= v) bad_line(lineno, "edge must satisfy 1 <= u < v <= n");
      edges.emplace_back(u, v);
    } else {
      bad_line(lineno, "unknown record '" + std::string(f[0]) + "'");
    }
  }
  if (n < 0) fail(ErrorCode::kParse, "missing 'p edge' header");
  if (static_cast<int>(edges.size()) != m) {
    fail(ErrorCode::kParse, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

std::string format_graph(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
  const auto lines = split_lines(text);
  int t = -1;
  EdgeColoring f;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto fl = fields(lines[i], lineno);
    if (fl[0] == "t") {
      if (t >= 0) bad_line(lineno, "duplicate palette header");
      if (fl.size() != 2) bad_line(lineno, "expected 't <k>'");
      t = to_int(fl[1], lineno);
      if (t < 1 || t > 30) bad_line(lineno, "palette must be in 1..30");
      f = EdgeColoring(t, static_cast<std::size_t>(g.edge_count()));
    } else if (fl[0] == "e") {
      if (t < 0) bad_line(lineno, "edge before palette header");
      if (fl.size() != 4) bad_line(lineno, "expected 'e <u> <v> <c>'");
      const EdgeId e = lookup_edge(g, to_int(fl[1], lineno), to_int(fl[2], lineno), lineno);
      const int c = to_int(fl[3], lineno);
      if (c < 1 || c > t) {
        fail(ErrorCode::kColorOutOfRange,
             "line " + std::to_string(lineno) + ": color outside 1.." + std::to_string(t));
      }
      if (f[e] != 0) bad_line(lineno, "edge listed twice");
      f[e] = c;
    } else {
      bad_line(lineno, "unknown record '" + std::string(fl[0]) + "'");
    }
  }
  if (t < 0) fail(ErrorCode::kParse, "missing 't' header");
  validate_total(g, f);
  return f;
}

std::string format_coloring(const Graph& g, const EdgeColoring& f) {
  std::ostringstream out;
  out << "t " << f.palette() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "e " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << f[e] << '\n';
  }
  return out.str();
}

Transcript parse_transcript(const Graph& g, std::string_view text) {
  Transcript tr;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = lines[i];
    if (line.starts_with("#")) continue;
    std::string tag;
    if (const auto tab = line.find('\t'); tab != std::string_view::npos) {
      tag = std::string(line.substr(tab + 1));
      line = line.substr(0, tab);
    }
    const auto fl = fields(line, lineno);
    if (fl[0] != "K" || fl.size() != 5) bad_line(lineno, "expected 'K <a> <b> <u> <v>'");
    const int a = to_int(fl[1], lineno);
    const int b = to_int(fl[2], lineno);
    const EdgeId e = lookup_edge(g, to_int(fl[3], lineno), to_int(fl[4], lineno), lineno);
    tr.push({a, b, e}, std::move(tag));
  }
  return tr;
}

std::string format_transcript(const Graph& g, const Transcript& tr,
                              std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const auto& mv = tr[i];
    out << "K " << mv.a << ' ' << mv.b << ' ' << g.edge(mv.rep_edge).u << ' '
        << g.edge(mv.rep_edge).v;
    if (!tr.tag(i).empty()) out << '\t' << tr.tag(i);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path);
  out << content;
}

}  // namespace kempe::io
