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

#include "kempe/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace kempe {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInvalidGraph: return "invalid_graph";
    case ErrorCode::kMissingEdgeColor: return "missing_edge_color";
    case ErrorCode::kColorOutOfRange: return "color_out_of_range";
    case ErrorCode::kNotProper: return "not_proper";
    case ErrorCode::kEqualColors: return "equal_colors";
    case ErrorCode::kRepEdgeNotBicolored: return "rep_edge_not_bicolored";
    case ErrorCode::kEdgeNotIncident: return "edge_not_incident";
    case ErrorCode::kNotSaturated: return "not_saturated";
    case ErrorCode::kInvalidMove: return "invalid_move";
    case ErrorCode::kPaletteTooSmall: return "palette_too_small";
    case ErrorCode::kPaletteMismatch: return "palette_mismatch";
    case ErrorCode::kMaxDegreeSubgraphCyclic: return "max_degree_subgraph_cyclic";
    case ErrorCode::kPreconditionViolated: return "precondition_violated";
    case ErrorCode::kBadWindow: return "bad_window";
    case ErrorCode::kDistanceConditionViolated: return "distance_condition_violated";
    case ErrorCode::kNotRegular4: return "not_regular4";
    case ErrorCode::kTargetNotProper4: return "target_not_proper4";
    case ErrorCode::kClaimViolated: return "claim_violated";
    case ErrorCode::kWrongMaxDegree: return "wrong_max_degree";
    case ErrorCode::kNoFreeLowColor: return "no_free_low_color";
    case ErrorCode::kProjectionMismatch: return "projection_mismatch";
    case ErrorCode::kSearchBudgetExceeded: return "search_budget_exceeded";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kUnsupportedFamily: return "unsupported_family";
    case ErrorCode::kInfeasibleN: return "infeasible_n";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kTerminalMismatch: return "terminal_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) fail(ErrorCode::kInvalidGraph, "negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      fail(ErrorCode::kInvalidGraph,
           "edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
    }
    if (a == b) fail(ErrorCode::kInvalidGraph, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      fail(ErrorCode::kInvalidGraph,
           "parallel edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b});
    adjacency_[static_cast<std::size_t>(a)].push_back({b, id});
    adjacency_[static_cast<std::size_t>(b)].push_back({a, id});
  }
  for (Vertex v = 1; v <= n_; ++v) max_degree_ = std::max(max_degree_, degree(v));
}

int Graph::min_degree() const {
  int d = n_ > 0 ? degree(1) : 0;
  for (Vertex v = 2; v <= n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_) return std::nullopt;
  for (const auto& inc : incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::is_regular(int d) const {
  for (Vertex v = 1; v <= n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> Graph::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

int popcount(ColorSet s) { return std::popcount(s); }

ColorSet palette_at(const Graph& g, const EdgeColoring& f, Vertex v) {
  ColorSet s = 0;
  for (const auto& inc : g.incident(v)) s |= bit(f[inc.edge]);
  return s & ~ColorSet{1};
}

VertexPalette vertex_palette(const Graph& g, const EdgeColoring& f, Vertex v) {
  return {v, palette_at(g, f, v)};
}

std::optional<EdgeId> edge_with_color(const Graph& g, const EdgeColoring& f,
                                      Vertex v, Color c) {
  for (const auto& inc : g.incident(v)) {
    if (f[inc.edge] == c) return inc.edge;
  }
  return std::nullopt;
}

std::optional<Color> smallest_missing(const Graph& g, const EdgeColoring& f,
                                      Vertex v, Color lo, Color hi) {
  const ColorSet s = palette_at(g, f, v);
  for (Color c = lo; c <= hi; ++c) {
    if (!has_color(s, c)) return c;
  }
  return std::nullopt;
}

void validate_total(const Graph& g, const EdgeColoring& f) {
  if (f.size() != static_cast<std::size_t>(g.edge_count())) {
    fail(ErrorCode::kMissingEdgeColor, "coloring size does not match edge count");
  }
  if (f.palette() < 1 || f.palette() > 30) {
    fail(ErrorCode::kColorOutOfRange, "palette must be in 1..30");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f[e] == 0) {
      fail(ErrorCode::kMissingEdgeColor, "edge " + std::to_string(e) + " is uncolored");
    }
    if (f[e] < 1 || f[e] > f.palette()) {
      fail(ErrorCode::kColorOutOfRange,
           "edge " + std::to_string(e) + " has color " + std::to_string(f[e]));
    }
  }
}

bool is_proper(const Graph& g, const EdgeColoring& f) {
  validate_total(g, f);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    ColorSet s = 0;
    for (const auto& inc : g.incident(v)) {
      const ColorSet b = bit(f[inc.edge]);
      if (s & b) return false;
      s |= b;
    }
  }
  return true;
}

void require_proper(const Graph& g, const EdgeColoring& f) {
  if (!is_proper(g, f)) fail(ErrorCode::kNotProper, "coloring is not proper");
}

std::vector<EdgeId> color_class(const EdgeColoring& f, Color k) {
  if (k < 1 || k > f.palette()) {
    fail(ErrorCode::kColorOutOfRange, "color " + std::to_string(k) + " outside palette");
  }
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f.colors()[e] == k) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::size_t class_size(const EdgeColoring& f, Color k) {
  return static_cast<std::size_t>(std::count(f.colors().begin(), f.colors().end(), k));
}

int max_used_color(const EdgeColoring& f) {
  int c = 0;
  for (Color x : f.colors()) c = std::max(c, x);
  return c;
}

namespace {

// Walks from `start` along the (a,b) edge other than `via`; appends to comp.
void walk(const Graph& g, const EdgeColoring& f, Color a, Color b, Vertex start,
          EdgeId via, std::vector<Vertex>& verts, std::vector<EdgeId>& edges,
          EdgeId stop_edge) {
  Vertex cur = start;
  EdgeId prev = via;
  while (true) {
    std::optional<EdgeId> next;
    for (const auto& inc : g.incident(cur)) {
      if (inc.edge == prev) continue;
      const Color c = f[inc.edge];
      if (c == a || c == b) {
        next = inc.edge;
        break;
      }
    }
    if (!next || *next == stop_edge) return;
    edges.push_back(*next);
    cur = g.edge(*next).other(cur);
    verts.push_back(cur);
    prev = *next;
  }
}

}  // namespace

BicoloredComponent component_of_edge(const Graph& g, const EdgeColoring& f,
                                     Color a, Color b, EdgeId rep) {
  if (a == b) fail(ErrorCode::kEqualColors, "bicolored component needs two colors");
  if (f[rep] != a && f[rep] != b) {
    fail(ErrorCode::kRepEdgeNotBicolored,
         "edge " + std::to_string(rep) + " is not colored " + std::to_string(a) +
             " or " + std::to_string(b));
  }
  const Edge& ed = g.edge(rep);
  // Forward from v through rep's far side.
  std::vector<Vertex> fwd_v{ed.u, ed.v};
  std::vector<EdgeId> fwd_e{rep};
  walk(g, f, a, b, ed.v, rep, fwd_v, fwd_e, rep);
  BicoloredComponent comp;
  if (fwd_v.size() > 2 && fwd_v.back() == ed.u) {
    // Closed back to u: a cycle.
    fwd_v.pop_back();
    comp.is_cycle = true;
    comp.vertices = std::move(fwd_v);
    comp.edges = std::move(fwd_e);
    return comp;
  }
  std::vector<Vertex> back_v;
  std::vector<EdgeId> back_e;
  walk(g, f, a, b, ed.u, rep, back_v, back_e, rep);
  std::reverse(back_v.begin(), back_v.end());
  std::reverse(back_e.begin(), back_e.end());
  comp.vertices = std::move(back_v);
  comp.vertices.insert(comp.vertices.end(), fwd_v.begin(), fwd_v.end());
  comp.edges = std::move(back_e);
  comp.edges.insert(comp.edges.end(), fwd_e.begin(), fwd_e.end());
  return comp;
}

std::optional<BicoloredComponent> component_at_vertex(const Graph& g,
                                                      const EdgeColoring& f,
                                                      Color a, Color b, Vertex v) {
  auto e = edge_with_color(g, f, v, a);
  if (!e) e = edge_with_color(g, f, v, b);
  if (!e) return std::nullopt;
  auto comp = component_of_edge(g, f, a, b, *e);
  if (!comp.is_cycle && comp.vertices.back() == v) {
    std::reverse(comp.vertices.begin(), comp.vertices.end());
    std::reverse(comp.edges.begin(), comp.edges.end());
  }
  return comp;
}

std::vector<BicoloredComponent> bicolored_subgraph(const Graph& g,
                                                   const EdgeColoring& f,
                                                   Color a, Color b) {
  require_proper(g, f);
  if (a == b) fail(ErrorCode::kEqualColors, "bicolored subgraph needs two colors");
  std::vector<bool> seen(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<BicoloredComponent> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (seen[static_cast<std::size_t>(e)] || (f[e] != a && f[e] != b)) continue;
    auto comp = component_of_edge(g, f, a, b, e);
    for (EdgeId x : comp.edges) seen[static_cast<std::size_t>(x)] = true;
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_high_degree_subgraph(const Graph& g, int threshold) {
  InducedSubgraph out;
  std::vector<Vertex> to_sub(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  out.to_parent.push_back(0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) >= threshold) {
      out.to_parent.push_back(v);
      to_sub[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size() - 1);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const Vertex a = to_sub[static_cast<std::size_t>(ed.u)];
    const Vertex b = to_sub[static_cast<std::size_t>(ed.v)];
    if (a && b) {
      edges.emplace_back(a, b);
      out.edge_to_parent.push_back(e);
    }
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()) - 1, edges);
  return out;
}

bool is_acyclic(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  EdgeSubgraph out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (EdgeId e : keep) {
    edges.emplace_back(g.edge(e).u, g.edge(e).v);
    out.edge_to_parent.push_back(e);
  }
  out.graph = Graph(g.vertex_count(), edges);
  return out;
}

std::vector<std::vector<EdgeId>> edge_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  int count = 0;
  for (Vertex s = 1; s <= g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0 || g.degree(s) == 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        auto& c = comp[static_cast<std::size_t>(inc.neighbor)];
        if (c < 0) {
          c = count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(count));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.edge(e).u)])].push_back(e);
  }
  return out;
}

bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (EdgeId e : edges) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (used[static_cast<std::size_t>(x)]) return false;
      used[static_cast<std::size_t>(x)] = true;
    }
  }
  return true;
}

}  // namespace kempe
