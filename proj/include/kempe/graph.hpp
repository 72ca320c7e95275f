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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kempe/error.hpp"

namespace kempe {

using Vertex = int;  // 1-based
using EdgeId = int;  // 0-based, input order
using Color = int;   // 1..palette, 0 means "uncolored"

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }
};

// Immutable simple undirected graph.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidGraph on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                            edges.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const { return max_degree_; }
  int min_degree() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool is_regular(int d) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.pairs() == b.pairs();
  }

  std::vector<std::pair<Vertex, Vertex>> pairs() const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Total assignment edge id -> color in 1..palette. Properness is checked,
// never assumed.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int palette, std::vector<Color> colors)
      : palette_(palette), colors_(std::move(colors)) {}
  EdgeColoring(int palette, std::size_t edge_count)
      : palette_(palette), colors_(edge_count, 0) {}

  int palette() const { return palette_; }
  void set_palette(int t) { palette_ = t; }
  Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  Color& operator[](EdgeId e) { return colors_[static_cast<std::size_t>(e)]; }
  std::size_t size() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }

  // Same colors on every edge; palette headers are ignored.
  bool same_colors(const EdgeColoring& other) const { return colors_ == other.colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int palette_ = 0;
  std::vector<Color> colors_;
};

// Bitmask of colors appearing at a vertex (bit c set iff color c appears).
using ColorSet = std::uint32_t;

inline bool has_color(ColorSet s, Color c) { return (s >> c) & 1U; }
inline ColorSet bit(Color c) { return ColorSet{1} << c; }
int popcount(ColorSet s);

struct VertexPalette {
  Vertex vertex;
  ColorSet colors;
};

ColorSet palette_at(const Graph& g, const EdgeColoring& f, Vertex v);
VertexPalette vertex_palette(const Graph& g, const EdgeColoring& f, Vertex v);
// Edge at v colored c, if any.
std::optional<EdgeId> edge_with_color(const Graph& g, const EdgeColoring& f,
                                      Vertex v, Color c);
// Smallest color in [lo, hi] missing at v.
std::optional<Color> smallest_missing(const Graph& g, const EdgeColoring& f,
                                      Vertex v, Color lo, Color hi);

// Throws kMissingEdgeColor / kColorOutOfRange on malformed colorings.
void validate_total(const Graph& g, const EdgeColoring& f);
bool is_proper(const Graph& g, const EdgeColoring& f);
void require_proper(const Graph& g, const EdgeColoring& f);

std::vector<EdgeId> color_class(const EdgeColoring& f, Color k);
std::size_t class_size(const EdgeColoring& f, Color k);
int max_used_color(const EdgeColoring& f);

struct BicoloredComponent {
  bool is_cycle = false;
  std::vector<Vertex> vertices;  // ordered walk; a cycle does not repeat its start
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1]
};

// Component of G_f(a,b) that contains edge `rep` (which must be colored a or b).
BicoloredComponent component_of_edge(const Graph& g, const EdgeColoring& f,
                                     Color a, Color b, EdgeId rep);
// Maximal (a,b)-colored path/cycle that contains vertex v, or nullopt when
// neither color appears at v.
std::optional<BicoloredComponent> component_at_vertex(const Graph& g,
                                                      const EdgeColoring& f,
                                                      Color a, Color b, Vertex v);
std::vector<BicoloredComponent> bicolored_subgraph(const Graph& g,
                                                   const EdgeColoring& f,
                                                   Color a, Color b);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // index = subgraph vertex (1-based); [0] unused
  std::vector<EdgeId> edge_to_parent;
};

InducedSubgraph induced_high_degree_subgraph(const Graph& g, int threshold);
bool is_acyclic(const Graph& g);

// Spanning subgraph keeping the listed edges; ids are renumbered in order.
struct EdgeSubgraph {
  Graph graph;
  std::vector<EdgeId> edge_to_parent;
};
EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

// Connected components as edge lists (isolated vertices omitted).
std::vector<std::vector<EdgeId>> edge_components(const Graph& g);

bool is_matching(const Graph& g, std::span<const EdgeId> edges);

}  // namespace kempe
