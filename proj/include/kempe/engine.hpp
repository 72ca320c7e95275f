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

#include <cstddef>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

// One interchange: swap colors a and b on the component of G_f(a,b) that
// contains rep_edge.
struct KempeMove {
  Color a = 0;
  Color b = 0;
  EdgeId rep_edge = -1;

  friend bool operator==(const KempeMove&, const KempeMove&) = default;
};

class Transcript {
 public:
  void push(KempeMove mv, std::string tag = {}) {
    moves_.push_back(mv);
    tags_.push_back(std::move(tag));
  }
  void append(const Transcript& other);
  // Reverse order; valid because every move is an involution on its component.
  Transcript reversed() const;

  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  const KempeMove& operator[](std::size_t i) const { return moves_[i]; }
  const std::string& tag(std::size_t i) const { return tags_[i]; }
  const std::vector<KempeMove>& moves() const { return moves_; }

  friend bool operator==(const Transcript& x, const Transcript& y) {
    return x.moves_ == y.moves_;
  }

 private:
  std::vector<KempeMove> moves_;
  std::vector<std::string> tags_;
};

// Ordered edges at a pivot; associated[i] is the color of edges[i] (for i >= 1
// it is the color associated with the previous leaf).
struct Fan {
  Vertex pivot = 0;
  std::vector<EdgeId> edges;
  std::vector<Color> associated;
  std::vector<Vertex> leaves;  // leaves[i] = far end of edges[i]
  // Set when growth stopped because the leaf's next color already sits on a
  // fan edge; holds that fan position.
  int repeat_index = -1;

  std::size_t size() const { return edges.size(); }
};

// Pure interchange on an immutable coloring.
EdgeColoring interchange(const Graph& g, const EdgeColoring& f, const KempeMove& mv);
bool involution_check(const Graph& g, const EdgeColoring& f, const KempeMove& mv);

// In-place variant used by the transform machinery; returns the number of
// edges swapped. Validates a != b and rep_edge's color, not global properness.
std::size_t apply_move(const Graph& g, EdgeColoring& f, const KempeMove& mv);

// Maximal fan from first_edge. Next-edge candidates are edges at the pivot,
// not yet in the fan, whose color lies in [1, low_limit] and is missing at the
// current last leaf; the lowest edge id wins.
Fan grow_fan(const Graph& g, const EdgeColoring& f, Vertex pivot, EdgeId first_edge,
             Color low_limit);
Fan grow_fan(const Graph& g, const EdgeColoring& f, Vertex pivot, EdgeId first_edge);

struct DownshiftResult {
  EdgeColoring coloring;
  Transcript moves;
};

// Rotate colors down the fan: last edge takes free_color, edge j takes the
// color of edge j+1. Expanded into single-edge interchanges.
DownshiftResult downshift(const Graph& g, const EdgeColoring& f, const Fan& fan,
                          Color free_color);
// Closed-form rotation, for cross-checking the expansion.
EdgeColoring downshift_direct(const EdgeColoring& f, const Fan& fan, Color free_color);

struct ApplyOptions {
  bool check_every_step = true;
};

// Applies every move; throws InvalidMoveError on the first invalid one and
// leaves the input untouched.
EdgeColoring apply_transcript(const Graph& g, const EdgeColoring& f,
                              const Transcript& tr, ApplyOptions opts = {});

// Mutable working state: the current coloring plus the certified moves that
// produced it. All transform modules build on this.
class Work {
 public:
  Work(const Graph& g, EdgeColoring start);

  const Graph& graph() const { return *g_; }
  const EdgeColoring& coloring() const { return cur_; }
  const Transcript& transcript() const { return tr_; }
  Transcript take_transcript() { return std::move(tr_); }
  Color color(EdgeId e) const { return cur_[e]; }
  ColorSet palette(Vertex v) const { return palette_at(*g_, cur_, v); }
  bool missing(Vertex v, Color c) const { return !has_color(palette(v), c); }
  std::optional<EdgeId> edge_at(Vertex v, Color c) const {
    return edge_with_color(*g_, cur_, v, c);
  }

  // Interchange on the component containing rep; returns swapped edge count.
  std::size_t interchange(Color a, Color b, EdgeId rep, const std::string& tag = {});
  // Interchange on the maximal (a,b) path/cycle at vertex v (no-op when
  // neither color appears there). Returns the component that was swapped.
  std::optional<BicoloredComponent> interchange_at(Color a, Color b, Vertex v,
                                                   const std::string& tag = {});
  // Recolor e to c where c is missing at both ends (a one-edge interchange).
  void recolor(EdgeId e, Color c, const std::string& tag = {});
  void downshift(const Fan& fan, Color free_color, const std::string& tag = {});
  void replay(const Transcript& tr);

  void set_move_budget(std::size_t budget) { budget_ = budget; }
  void set_palette(int t) { cur_.set_palette(t); }

 private:
  void charge();

  const Graph* g_;
  EdgeColoring cur_;
  Transcript tr_;
  std::size_t budget_ = 0;  // 0 = unlimited
};

}  // namespace kempe
