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

#include "kempe/acyclic.hpp"

#include <algorithm>

namespace kempe {
namespace {

class Reducer {
 public:
  Reducer(Work& w, AcyclicStats* stats)
      : w_(w), g_(w.graph()), delta_(g_.max_degree()), top_(delta_ + 1), stats_(stats) {}

  void run() {
    const std::size_t budget = 10 * static_cast<std::size_t>(g_.edge_count()) *
                               static_cast<std::size_t>(std::max(1, g_.vertex_count()));
    w_.set_move_budget(w_.transcript().size() + budget);
    while (true) {
      const std::size_t before = top_count();
      if (stats_) stats_->top_counts.push_back(before);
      if (before == 0) break;
      round();
      if (top_count() >= before) {
        fail(ErrorCode::kPreconditionViolated, "round did not reduce the top color class");
      }
    }
    w_.set_move_budget(0);
  }

 private:
  bool high(Vertex x) const { return g_.degree(x) == delta_; }

  int high_degree(Vertex x) const {
    if (!high(x)) return 0;
    int d = 0;
    for (const auto& inc : g_.incident(x)) d += high(inc.neighbor);
    return d;
  }

  bool in_high(EdgeId e) const { return high(g_.edge(e).u) && high(g_.edge(e).v); }

  std::size_t top_count() const { return class_size(w_.coloring(), top_); }

  void round() {
    const auto tops = color_class(w_.coloring(), top_);
    for (EdgeId e : tops) {
      if (!in_high(e)) continue;
      const Edge& ed = g_.edge(e);
      if (high_degree(ed.u) == 1 || high_degree(ed.v) == 1) {
        case_a(e);
        return;
      }
    }
    for (EdgeId e : tops) {
      if (in_high(e)) {
        walk(e, g_.edge(e).u, g_.edge(e).v);
        return;
      }
    }
    for (EdgeId e : tops) {
      const Edge& ed = g_.edge(e);
      if (high(ed.u) || high(ed.v)) {
        toward_high(e, high(ed.u) ? ed.u : ed.v);
        return;
      }
    }
    const EdgeId e = tops.front();
    const Vertex v = g_.edge(e).u;
    if (fan_eliminate(w_, v, e, delta_, "acyclic-low")) return;
    const EdgeId moved = shift_along_fan(v, e);
    toward_high(moved, g_.edge(moved).other(v));
  }

  void case_a(EdgeId e) {
    const Edge& ed = g_.edge(e);
    const Vertex v = high_degree(ed.u) == 1 ? ed.u : ed.v;
    if (!fan_eliminate(w_, v, e, delta_, "acyclic-leaf")) {
      fail(ErrorCode::kPreconditionViolated, "leaf fan blocked");
    }
  }

  // Top-colored edge at a max-degree vertex v with no top edge inside the
  // max-degree subgraph.
  void toward_high(EdgeId e, Vertex v) {
    if (fan_eliminate(w_, v, e, delta_, "acyclic-high")) return;
    const EdgeId moved = shift_along_fan(v, e);
    const Edge& ed = g_.edge(moved);
    if (high_degree(ed.u) == 1 || high_degree(ed.v) == 1) {
      case_a(moved);
    } else {
      walk(moved, ed.other(v), v);
    }
  }

  // Pushes the top color from e1 = pivot-u1 onto the last edge of the maximal
  // fan by chaining (top, c)-path interchanges; the last leaf must miss only
  // the top color. Returns the new top-colored edge at the pivot.
  EdgeId shift_along_fan(Vertex pivot, EdgeId e1) {
    const Fan fan = grow_fan(g_, w_.coloring(), pivot, e1, delta_);
    const std::size_t k = fan.size();
    if (k < 2) fail(ErrorCode::kPreconditionViolated, "blocked fan of length 1");
    const std::size_t before = top_count();
    std::vector<Color> c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = w_.color(fan.edges[j]);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const Vertex origin = fan.leaves[j];
      w_.interchange_at(top_, c[j + 1], origin, "acyclic-walk");
      if (w_.color(fan.edges[j + 1]) != top_ || w_.color(fan.edges[j]) != c[j + 1]) {
        fail(ErrorCode::kPreconditionViolated, "walk chain did not shift the top color");
      }
      if (top_count() > before) {
        fail(ErrorCode::kPreconditionViolated, "walk chain increased the top color class");
      }
    }
    return fan.edges.back();
  }

  // Walk a_0 = prev, a_1 = cur along the max-degree forest.
  void walk(EdgeId e, Vertex prev, Vertex cur) {
    std::vector<Vertex> seen{prev, cur};
    while (true) {
      if (stats_) ++stats_->walk_steps;
      if (high_degree(cur) == 1) {
        if (!fan_eliminate(w_, cur, e, delta_, "acyclic-leaf")) {
          fail(ErrorCode::kPreconditionViolated, "leaf fan blocked");
        }
        return;
      }
      if (fan_eliminate(w_, cur, e, delta_, "acyclic-escape")) return;
      e = shift_along_fan(cur, e);
      const Vertex next = g_.edge(e).other(cur);
      if (!high(next) || std::find(seen.begin(), seen.end(), next) != seen.end()) {
        fail(ErrorCode::kPreconditionViolated, "walk revisited a vertex");
      }
      seen.push_back(next);
      prev = cur;
      cur = next;
    }
  }

  Work& w_;
  const Graph& g_;
  int delta_;
  Color top_;
  AcyclicStats* stats_;
};

}  // namespace

void acyclic_reduce(Work& w, AcyclicStats* stats) {
  const Graph& g = w.graph();
  if (!is_acyclic(induced_high_degree_subgraph(g, g.max_degree()).graph)) {
    fail(ErrorCode::kMaxDegreeSubgraphCyclic, "max-degree subgraph contains a cycle");
  }
  Reducer(w, stats).run();
}

TransformResult acyclic_reduce(const Graph& g, const EdgeColoring& f, AcyclicStats* stats) {
  require_proper(g, f);
  if (f.palette() != g.max_degree() + 1) {
    fail(ErrorCode::kPaletteMismatch, "palette must equal max degree + 1");
  }
  Work w(g, f);
  acyclic_reduce(w, stats);
  w.set_palette(g.max_degree());
  EdgeColoring out = w.coloring();
  return {std::move(out), w.take_transcript()};
}

}  // namespace kempe
