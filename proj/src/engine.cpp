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

#include "kempe/engine.hpp"

#include <algorithm>

namespace kempe {

void Transcript::append(const Transcript& other) {
  moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
  tags_.insert(tags_.end(), other.tags_.begin(), other.tags_.end());
}

Transcript Transcript::reversed() const {
  Transcript out;
  for (std::size_t i = moves_.size(); i-- > 0;) out.push(moves_[i], tags_[i]);
  return out;
}

std::size_t apply_move(const Graph& g, EdgeColoring& f, const KempeMove& mv) {
  if (mv.a == mv.b) fail(ErrorCode::kEqualColors, "move colors must differ");
  if (mv.rep_edge < 0 || mv.rep_edge >= g.edge_count()) {
    fail(ErrorCode::kRepEdgeNotBicolored, "representative edge out of range");
  }
  const auto comp = component_of_edge(g, f, mv.a, mv.b, mv.rep_edge);
  for (EdgeId e : comp.edges) f[e] = f[e] == mv.a ? mv.b : mv.a;
  return comp.edges.size();
}

EdgeColoring interchange(const Graph& g, const EdgeColoring& f, const KempeMove& mv) {
  require_proper(g, f);
  if (mv.a < 1 || mv.b < 1 || mv.a > f.palette() || mv.b > f.palette()) {
    fail(ErrorCode::kColorOutOfRange, "move color outside palette");
  }
  EdgeColoring out = f;
  apply_move(g, out, mv);
  return out;
}

bool involution_check(const Graph& g, const EdgeColoring& f, const KempeMove& mv) {
  return interchange(g, interchange(g, f, mv), mv) == f;
}

Fan grow_fan(const Graph& g, const EdgeColoring& f, Vertex pivot, EdgeId first_edge,
             Color low_limit) {
  if (!g.edge(first_edge).has(pivot)) {
    fail(ErrorCode::kEdgeNotIncident,
         "edge " + std::to_string(first_edge) + " is not incident to pivot");
  }
  Fan fan;
  fan.pivot = pivot;
  fan.edges.push_back(first_edge);
  fan.associated.push_back(f[first_edge]);
  fan.leaves.push_back(g.edge(first_edge).other(pivot));
  while (true) {
    const ColorSet at_leaf = palette_at(g, f, fan.leaves.back());
    std::optional<Incidence> next;
    for (const auto& inc : g.incident(pivot)) {
      const Color c = f[inc.edge];
      if (c > low_limit || has_color(at_leaf, c)) continue;
      if (std::find(fan.edges.begin(), fan.edges.end(), inc.edge) != fan.edges.end()) {
        continue;
      }
      if (!next || inc.edge < next->edge) next = inc;
    }
    if (!next) break;
    fan.edges.push_back(next->edge);
    fan.associated.push_back(f[next->edge]);
    fan.leaves.push_back(next->neighbor);
  }
  if (auto c = smallest_missing(g, f, fan.leaves.back(), 1, low_limit)) {
    for (std::size_t i = 0; i < fan.edges.size(); ++i) {
      if (f[fan.edges[i]] == *c) fan.repeat_index = static_cast<int>(i);
    }
  }
  return fan;
}

Fan grow_fan(const Graph& g, const EdgeColoring& f, Vertex pivot, EdgeId first_edge) {
  require_proper(g, f);
  return grow_fan(g, f, pivot, first_edge, f.palette());
}

EdgeColoring downshift_direct(const EdgeColoring& f, const Fan& fan, Color free_color) {
  EdgeColoring out = f;
  const std::size_t k = fan.edges.size();
  for (std::size_t j = 0; j + 1 < k; ++j) out[fan.edges[j]] = f[fan.edges[j + 1]];
  out[fan.edges[k - 1]] = free_color;
  return out;
}

namespace {

void expand_downshift(const Graph& g, EdgeColoring& f, const Fan& fan, Color free_color,
                      Transcript& tr, const std::string& tag) {
  const ColorSet at_pivot = palette_at(g, f, fan.pivot);
  const ColorSet at_last = palette_at(g, f, fan.leaves.back());
  if (has_color(at_pivot, free_color) || has_color(at_last, free_color)) {
    fail(ErrorCode::kNotSaturated,
         "color " + std::to_string(free_color) + " is not free at pivot and last leaf");
  }
  Color incoming = free_color;
  for (std::size_t j = fan.edges.size(); j-- > 0;) {
    const EdgeId e = fan.edges[j];
    const Color old = f[e];
    const KempeMove mv{incoming, old, e};
    const std::size_t swapped = apply_move(g, f, mv);
    if (swapped != 1) {
      fail(ErrorCode::kPreconditionViolated,
           "downshift step on edge " + std::to_string(e) + " touched " +
               std::to_string(swapped) + " edges; fan invalid");
    }
    tr.push(mv, tag);
    incoming = old;
  }
}

}  // namespace

DownshiftResult downshift(const Graph& g, const EdgeColoring& f, const Fan& fan,
                          Color free_color) {
  require_proper(g, f);
  DownshiftResult out{f, {}};
  expand_downshift(g, out.coloring, fan, free_color, out.moves, "downshift");
  return out;
}

EdgeColoring apply_transcript(const Graph& g, const EdgeColoring& f,
                              const Transcript& tr, ApplyOptions opts) {
  require_proper(g, f);
  EdgeColoring cur = f;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const KempeMove& mv = tr[i];
    if (mv.a == mv.b) throw InvalidMoveError(i, "equal colors");
    if (mv.a < 1 || mv.b < 1 || mv.a > f.palette() || mv.b > f.palette()) {
      throw InvalidMoveError(i, "color outside palette " + std::to_string(f.palette()));
    }
    if (mv.rep_edge < 0 || mv.rep_edge >= g.edge_count()) {
      throw InvalidMoveError(i, "representative edge out of range");
    }
    if (cur[mv.rep_edge] != mv.a && cur[mv.rep_edge] != mv.b) {
      throw InvalidMoveError(i, "representative edge " + std::to_string(mv.rep_edge) +
                                    " has color " + std::to_string(cur[mv.rep_edge]));
    }
    apply_move(g, cur, mv);
    if (opts.check_every_step && !is_proper(g, cur)) {
      throw InvalidMoveError(i, "intermediate coloring not proper");
    }
  }
  return cur;
}

Work::Work(const Graph& g, EdgeColoring start) : g_(&g), cur_(std::move(start)) {}

void Work::charge() {
  if (budget_ != 0 && tr_.size() >= budget_) {
    fail(ErrorCode::kBudgetExceeded,
         "move budget of " + std::to_string(budget_) + " exhausted");
  }
}

std::size_t Work::interchange(Color a, Color b, EdgeId rep, const std::string& tag) {
  charge();
  const KempeMove mv{a, b, rep};
  const std::size_t n = apply_move(*g_, cur_, mv);
  tr_.push(mv, tag);
  return n;
}

std::optional<BicoloredComponent> Work::interchange_at(Color a, Color b, Vertex v,
                                                       const std::string& tag) {
  auto comp = component_at_vertex(*g_, cur_, a, b, v);
  if (!comp) return std::nullopt;
  interchange(a, b, comp->edges.front(), tag);
  return comp;
}

void Work::recolor(EdgeId e, Color c, const std::string& tag) {
  const Color old = cur_[e];
  const Edge& ed = g_->edge(e);
  if (c == old || !missing(ed.u, c) || !missing(ed.v, c)) {
    fail(ErrorCode::kPreconditionViolated,
         "cannot recolor edge " + std::to_string(e) + " to " + std::to_string(c));
  }
  interchange(c, old, e, tag);
}

void Work::downshift(const Fan& fan, Color free_color, const std::string& tag) {
  Transcript local;
  EdgeColoring next = cur_;
  expand_downshift(*g_, next, fan, free_color, local, tag);
  for (std::size_t i = 0; i < local.size(); ++i) charge(), tr_.push(local[i], local.tag(i));
  cur_ = std::move(next);
}

void Work::replay(const Transcript& tr) {
  for (std::size_t i = 0; i < tr.size(); ++i) {
    charge();
    apply_move(*g_, cur_, tr[i]);
    tr_.push(tr[i], tr.tag(i));
  }
}

}  // namespace kempe
