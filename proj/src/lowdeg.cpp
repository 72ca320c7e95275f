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

#include <deque>
#include <random>
#include <string>
#include <unordered_map>

#include "kempe/degree4.hpp"
#include "kempe/oracle.hpp"
#include "kempe/reductions.hpp"

namespace kempe {
namespace {

std::string key_of(const EdgeColoring& f) {
  std::string k(f.size(), '\0');
  for (std::size_t i = 0; i < f.size(); ++i) k[i] = static_cast<char>(f.colors()[i]);
  return k;
}

// Moves on one connected component until it has strictly fewer `top` edges.
Transcript search_decrease(const Graph& g, const EdgeColoring& start, Color top,
                           std::size_t cap) {
  const std::size_t goal = class_size(start, top);
  struct Parent {
    std::string from;
    KempeMove move;
  };
  std::unordered_map<std::string, Parent> parent;
  const std::string root = key_of(start);
  parent.emplace(root, Parent{root, {}});
  std::deque<EdgeColoring> queue{start};
  while (!queue.empty()) {
    const EdgeColoring cur = std::move(queue.front());
    queue.pop_front();
    const std::string cur_key = key_of(cur);
    std::optional<std::string> hit;
    oracle::for_each_kempe_move(g, cur, top, [&](const KempeMove& mv, const BicoloredComponent& comp) {
      if (hit) return;
      EdgeColoring next = cur;
      for (EdgeId e : comp.edges) next[e] = next[e] == mv.a ? mv.b : mv.a;
      std::string k = key_of(next);
      if (parent.contains(k)) return;
      if (parent.size() >= cap) {
        fail(ErrorCode::kSearchBudgetExceeded, "reconfiguration search exceeded its state cap");
      }
      parent.emplace(k, Parent{cur_key, mv});
      if (class_size(next, top) < goal) {
        hit = std::move(k);
        return;
      }
      queue.push_back(std::move(next));
    });
    if (hit) {
      std::vector<KempeMove> path;
      for (std::string k = *hit; k != root; k = parent.at(k).from) path.push_back(parent.at(k).move);
      Transcript tr;
      for (auto it = path.rbegin(); it != path.rend(); ++it) tr.push(*it, "search");
      return tr;
    }
  }
  fail(ErrorCode::kSearchBudgetExceeded, "no Kempe sequence lowers the top color class");
}

// Seeded local attempt: a top edge whose ends miss a common color, an
// (a,b)-path at one end that avoids the other end, or a (top,x) component
// with more top edges than x edges. Between attempts, shake with a random
// interchange that does not grow the top class.
std::optional<Transcript> local_decrease(const Graph& g, const EdgeColoring& start, Color top,
                                         std::size_t rounds) {
  Work w(g, start);
  std::mt19937_64 rng(0x5eed0000 + g.edge_count());
  const auto gain = [&](const BicoloredComponent& comp) {
    long d = 0;
    for (EdgeId x : comp.edges) d += w.color(x) == top ? 1 : -1;
    return d;
  };
  for (std::size_t round = 0; round < rounds; ++round) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (w.color(e) != top) continue;
      const Edge& ed = g.edge(e);
      const ColorSet pu = w.palette(ed.u), pv = w.palette(ed.v);
      for (Color a = 1; a < top; ++a) {
        if (has_color(pu, a)) continue;
        if (!has_color(pv, a)) {
          w.recolor(e, a, "local");
          return w.take_transcript();
        }
        for (Color b = 1; b < top; ++b) {
          if (b == a || has_color(pv, b) || !has_color(pu, b)) continue;
          const auto comp = component_at_vertex(g, w.coloring(), a, b, ed.u);
          if (!comp || comp->vertices.front() == ed.v || comp->vertices.back() == ed.v) continue;
          w.interchange(a, b, comp->edges.front(), "local");
          w.recolor(e, b, "local");
          return w.take_transcript();
        }
      }
      for (Color x = 1; x < top; ++x) {
        const auto comp = component_of_edge(g, w.coloring(), top, x, e);
        if (gain(comp) > 0) {
          w.interchange(top, x, e, "local");
          return w.take_transcript();
        }
      }
    }
    std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
    const EdgeId rep = pick(rng);
    const Color a = w.color(rep);
    std::uniform_int_distribution<Color> other(1, top - 1);
    Color b = other(rng);
    if (b >= a) ++b;
    if (a == top || b == top) {
      if (gain(component_of_edge(g, w.coloring(), a, b, rep)) < 0) continue;
    }
    w.interchange(a, b, rep, "shake");
  }
  return std::nullopt;
}

}  // namespace

void search_reduce_top(Work& w, Color top, SearchOptions opts) {
  const Graph& g = w.graph();
  for (const auto& comp : edge_components(g)) {
    const EdgeSubgraph sub = edge_subgraph(g, comp);
    while (true) {
      EdgeColoring local(top, sub.edge_to_parent.size());
      for (std::size_t i = 0; i < sub.edge_to_parent.size(); ++i) {
        local[static_cast<EdgeId>(i)] = w.color(sub.edge_to_parent[i]);
      }
      if (class_size(local, top) == 0) break;
      auto quick = local_decrease(sub.graph, local, top, 40 * sub.edge_to_parent.size() + 200);
      const Transcript step =
          quick ? std::move(*quick) : search_decrease(sub.graph, local, top, opts.state_cap);
      for (std::size_t i = 0; i < step.size(); ++i) {
        const KempeMove& mv = step[i];
        w.interchange(mv.a, mv.b, sub.edge_to_parent[static_cast<std::size_t>(mv.rep_edge)],
                      step.tag(i));
      }
    }
  }
}

Transcript low_degree_equalize(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                               SearchOptions) {
  const int delta = g.max_degree();
  if (delta > 3) fail(ErrorCode::kWrongMaxDegree, "max degree exceeds 3");
  require_proper(g, f);
  require_proper(g, h);
  if (max_used_color(f) > delta + 1 || max_used_color(h) > delta + 1) {
    fail(ErrorCode::kPaletteMismatch, "colorings must use at most max degree + 1 colors");
  }
  if (g.edge_count() == 0) return {};
  if (max_used_color(h) <= delta) return peel_and_recurse(g, f, h, delta);
  if (max_used_color(f) <= delta) return peel_and_recurse(g, h, f, delta).reversed();
  const auto chi = oracle::chromatic_index(g);
  if (chi.value == delta + 1) return peel_and_recurse(g, f, h, delta + 1);
  Transcript tr = peel_and_recurse(g, f, chi.witness, delta);
  tr.append(peel_and_recurse(g, h, chi.witness, delta).reversed());
  return tr;
}

}  // namespace kempe
