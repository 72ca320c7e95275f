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

#include "kempe/degree4.hpp"

#include <algorithm>

namespace kempe {

DoublingTower build_tower(const Graph& g) {
  if (g.max_degree() != 4) {
    fail(ErrorCode::kWrongMaxDegree, "max degree is " + std::to_string(g.max_degree()));
  }
  DoublingTower tower;
  tower.levels.push_back(g);
  while (!tower.levels.back().is_regular(4)) {
    const Graph& low = tower.levels.back();
    const int n = low.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : low.edges()) pairs.emplace_back(e.u, e.v);
    for (const auto& e : low.edges()) pairs.emplace_back(e.u + n, e.v + n);
    std::vector<EdgeId> join(static_cast<std::size_t>(n + 1), -1);
    for (Vertex x = 1; x <= n; ++x) {
      if (low.degree(x) < 4) {
        join[static_cast<std::size_t>(x)] = static_cast<EdgeId>(pairs.size());
        pairs.emplace_back(x, x + n);
      }
    }
    tower.joining.push_back(std::move(join));
    tower.levels.emplace_back(2 * n, pairs);
  }
  return tower;
}

EdgeColoring lift_coloring(const DoublingTower& tower, std::size_t level, const EdgeColoring& f) {
  const Graph& low = tower.levels.at(level);
  const Graph& high = tower.levels.at(level + 1);
  require_proper(low, f);
  const int m = low.edge_count();
  EdgeColoring out(f.palette(), static_cast<std::size_t>(high.edge_count()));
  for (EdgeId e = 0; e < m; ++e) {
    out[e] = f[e];
    out[e + m] = f[e];
  }
  const auto& join = tower.joining[level];
  for (Vertex x = 1; x <= low.vertex_count(); ++x) {
    const EdgeId j = join[static_cast<std::size_t>(x)];
    if (j < 0) continue;
    const auto c = smallest_missing(low, f, x, 1, 4);
    if (!c) {
      fail(ErrorCode::kNoFreeLowColor, "vertex " + std::to_string(x) + " sees all of 1..4");
    }
    out[j] = *c;
  }
  require_proper(high, out);
  return out;
}

Transcript project_transcript(const DoublingTower& tower, std::size_t level,
                              const EdgeColoring& start, const Transcript& big,
                              ProjectionStats* stats) {
  const Graph& low = tower.levels.at(level);
  const Graph& high = tower.levels.at(level + 1);
  const int m = low.edge_count();
  EdgeColoring small = start;
  EdgeColoring large = lift_coloring(tower, level, start);
  Transcript out;
  std::vector<char> inside(static_cast<std::size_t>(m));
  std::vector<char> done(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < big.size(); ++i) {
    const KempeMove& mv = big[i];
    const auto comp = component_of_edge(high, large, mv.a, mv.b, mv.rep_edge);
    std::fill(inside.begin(), inside.end(), 0);
    std::fill(done.begin(), done.end(), 0);
    for (EdgeId e : comp.edges) {
      if (e < m) inside[static_cast<std::size_t>(e)] = 1;
    }
    std::size_t emitted = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (!inside[static_cast<std::size_t>(e)] || done[static_cast<std::size_t>(e)]) continue;
      const auto part = component_of_edge(low, small, mv.a, mv.b, e);
      for (EdgeId x : part.edges) {
        if (!inside[static_cast<std::size_t>(x)]) {
          fail(ErrorCode::kProjectionMismatch,
               "copy component straddles the big component at move " + std::to_string(i));
        }
        done[static_cast<std::size_t>(x)] = 1;
      }
      out.push(KempeMove{mv.a, mv.b, e}, big.tag(i));
      ++emitted;
    }
    // Apply the copy moves only after collecting them all: they are disjoint.
    for (std::size_t k = out.size() - emitted; k < out.size(); ++k) apply_move(low, small, out[k]);
    apply_move(high, large, mv);
    for (EdgeId e = 0; e < m; ++e) {
      if (small[e] != large[e]) {
        fail(ErrorCode::kProjectionMismatch,
             "restriction differs on edge " + std::to_string(e) + " after move " + std::to_string(i));
      }
    }
    if (stats) {
      ++stats->big_moves;
      ++stats->invariant_checks;
      stats->projected_moves += emitted;
      stats->empty_steps += emitted == 0;
    }
  }
  return out;
}

TransformResult transform_delta4(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                                 Delta4Stats* stats) {
  if (g.max_degree() != 4) {
    fail(ErrorCode::kWrongMaxDegree, "max degree is " + std::to_string(g.max_degree()));
  }
  require_proper(g, f);
  if (!is_proper(g, h) || max_used_color(h) > 4) {
    fail(ErrorCode::kTargetNotProper4, "target is not a proper 4-coloring");
  }
  Transcript tr;
  EdgeColoring cur = f;
  if (cur.palette() < 5) cur.set_palette(5);
  if (cur.palette() > 5) {
    if (max_used_color(cur) > 5) {
      auto reduced = reduce_to_delta_plus_one(g, cur);
      tr = std::move(reduced.transcript);
      cur = std::move(reduced.coloring);
    }
    cur.set_palette(5);
  }
  if (stats) stats->vizing_moves = tr.size();
  EdgeColoring target = h;
  target.set_palette(5);

  const DoublingTower tower = build_tower(g);
  if (stats) stats->tower_height = tower.height();
  std::vector<EdgeColoring> starts{cur};
  std::vector<EdgeColoring> targets{target};
  for (std::size_t i = 0; i + 1 < tower.height(); ++i) {
    starts.push_back(lift_coloring(tower, i, starts.back()));
    targets.push_back(lift_coloring(tower, i, targets.back()));
  }
  auto top = regular4_transform(tower.top(), starts.back(), targets.back(),
                                   stats ? &stats->regular : nullptr);
  Transcript moves = std::move(top.transcript);
  for (std::size_t i = tower.height() - 1; i-- > 0;) {
    moves = project_transcript(tower, i, starts[i], moves, stats ? &stats->projection : nullptr);
  }
  tr.append(moves);
  EdgeColoring out = apply_transcript(g, cur, moves, ApplyOptions{false});
  if (!out.same_colors(h)) {
    fail(ErrorCode::kProjectionMismatch, "projected run does not end at the target");
  }
  out.set_palette(f.palette());
  return {std::move(out), std::move(tr)};
}

}  // namespace kempe
