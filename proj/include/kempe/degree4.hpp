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

#include <vector>

#include "kempe/regular4.hpp"

namespace kempe {

// Level i+1 holds two copies of level i (vertex x and x + n_i) plus one
// joining edge per vertex of degree below 4. Copy one keeps edge ids
// 0..m_i-1, copy two uses m_i..2m_i-1, joining edges follow in vertex order.
struct DoublingTower {
  std::vector<Graph> levels;
  // joining[i][x] = edge id in level i+1 joining the copies of x, or -1.
  std::vector<std::vector<EdgeId>> joining;

  std::size_t height() const { return levels.size(); }
  const Graph& top() const { return levels.back(); }
};

DoublingTower build_tower(const Graph& g);

// Colors both copies as f and each joining edge with the smallest color of
// 1..4 missing at its vertex.
EdgeColoring lift_coloring(const DoublingTower& tower, std::size_t level,
                           const EdgeColoring& f);

struct ProjectionStats {
  std::size_t big_moves = 0;
  std::size_t projected_moves = 0;
  std::size_t empty_steps = 0;
  std::size_t invariant_checks = 0;
};

// Maps a transcript valid on level+1 (starting at lift_coloring(level, start))
// to level, checking after every big move that the level coloring equals the
// restriction to copy one (kProjectionMismatch otherwise).
Transcript project_transcript(const DoublingTower& tower, std::size_t level,
                              const EdgeColoring& start, const Transcript& big,
                              ProjectionStats* stats = nullptr);

struct Delta4Stats {
  Regular4Stats regular;
  ProjectionStats projection;
  std::size_t tower_height = 0;
  std::size_t vizing_moves = 0;
};

// Proper t-coloring (t >= 4) of a max-degree-4 graph to the proper 4-coloring h.
TransformResult transform_delta4(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                                 Delta4Stats* stats = nullptr);

struct SearchOptions {
  std::size_t state_cap = 2'000'000;
};

// Stand-in for the external low-degree result: transcript between two proper
// colorings of a max-degree <= 3 graph, through peeling plus breadth-first
// search where no constructive step applies.
Transcript low_degree_equalize(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                               SearchOptions opts = {});

// Breadth-first search (per connected component) for Kempe moves emptying
// color `top`, one strict decrease at a time. Throws kSearchBudgetExceeded.
void search_reduce_top(Work& w, Color top, SearchOptions opts = {});

}  // namespace kempe
