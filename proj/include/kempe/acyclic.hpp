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

#include "kempe/vizing.hpp"

namespace kempe {

struct AcyclicStats {
  std::vector<std::size_t> top_counts;  // |M(f, max degree + 1)| before each round, then final
  std::size_t walk_steps = 0;
};

// Transforms a proper (max degree + 1)-coloring into a proper max-degree
// coloring. Requires the subgraph induced by max-degree vertices to be a
// forest (kMaxDegreeSubgraphCyclic) and palette = max degree + 1
// (kPaletteMismatch).
TransformResult acyclic_reduce(const Graph& g, const EdgeColoring& f,
                               AcyclicStats* stats = nullptr);

// In-place variant on a working state; palette header is left untouched.
void acyclic_reduce(Work& w, AcyclicStats* stats = nullptr);

}  // namespace kempe
