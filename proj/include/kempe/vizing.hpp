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

#include <string>

#include "kempe/engine.hpp"
#include "kempe/graph.hpp"

namespace kempe {

struct TransformResult {
  EdgeColoring coloring;
  Transcript transcript;
};

// Recolors edge `e` (incident to `pivot`, colored above `low`) into a color in
// 1..low using a maximal fan at pivot whose edges all carry low colors, then a
// downshift and at most one bicolored path interchange. Returns false, leaving
// the coloring untouched, when every low color appears at the last fan leaf.
bool fan_eliminate(Work& w, Vertex pivot, EdgeId e, Color low, const std::string& tag);

// Transforms a proper t-coloring with t >= max degree + 2 into a proper
// (max degree + 1)-coloring. Throws kPaletteTooSmall otherwise.
TransformResult reduce_to_delta_plus_one(const Graph& g, const EdgeColoring& f);

}  // namespace kempe
