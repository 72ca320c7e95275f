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

#include <map>
#include <string>
#include <vector>

#include "kempe/engine.hpp"
#include "kempe/vizing.hpp"

namespace kempe {

struct Regular4Stats {
  // |M(f,1) ∩ M(h,1)| at the start of every outer iteration, then the final value.
  std::vector<std::size_t> matched_trace;
  std::size_t improvements = 0;
  std::size_t monovariant_violations = 0;
  std::map<std::string, std::size_t> case_counts;
};

// Transforms a proper 5-coloring f of a 4-regular graph into the proper
// 4-coloring h exactly. Throws kNotRegular4 / kTargetNotProper4.
TransformResult regular4_transform(const Graph& g, const EdgeColoring& f,
                                      const EdgeColoring& h, Regular4Stats* stats = nullptr);

// One outer iteration started at edge e (h(e) = 1 != color of e): raises
// |M(w,1) ∩ M(h,1)| by at least one. Returns the new value.
std::size_t regular4_improve(Work& w, const EdgeColoring& h, EdgeId e,
                             Regular4Stats* stats = nullptr);

}  // namespace kempe
