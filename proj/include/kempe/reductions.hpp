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

#include <optional>
#include <string>

#include "kempe/degree4.hpp"

namespace kempe {

// Recolors edges to `top` wherever top is missing at both ends (lowest edge id
// first) until M(h, top) is a maximal matching.
TransformResult maximalize_top_class(const Graph& g, const EdgeColoring& h, Color top);

enum class Family {
  kLowDegree,        // max degree <= 3
  kDelta4Class1,
  kDelta4Class2,
  kDelta5Class2,
  kHighForest,       // vertices of degree >= 5 induce a forest
  kUnsupported,
};

std::string_view family_name(Family f);
Family classify(const Graph& g, int chromatic_index);

struct PeelStats {
  std::size_t vizing_steps = 0;
  std::size_t acyclic_steps = 0;
  std::size_t delta4_steps = 0;
  std::size_t search_steps = 0;
  std::size_t depth = 0;
};

// f uses at most k+1 colors, h at most k colors, k >= max degree. Returns a
// transcript from f to h whose colorings never use colors above k+1.
Transcript peel_and_recurse(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                            int k, PeelStats* stats = nullptr);

struct EqualizeOptions {
  // Proper coloring with chromatic-index many colors; computed by the oracle
  // when absent.
  std::optional<EdgeColoring> witness;
};

struct EqualizeResult {
  Transcript transcript;
  Family family = Family::kUnsupported;
  int chromatic_index = 0;  // -1 when the low-degree route never needed it
  PeelStats stats;
};

// Transcript between two proper colorings with at most chromatic index + 1
// colors. Throws kUnsupportedFamily outside the resolved families.
EqualizeResult equalize(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                        EqualizeOptions opts = {});

}  // namespace kempe
