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

#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/engine.hpp"
#include "kempe/graph.hpp"

namespace kempe::oracle {

struct ChromaticIndex {
  int value = 0;
  EdgeColoring witness;
};

// Exact chromatic index by backtracking. node_budget bounds the search tree
// (kBudgetExceeded when exhausted).
ChromaticIndex chromatic_index(const Graph& g, std::uint64_t node_budget = 50'000'000);

struct KempeClassReport {
  int palette = 0;
  std::uint64_t total = 0;
  std::size_t class_count = 0;
  std::vector<EdgeColoring> representatives;  // smallest coloring of each class
  std::vector<std::uint64_t> sizes;
  bool truncated = false;
  // Class id of every enumerated coloring, in enumeration order.
  std::vector<std::uint32_t> class_of;
};

struct OracleOptions {
  std::uint64_t state_cap = 5'000'000;
  int jobs = 1;
};

// Partition of all proper t-colorings of g into Kempe classes.
KempeClassReport kempe_classes(const Graph& g, int t, OracleOptions opts = {});

struct SameClass {
  bool same = false;
  std::optional<Transcript> transcript;  // shortest, when same
};

// Bidirectional breadth-first search between f and h; throws kBudgetExceeded
// once both sides together hold opts.state_cap states.
SameClass same_class(const Graph& g, int t, const EdgeColoring& f, const EdgeColoring& h,
                     OracleOptions opts = {});

// Every proper t-coloring, ordered lexicographically by edge id.
std::vector<EdgeColoring> enumerate_colorings(const Graph& g, int t,
                                              std::uint64_t cap = 5'000'000);

// Enumerates each Kempe move available at f once per distinct component.
template <typename F>
void for_each_kempe_move(const Graph& g, const EdgeColoring& f, int t, F&& visit);

}  // namespace kempe::oracle

#include "kempe/oracle_inl.hpp"
