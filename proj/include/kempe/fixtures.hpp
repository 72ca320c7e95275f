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
#include <random>
#include <utility>

#include "kempe/graph.hpp"

namespace kempe::fixtures {

using Rng = std::mt19937_64;

struct Witnessed {
  Graph graph;
  EdgeColoring witness;
};

// K_{2,2,2} on x1..x6.
Graph octahedron();
// Two proper 4-colorings of the octahedron in distinct Kempe classes at
// palette 4 (smallest representatives of the first two classes).
std::pair<EdgeColoring, EdgeColoring> figure1_pair();

// Union of two edge-disjoint Hamiltonian cycles on n (even, >= 6) vertices;
// witness colors the cycles 1,2 and 3,4 alternately. kInfeasibleN otherwise.
Witnessed random_regular4_class1(int n, std::uint64_t seed);
// Hamiltonian cycle plus a disjoint perfect matching; witness 3-coloring.
Witnessed random_cubic_class1(int n, std::uint64_t seed);

// K7 minus the triangle {1,2,3} and the matching {4-5, 6-7}.
Graph overfull_delta5();

Graph complete_graph(int n);
Graph random_graph(int n, double p, std::uint64_t seed);
// Random graph with max degree exactly delta whose max-degree vertices induce
// a forest.
Graph random_acyclic_high(int n, int delta, std::uint64_t seed);

// Uniformly shuffled backtracking, then `walk` random Kempe moves.
EdgeColoring random_proper_coloring(const Graph& g, int t, Rng& rng, int walk = 20);
EdgeColoring random_kempe_walk(const Graph& g, const EdgeColoring& f, Rng& rng, int steps);

}  // namespace kempe::fixtures
