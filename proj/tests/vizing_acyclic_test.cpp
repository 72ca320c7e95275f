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

#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"
#include "kempe/acyclic.hpp"
#include "kempe/error.hpp"
#include "kempe/fixtures.hpp"
#include "kempe/vizing.hpp"

namespace kempe {
namespace {

using testing::ref_replay;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(Vizing, RejectsSmallPalette) {
  const Graph g = fixtures::octahedron();
  fixtures::Rng r(1);
  const EdgeColoring f = fixtures::random_proper_coloring(g, 5, r);
  EXPECT_EQ(code_of([&] { reduce_to_delta_plus_one(g, f); }), ErrorCode::kPaletteTooSmall);
}

TEST(Vizing, CompleteGraphFromWidePalette) {
  const Graph g = fixtures::complete_graph(7);
  fixtures::Rng r(2);
  const EdgeColoring f = fixtures::random_proper_coloring(g, 11, r);
  const TransformResult res = reduce_to_delta_plus_one(g, f);
  EXPECT_EQ(res.coloring.palette(), 7);
  EXPECT_LE(max_used_color(res.coloring), 7);
  EXPECT_EQ(ref_replay(g, f, res.transcript, 11), res.coloring.colors());
}

// Random graphs: the transcript replays under the reference to a proper
// (max degree + 1)-coloring, never leaving the starting palette.
TEST(VizingProperty, RandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 10);
    const Graph g = fixtures::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng());
    if (g.edge_count() == 0) continue;
    const int t = g.max_degree() + 2 + static_cast<int>(rng() % 3);
    fixtures::Rng r(rng());
    const EdgeColoring f = fixtures::random_proper_coloring(g, t, r);
    const TransformResult res = reduce_to_delta_plus_one(g, f);
    const ref::Colors end = ref_replay(g, f, res.transcript, t);
    ASSERT_EQ(end, res.coloring.colors());
    ASSERT_TRUE(ref::proper(testing::edges_of(g), end, g.max_degree() + 1));
  }
}

TEST(Acyclic, RejectsCyclicCore) {
  const Graph g = fixtures::octahedron();
  fixtures::Rng r(1);
  const EdgeColoring f = fixtures::random_proper_coloring(g, 5, r);
  EXPECT_EQ(code_of([&] { acyclic_reduce(g, f); }), ErrorCode::kMaxDegreeSubgraphCyclic);
}

TEST(Acyclic, RejectsWrongPalette) {
  const Graph g = fixtures::random_acyclic_high(10, 4, 1);
  fixtures::Rng r(1);
  const EdgeColoring f = fixtures::random_proper_coloring(g, 6, r);
  EXPECT_EQ(code_of([&] { acyclic_reduce(g, f); }), ErrorCode::kPaletteMismatch);
}

TEST(Acyclic, StarNeedsNoMoves) {
  const Graph g(4, {{1, 2}, {1, 3}, {1, 4}});
  const EdgeColoring f(4, {1, 2, 3});
  const TransformResult res = acyclic_reduce(g, f);
  EXPECT_TRUE(res.transcript.empty());
  EXPECT_EQ(res.coloring.palette(), 3);
}

// The top class shrinks every round and the reference replay lands on a
// proper max-degree coloring.
TEST(AcyclicProperty, StrictDecrease) {
  std::mt19937_64 rng(41);
  std::size_t moves = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int delta = 3 + static_cast<int>(rng() % 4);
    const int n = delta + 2 + static_cast<int>(rng() % 12);
    const Graph g = fixtures::random_acyclic_high(n, delta, rng());
    fixtures::Rng r(rng());
    const EdgeColoring f = fixtures::random_proper_coloring(g, delta + 1, r);
    AcyclicStats stats;
    const TransformResult res = acyclic_reduce(g, f, &stats);
    ASSERT_FALSE(stats.top_counts.empty());
    for (std::size_t i = 1; i < stats.top_counts.size(); ++i) {
      ASSERT_LT(stats.top_counts[i], stats.top_counts[i - 1]);
    }
    ASSERT_EQ(stats.top_counts.back(), 0U);
    const ref::Colors end = ref_replay(g, f, res.transcript, delta + 1);
    ASSERT_EQ(end, res.coloring.colors());
    ASSERT_TRUE(ref::proper(testing::edges_of(g), end, delta));
    moves += res.transcript.size();
  }
  EXPECT_GT(moves, 80U);
}

}  // namespace
}  // namespace kempe
