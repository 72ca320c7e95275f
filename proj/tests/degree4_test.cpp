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
#include "kempe/degree4.hpp"
#include "kempe/error.hpp"
#include "kempe/fixtures.hpp"
#include "kempe/oracle.hpp"

namespace kempe {
namespace {

using testing::edges_of;

// Max degree 4, not regular, Class 1.
std::vector<Graph> small_fixtures() {
  std::vector<std::pair<Vertex, Vertex>> oct = fixtures::octahedron().pairs();
  oct.pop_back();
  return {
      Graph(6, oct),
      Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}}),
      Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}),
  };
}

// 4-regular Class 1 graph with random edges removed; the witness restricts.
fixtures::Witnessed thinned(int n, std::uint64_t seed, double keep) {
  const auto w = fixtures::random_regular4_class1(n, seed);
  std::mt19937_64 rng(seed ^ 0xabc);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Color> colors;
  for (EdgeId e = 0; e < w.graph.edge_count(); ++e) {
    if (e == 0 || std::uniform_real_distribution<>(0, 1)(rng) < keep) {
      pairs.emplace_back(w.graph.edge(e).u, w.graph.edge(e).v);
      colors.push_back(w.witness[e]);
    }
  }
  return {Graph(n, pairs), EdgeColoring(4, colors)};
}

TEST(Degree4, TowerShape) {
  for (const Graph& g : small_fixtures()) {
    const DoublingTower tower = build_tower(g);
    ASSERT_GE(tower.height(), 2U);
    EXPECT_EQ(tower.levels.front(), g);
    EXPECT_TRUE(tower.top().is_regular(4));
    for (std::size_t i = 0; i + 1 < tower.height(); ++i) {
      const Graph& lo = tower.levels[i];
      const Graph& hi = tower.levels[i + 1];
      EXPECT_EQ(hi.vertex_count(), 2 * lo.vertex_count());
      for (EdgeId e = 0; e < lo.edge_count(); ++e) {
        EXPECT_EQ(hi.edge(e).u, lo.edge(e).u);
        EXPECT_EQ(hi.edge(e + lo.edge_count()).u, lo.edge(e).u + lo.vertex_count());
      }
      for (Vertex x = 1; x <= lo.vertex_count(); ++x) {
        const EdgeId j = tower.joining[i][static_cast<std::size_t>(x)];
        EXPECT_EQ(j >= 0, lo.degree(x) < 4);
        if (j >= 0) {
          EXPECT_EQ(hi.edge(j).u, x);
          EXPECT_EQ(hi.edge(j).v, x + lo.vertex_count());
        }
      }
    }
  }
}

TEST(Degree4, LiftIsProperAndRestricts) {
  for (const Graph& g : small_fixtures()) {
    const DoublingTower tower = build_tower(g);
    fixtures::Rng r(5);
    EdgeColoring f = fixtures::random_proper_coloring(g, 5, r);
    for (std::size_t level = 0; level + 1 < tower.height(); ++level) {
      const EdgeColoring big = lift_coloring(tower, level, f);
      ASSERT_TRUE(ref::proper(edges_of(tower.levels[level + 1]), big.colors(), 5));
      for (EdgeId e = 0; e < tower.levels[level].edge_count(); ++e) {
        ASSERT_EQ(big[e], f[e]);
        ASSERT_EQ(big[e + tower.levels[level].edge_count()], f[e]);
      }
      f = big;
    }
  }
}

TEST(Degree4, Preconditions) {
  const Graph k6 = fixtures::complete_graph(6);
  fixtures::Rng r(1);
  const EdgeColoring f = fixtures::random_proper_coloring(k6, 5, r);
  try {
    transform_delta4(k6, f, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongMaxDegree);
  }
  const Graph g = small_fixtures()[1];
  const EdgeColoring h = fixtures::random_proper_coloring(g, 5, r);
  EdgeColoring bad = h;
  bad[0] = 5;
  bad[1] = 5;
  try {
    transform_delta4(g, h, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTargetNotProper4);
  }
}

TEST(Degree4, FixturesFromWidePalettes) {
  for (const Graph& g : small_fixtures()) {
    const auto chi = oracle::chromatic_index(g);
    ASSERT_EQ(chi.value, 4);
    for (int t : {5, 6, 7}) {
      fixtures::Rng r(static_cast<std::uint64_t>(t));
      const EdgeColoring f = fixtures::random_proper_coloring(g, t, r);
      Delta4Stats stats;
      const TransformResult res = transform_delta4(g, f, chi.witness, &stats);
      EXPECT_EQ(testing::ref_replay(g, f, res.transcript, t), chi.witness.colors());
      EXPECT_GE(stats.tower_height, 2U);
      EXPECT_GT(stats.projection.invariant_checks, 0U);
    }
  }
}

TEST(Degree4Property, ThinnedRegularGraphs) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 6 + 2 * static_cast<int>(rng() % 5);
    const auto w = thinned(n, rng(), 0.75);
    if (w.graph.max_degree() != 4 || w.graph.is_regular(4)) continue;
    fixtures::Rng r(rng());
    const int t = 4 + static_cast<int>(rng() % 3);
    const EdgeColoring f = fixtures::random_proper_coloring(w.graph, t, r);
    const EdgeColoring h = fixtures::random_kempe_walk(w.graph, w.witness, r, 10);
    const TransformResult res = transform_delta4(w.graph, f, h);
    ASSERT_EQ(testing::ref_replay(w.graph, f, res.transcript, std::max(t, 5)), h.colors());
  }
}

}  // namespace
}  // namespace kempe
