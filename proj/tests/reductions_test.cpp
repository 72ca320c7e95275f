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
#include "kempe/error.hpp"
#include "kempe/fixtures.hpp"
#include "kempe/oracle.hpp"
#include "kempe/reductions.hpp"

namespace kempe {
namespace {

using testing::edges_of;

// Equalizes two random colorings drawn with at most chi + 1 colors and checks
// the transcript with the reference replay.
void roundtrip(const Graph& g, std::uint64_t seed, Family expect) {
  const auto chi = oracle::chromatic_index(g);
  const int t = chi.value + 1;
  fixtures::Rng r(seed);
  const EdgeColoring f = fixtures::random_proper_coloring(g, t, r);
  const EdgeColoring h = fixtures::random_proper_coloring(g, t, r);
  EqualizeOptions opts;
  opts.witness = chi.witness;
  const EqualizeResult res = equalize(g, f, h, opts);
  EXPECT_EQ(res.family, expect);
  if (res.chromatic_index != -1 || expect != Family::kLowDegree) {
    EXPECT_EQ(res.chromatic_index, chi.value);
  }
  EXPECT_EQ(testing::ref_replay(g, f, res.transcript, t), h.colors());
}

TEST(Reductions, Classify) {
  EXPECT_EQ(classify(fixtures::complete_graph(4), 3), Family::kLowDegree);
  EXPECT_EQ(classify(fixtures::octahedron(), 4), Family::kDelta4Class1);
  EXPECT_EQ(classify(fixtures::complete_graph(5), 5), Family::kDelta4Class2);
  EXPECT_EQ(classify(fixtures::overfull_delta5(), 6), Family::kDelta5Class2);
  EXPECT_EQ(classify(fixtures::complete_graph(6), 5), Family::kUnsupported);
  EXPECT_EQ(classify(fixtures::random_acyclic_high(12, 6, 3), 6), Family::kHighForest);
  EXPECT_EQ(family_name(Family::kUnsupported), "unsupported");
}

TEST(Reductions, CompleteSixIsUnsupported) {
  const Graph g = fixtures::complete_graph(6);
  fixtures::Rng r(1);
  const EdgeColoring f = fixtures::random_proper_coloring(g, 6, r);
  try {
    equalize(g, f, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedFamily);
  }
}

TEST(Reductions, PaletteAboveChiPlusOne) {
  const Graph g = fixtures::octahedron();
  EdgeColoring wide = fixtures::figure1_pair().first;
  wide.set_palette(6);
  wide[0] = 6;
  try {
    equalize(g, wide, wide);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPaletteMismatch);
  }
}

TEST(Reductions, MaximalizeTopClass) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = fixtures::random_graph(10, 0.4, rng());
    if (g.edge_count() == 0) continue;
    const int top = g.max_degree() + 1;
    fixtures::Rng r(rng());
    const EdgeColoring h = fixtures::random_proper_coloring(g, top, r);
    const TransformResult res = maximalize_top_class(g, h, top);
    const auto es = edges_of(g);
    ASSERT_EQ(testing::ref_replay(g, h, res.transcript, top), res.coloring.colors());
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (res.coloring.colors()[i] == top) continue;
      bool blocked = false;
      for (std::size_t j = 0; j < es.size(); ++j) {
        const bool touch = es[i].first == es[j].first || es[i].first == es[j].second ||
                           es[i].second == es[j].first || es[i].second == es[j].second;
        blocked |= touch && res.coloring.colors()[j] == top;
      }
      ASSERT_TRUE(blocked) << "edge " << i << " could still join the top class";
    }
  }
}

TEST(Reductions, Families) {
  roundtrip(fixtures::random_cubic_class1(10, 4).graph, 1, Family::kLowDegree);
  roundtrip(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), 2, Family::kLowDegree);
  roundtrip(fixtures::octahedron(), 3, Family::kDelta4Class1);
  roundtrip(fixtures::complete_graph(5), 4, Family::kDelta4Class2);
  roundtrip(fixtures::overfull_delta5(), 5, Family::kDelta5Class2);
  roundtrip(fixtures::random_acyclic_high(12, 6, 3), 6, Family::kHighForest);
}

TEST(ReductionsProperty, RandomSmallGraphs) {
  std::mt19937_64 rng(92);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    const Graph g = fixtures::random_graph(7 + static_cast<int>(rng() % 4), 0.45, rng());
    if (g.edge_count() == 0) continue;
    const auto chi = oracle::chromatic_index(g);
    const Family fam = classify(g, chi.value);
    if (fam == Family::kUnsupported) continue;
    roundtrip(g, rng(), fam);
    ++done;
  }
  EXPECT_GE(done, 30);
}

}  // namespace
}  // namespace kempe
