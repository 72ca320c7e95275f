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

namespace kempe {
namespace {

using testing::edges_of;

std::vector<std::size_t> sorted_sizes(const oracle::KempeClassReport& r) {
  std::vector<std::size_t> out(r.sizes.begin(), r.sizes.end());
  std::sort(out.rbegin(), out.rend());
  return out;
}

TEST(Oracle, OctahedronClassesMatchReference) {
  const Graph g = fixtures::octahedron();
  for (int t : {4, 5}) {
    const auto want = ref::classes(edges_of(g), t);
    const auto got = oracle::kempe_classes(g, t);
    EXPECT_FALSE(got.truncated);
    EXPECT_EQ(got.total, want.total) << "t=" << t;
    EXPECT_EQ(sorted_sizes(got), want.sizes) << "t=" << t;
  }
}

TEST(Oracle, ParallelJobsAgree) {
  const Graph g = fixtures::octahedron();
  oracle::OracleOptions two;
  two.jobs = 2;
  const auto a = oracle::kempe_classes(g, 4);
  const auto b = oracle::kempe_classes(g, 4, two);
  EXPECT_EQ(a.class_of, b.class_of);
  EXPECT_EQ(a.representatives, b.representatives);
}

TEST(Oracle, StateCapTruncates) {
  const Graph g = fixtures::octahedron();
  oracle::OracleOptions tiny;
  tiny.state_cap = 10;
  const auto report = oracle::kempe_classes(g, 5, tiny);
  EXPECT_TRUE(report.truncated);
  EXPECT_EQ(report.class_count, 0U);
  const auto [f, h] = fixtures::figure1_pair();
  EdgeColoring f5 = f, h5 = h;
  f5.set_palette(5);
  h5.set_palette(5);
  try {
    oracle::same_class(g, 5, f5, h5, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Oracle, FigureOnePair) {
  const Graph g = fixtures::octahedron();
  const auto [f, h] = fixtures::figure1_pair();
  const auto c4 = ref::classes(edges_of(g), 4);
  EXPECT_NE(c4.id.at(f.colors()), c4.id.at(h.colors()));
  EXPECT_FALSE(oracle::same_class(g, 4, f, h).same);
  EdgeColoring f5 = f, h5 = h;
  f5.set_palette(5);
  h5.set_palette(5);
  const auto s = oracle::same_class(g, 5, f5, h5);
  ASSERT_TRUE(s.same);
  ASSERT_TRUE(s.transcript);
  EXPECT_EQ(testing::ref_replay(g, f5, *s.transcript, 5), h.colors());
  EXPECT_EQ(static_cast<int>(s.transcript->size()),
            ref::distance(edges_of(g), 5, f.colors(), h.colors()));
}

// Random small graphs: chromatic index, coloring counts and class sizes
// agree with brute force.
TEST(OracleProperty, RandomSmallGraphs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = fixtures::random_graph(n, 0.6, rng());
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    const auto es = edges_of(g);
    const auto chi = oracle::chromatic_index(g);
    ASSERT_EQ(chi.value, ref::chromatic_index(es));
    ASSERT_TRUE(ref::proper(es, chi.witness.colors(), chi.value));
    for (int t = chi.value; t <= chi.value + 1; ++t) {
      const auto want = ref::classes(es, t);
      const auto got = oracle::kempe_classes(g, t);
      ASSERT_EQ(got.total, want.total);
      ASSERT_EQ(sorted_sizes(got), want.sizes);
      ASSERT_EQ(oracle::enumerate_colorings(g, t).size(), want.total);
    }
  }
}

// same_class agrees with the reference partition and its witness replays.
TEST(OracleProperty, SameClassMatchesPartition) {
  const Graph g = fixtures::octahedron();
  const auto want = ref::classes(edges_of(g), 4);
  const auto all = oracle::enumerate_colorings(g, 4);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const EdgeColoring& f = all[rng() % all.size()];
    const EdgeColoring& h = all[rng() % all.size()];
    const auto s = oracle::same_class(g, 4, f, h);
    ASSERT_EQ(s.same, want.id.at(f.colors()) == want.id.at(h.colors()));
    if (s.same) {
      ASSERT_EQ(testing::ref_replay(g, f, *s.transcript, 4), h.colors());
      ASSERT_EQ(static_cast<int>(s.transcript->size()),
                ref::distance(edges_of(g), 4, f.colors(), h.colors()));
    }
  }
}

}  // namespace
}  // namespace kempe
