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

#include <map>
#include <random>

#include "bridge.hpp"
#include "kempe/error.hpp"
#include "kempe/fixtures.hpp"
#include "kempe/regular4.hpp"
#include "planted.hpp"

namespace kempe {
namespace {

using testing::Planted;
using testing::Shape;
using testing::Tail;

std::size_t matched(const EdgeColoring& f, const EdgeColoring& h) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < f.size(); ++i) k += f.colors()[i] == 1 && h.colors()[i] == 1;
  return k;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(Regular4, Preconditions) {
  const Graph path(3, {{1, 2}, {2, 3}});
  const EdgeColoring p(5, {1, 2});
  EXPECT_EQ(code_of([&] { regular4_transform(path, p, EdgeColoring(4, {1, 2})); }),
            ErrorCode::kNotRegular4);
  const Graph g = fixtures::octahedron();
  const auto [f, h] = fixtures::figure1_pair();
  EdgeColoring h5 = h;
  h5.set_palette(5);
  EXPECT_EQ(code_of([&] { regular4_transform(g, f, h5); }), ErrorCode::kOk);
  h5[0] = 5;  // still proper, but uses a fifth color
  EXPECT_EQ(code_of([&] { regular4_transform(g, f, h5); }), ErrorCode::kTargetNotProper4);
}

TEST(Regular4, FigureOnePairThroughFiveColors) {
  const Graph g = fixtures::octahedron();
  const auto [f, h] = fixtures::figure1_pair();
  Regular4Stats stats;
  const TransformResult res = regular4_transform(g, f, h, &stats);
  EXPECT_TRUE(res.coloring.same_colors(h));
  EXPECT_EQ(testing::ref_replay(g, f, res.transcript, 5), h.colors());
  EXPECT_EQ(stats.monovariant_violations, 0U);
}

// Random instances: the matched count rises strictly between outer
// iterations and the reference replay ends exactly at the target.
TEST(Regular4Property, RandomTransforms) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + 2 * static_cast<int>(rng() % 10);
    const auto w = fixtures::random_regular4_class1(n, rng());
    fixtures::Rng r(rng());
    const int t = 4 + static_cast<int>(rng() % 2);
    EdgeColoring f = fixtures::random_proper_coloring(w.graph, t, r);
    f.set_palette(5);
    const EdgeColoring h = fixtures::random_proper_coloring(w.graph, 4, r);
    Regular4Stats stats;
    const TransformResult res = regular4_transform(w.graph, f, h, &stats);
    ASSERT_EQ(testing::ref_replay(w.graph, f, res.transcript, 5), h.colors());
    ASSERT_EQ(stats.monovariant_violations, 0U);
    ASSERT_EQ(stats.matched_trace.back(), class_size(h, 1));
    for (std::size_t i = 1; i < stats.matched_trace.size(); ++i) {
      ASSERT_GT(stats.matched_trace[i], stats.matched_trace[i - 1]);
    }
  }
}

// A single improvement from random states of random targets.
TEST(Regular4Property, ImproveFromRandomStates) {
  std::mt19937_64 rng(72);
  std::size_t runs = 0;
  while (runs < 2000) {
    const auto w = fixtures::random_regular4_class1(6 + 2 * static_cast<int>(rng() % 8), rng());
    fixtures::Rng r(rng());
    EdgeColoring f = fixtures::random_proper_coloring(w.graph, 5, r);
    const EdgeColoring h = fixtures::random_proper_coloring(w.graph, 4, r);
    std::vector<EdgeId> open;
    for (EdgeId e = 0; e < w.graph.edge_count(); ++e) {
      if (h[e] == 1 && f[e] != 1) open.push_back(e);
    }
    if (open.empty()) continue;
    const EdgeId e = open[rng() % open.size()];
    Work work(w.graph, f);
    const std::size_t before = matched(f, h);
    const std::size_t after = regular4_improve(work, h, e);
    ASSERT_GT(after, before);
    ASSERT_EQ(after, matched(work.coloring(), h));
    ASSERT_EQ(testing::ref_replay(w.graph, f, work.transcript(), 5), work.coloring().colors());
    ++runs;
  }
}

struct Combo {
  Shape shape;
  Tail u, v;
  const char* expect;  // case that must fire
};

// Two-sided configurations are rare at random; planted instances reach every
// aligned branch and both outcomes of the path claims.
TEST(Regular4Planted, EveryTwoSidedBranch) {
  const std::vector<Combo> combos = {
      {Shape::kCycle6, Tail::kEnd, Tail::kEnd, "two-side-long-cycle6"},
      {Shape::kLine, Tail::kEnd, Tail::kEnd, "two-side-long-path7"},
      {Shape::kLine, Tail::kEnd, Tail::kA34, "tail-one-a"},
      {Shape::kLine, Tail::kEnd, Tail::kB35, "tail-one-b"},
      {Shape::kLine, Tail::kEnd, Tail::kC45, "tail-one-c"},
      {Shape::kLine, Tail::kA34, Tail::kA34, "tail-two-aa"},
      {Shape::kLine, Tail::kA34, Tail::kB35, "tail-two-ab"},
      {Shape::kLine, Tail::kA34, Tail::kC45, "tail-two-ac"},
      {Shape::kLine, Tail::kB35, Tail::kA34, "tail-two-ab"},
      {Shape::kLine, Tail::kB35, Tail::kB35, "tail-two-bb"},
      {Shape::kLine, Tail::kB35, Tail::kC45, "tail-two-bc"},
      {Shape::kLine, Tail::kC45, Tail::kA34, "tail-two-ac"},
      {Shape::kLine, Tail::kC45, Tail::kB35, "tail-two-bc"},
      {Shape::kLine, Tail::kC45, Tail::kC45, "tail-two-cc"},
  };
  std::map<std::string, std::size_t> total;
  for (const Combo& c : combos) {
    std::size_t made = 0;
    std::map<std::string, std::size_t> seen;
    for (std::uint64_t s = 0; s < 400 && made < 6; ++s) {
      const bool short_claims = s % 2 == 0;
      const std::optional<Planted> p = testing::plant(c.shape, c.u, c.v, 991 + s * 7919, short_claims);
      if (!p) continue;
      ++made;
      Work work(p->graph, p->f);
      Regular4Stats stats;
      const std::size_t before = matched(p->f, p->h);
      const std::size_t after = regular4_improve(work, p->h, p->e, &stats);
      ASSERT_GT(after, before) << c.expect;
      ASSERT_EQ(testing::ref_replay(p->graph, p->f, work.transcript(), 5),
                work.coloring().colors());
      for (const auto& [k, v] : stats.case_counts) seen[k] += v, total[k] += v;
    }
    ASSERT_GT(made, 0U) << c.expect;
    EXPECT_GT(seen[c.expect], 0U) << c.expect;
  }
  EXPECT_GT(total["claim-held"], 0U);
  EXPECT_GT(total["claim-escape"], 0U);
}

}  // namespace
}  // namespace kempe
