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
#include "kempe/io.hpp"

namespace kempe {
namespace {

using namespace io;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(Graph, RejectsLoopsAndParallelEdges) {
  EXPECT_EQ(code_of([] { Graph(3, {{1, 1}}); }), ErrorCode::kInvalidGraph);
  EXPECT_EQ(code_of([] { Graph(3, {{1, 2}, {2, 1}}); }), ErrorCode::kInvalidGraph);
  EXPECT_EQ(code_of([] { Graph(3, {{1, 4}}); }), ErrorCode::kInvalidGraph);
}

TEST(Graph, DegreesAndLookup) {
  const Graph g(4, {{1, 2}, {2, 3}, {2, 4}});
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.find_edge(3, 2), 1);
  EXPECT_FALSE(g.find_edge(1, 3));
  EXPECT_TRUE(fixtures::octahedron().is_regular(4));
}

TEST(Io, GraphRoundTrip) {
  const Graph g = fixtures::octahedron();
  const std::string text = format_graph(g, "oct");
  EXPECT_EQ(text.rfind("c oct\n", 0), 0U);
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(format_graph(parse_graph(text), "oct"), text);
}

TEST(Io, GraphParseErrors) {
  EXPECT_EQ(code_of([] { parse_graph("e 1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("p edge 2 2\ne 1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("p edge 2 1\ne 1 x\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("p edge 2 1\ne 2 1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("p edge 2 1\ne 1 3\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("p edge 3 2\ne 1 2\ne 1 2\n"); }), ErrorCode::kInvalidGraph);
}

TEST(Io, ColoringRoundTripAndValidation) {
  const Graph g(3, {{1, 2}, {2, 3}, {1, 3}});
  const EdgeColoring f = parse_coloring(g, "t 3\ne 2 3 2\ne 1 2 1\ne 1 3 3\n");
  EXPECT_EQ(f.palette(), 3);
  EXPECT_EQ(f.colors(), (std::vector<Color>{1, 2, 3}));
  EXPECT_EQ(format_coloring(g, f), "t 3\ne 1 2 1\ne 2 3 2\ne 1 3 3\n");
  EXPECT_EQ(code_of([&] { parse_coloring(g, "t 3\ne 1 2 1\ne 2 3 2\n"); }),
            ErrorCode::kMissingEdgeColor);
  EXPECT_EQ(code_of([&] { parse_coloring(g, "t 2\ne 1 2 1\ne 2 3 2\ne 1 3 3\n"); }),
            ErrorCode::kColorOutOfRange);
  EXPECT_EQ(code_of([&] { parse_coloring(g, "t 3\ne 1 2 1\ne 2 3 1\ne 1 3 3\n"); }),
            ErrorCode::kOk);  // parsing does not demand properness
}

TEST(Io, TranscriptRoundTrip) {
  const Graph g(3, {{1, 2}, {2, 3}, {1, 3}});
  Transcript tr;
  tr.push({1, 2, 0}, "window");
  tr.push({3, 4, 2});
  const std::string text = format_transcript(g, tr, "demo");
  EXPECT_EQ(text, "# demo\nK 1 2 1 2\twindow\nK 3 4 1 3\n");
  const Transcript back = parse_transcript(g, text);
  EXPECT_EQ(back, tr);
  EXPECT_EQ(back.tag(0), "window");
  EXPECT_EQ(code_of([&] { parse_transcript(g, "K 1 2 1 4\n"); }), ErrorCode::kParse);
}

// Properness and bicolored components agree with the reference on random
// (often improper) colorings.
TEST(GraphProperty, ProperAndComponentsMatchReference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = fixtures::random_graph(7, 0.45, rng());
    if (g.edge_count() == 0) continue;
    std::uniform_int_distribution<Color> pick(1, 4);
    EdgeColoring f(4, static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) f[e] = pick(rng);
    const auto es = testing::edges_of(g);
    ASSERT_EQ(is_proper(g, f), ref::proper(es, f.colors(), 4));
    if (!is_proper(g, f)) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (Color b = 1; b <= 4; ++b) {
        if (b == f[e]) continue;
        auto comp = component_of_edge(g, f, f[e], b, e);
        std::vector<std::size_t> got(comp.edges.begin(), comp.edges.end());
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, ref::component(es, f.colors(), f[e], b, static_cast<std::size_t>(e)));
      }
    }
  }
}

}  // namespace
}  // namespace kempe
