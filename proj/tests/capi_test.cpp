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

// Exercises the shared library through the C header only.

#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "kempe/kempe.h"

namespace {

const char* kTriangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

std::string take(char* s) {
  std::string out(s);
  kc_string_free(s);
  return out;
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(kc_status_name(KC_OK), "ok");
  EXPECT_STREQ(kc_status_name(KC_ERR_UNSUPPORTED_FAMILY), "unsupported_family");
  EXPECT_STREQ(kc_status_name(KC_ERR_NOT_PROPER), "not_proper");
  EXPECT_STREQ(kc_status_name(KC_ERR_TERMINAL_MISMATCH), "terminal_mismatch");
}

TEST(CApi, ParseErrorsSetLastError) {
  kc_graph* g = nullptr;
  EXPECT_EQ(kc_graph_parse("p edge 2 1\ne 1 x\n", &g), KC_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(kc_last_error()), "");
  EXPECT_EQ(kc_graph_parse(nullptr, &g), KC_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(kc_graph_parse(kTriangle, &g), KC_OK);
  EXPECT_STREQ(kc_last_error(), "");
  kc_coloring* f = nullptr;
  EXPECT_EQ(kc_coloring_parse(g, "t 2\ne 1 2 1\ne 2 3 2\ne 1 3 3\n", &f), KC_ERR_COLOR_OUT_OF_RANGE);
  EXPECT_EQ(kc_coloring_parse(g, "t 3\ne 1 2 1\ne 2 3 2\n", &f), KC_ERR_MISSING_EDGE_COLOR);
  kc_graph_free(g);
}

TEST(CApi, GraphAndColoringAccessors) {
  kc_graph* g = nullptr;
  ASSERT_EQ(kc_graph_parse(kTriangle, &g), KC_OK);
  EXPECT_EQ(kc_graph_vertex_count(g), 3);
  EXPECT_EQ(kc_graph_edge_count(g), 3);
  EXPECT_EQ(kc_graph_max_degree(g), 2);
  int u = 0, v = 0;
  ASSERT_EQ(kc_graph_edge(g, 2, &u, &v), KC_OK);
  EXPECT_EQ(u, 1);
  EXPECT_EQ(v, 3);
  EXPECT_EQ(kc_graph_edge(g, 3, &u, &v), KC_ERR_INVALID_ARGUMENT);
  kc_coloring* f = nullptr;
  ASSERT_EQ(kc_coloring_parse(g, "t 3\ne 1 2 1\ne 2 3 1\ne 1 3 3\n", &f), KC_OK);
  int proper = -1;
  ASSERT_EQ(kc_coloring_is_proper(g, f, &proper), KC_OK);
  EXPECT_EQ(proper, 0);
  EXPECT_EQ(kc_coloring_color(f, 2), 3);
  EXPECT_EQ(kc_coloring_set_palette(f, 2), KC_ERR_PALETTE_MISMATCH);
  EXPECT_EQ(kc_coloring_set_palette(f, 5), KC_OK);
  EXPECT_EQ(take([&] {
              char* s = nullptr;
              kc_coloring_format(g, f, &s);
              return s;
            }()),
            "t 5\ne 1 2 1\ne 2 3 1\ne 1 3 3\n");
  kc_coloring_free(f);
  kc_graph_free(g);
}

TEST(CApi, TransformApplyRoundTrip) {
  kc_graph* g = nullptr;
  kc_coloring* w = nullptr;
  ASSERT_EQ(kc_gen_regular4(12, 3, &g, &w), KC_OK);
  kc_coloring* f = nullptr;
  ASSERT_EQ(kc_gen_coloring(g, 6, 9, &f), KC_OK);
  kc_transcript* t = nullptr;
  kc_coloring* end = nullptr;
  ASSERT_EQ(kc_transform(g, f, w, KC_MODE_AUTO, &t, &end), KC_OK) << kc_last_error();
  EXPECT_EQ(kc_coloring_equal(end, w), 1);
  EXPECT_GT(kc_transcript_size(t), 0U);

  char* text = nullptr;
  ASSERT_EQ(kc_transcript_format(g, t, "demo", &text), KC_OK);
  kc_transcript* back = nullptr;
  ASSERT_EQ(kc_transcript_parse(g, text, &back), KC_OK);
  kc_string_free(text);
  kc_coloring* out = nullptr;
  ASSERT_EQ(kc_apply(g, f, back, 1, &out), KC_OK) << kc_last_error();
  EXPECT_EQ(kc_coloring_equal(out, w), 1);

  for (kc_coloring* c : {w, f, end, out}) kc_coloring_free(c);
  kc_transcript_free(t);
  kc_transcript_free(back);
  kc_graph_free(g);
}

TEST(CApi, ReductionModeMismatchStillReturnsTranscript) {
  kc_graph* g = nullptr;
  kc_coloring* w = nullptr;
  ASSERT_EQ(kc_gen_regular4(10, 4, &g, &w), KC_OK);
  kc_coloring* f = nullptr;
  ASSERT_EQ(kc_gen_coloring(g, 7, 2, &f), KC_OK);
  kc_transcript* t = nullptr;
  kc_coloring* end = nullptr;
  ASSERT_EQ(kc_transform(g, f, nullptr, KC_MODE_VIZING, &t, &end), KC_OK);
  EXPECT_LE(kc_coloring_palette(end), 7);
  kc_transcript_free(t);
  kc_coloring_free(end);
  t = nullptr;
  end = nullptr;
  EXPECT_EQ(kc_transform(g, f, w, KC_MODE_VIZING, &t, &end), KC_ERR_TERMINAL_MISMATCH);
  EXPECT_NE(t, nullptr);
  EXPECT_NE(end, nullptr);
  kc_transcript_free(t);
  kc_coloring_free(end);
  EXPECT_EQ(kc_transform(g, f, nullptr, KC_MODE_REGULAR4, &t, nullptr), KC_ERR_INVALID_ARGUMENT);
  kc_coloring_free(f);
  kc_coloring_free(w);
  kc_graph_free(g);
}

TEST(CApi, OracleCalls) {
  kc_graph* g = nullptr;
  ASSERT_EQ(kc_gen_octahedron(&g), KC_OK);
  char* json = nullptr;
  ASSERT_EQ(kc_oracle_classes(g, 4, 1, 0, &json), KC_OK);
  const auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["classes"], 2);
  EXPECT_EQ(j["colorings"], 48);
  kc_coloring* a = nullptr;
  kc_coloring* b = nullptr;
  ASSERT_EQ(kc_gen_figure1(&a, &b), KC_OK);
  int same = -1;
  kc_transcript* path = nullptr;
  ASSERT_EQ(kc_oracle_same_class(g, 4, a, b, 1, 0, &same, &path), KC_OK);
  EXPECT_EQ(same, 0);
  EXPECT_EQ(path, nullptr);
  ASSERT_EQ(kc_oracle_same_class(g, 5, a, b, 1, 0, &same, &path), KC_OK);
  EXPECT_EQ(same, 1);
  EXPECT_NE(path, nullptr);
  kc_transcript_free(path);
  int chi = 0;
  kc_coloring* wit = nullptr;
  ASSERT_EQ(kc_oracle_chi(g, &chi, &wit), KC_OK);
  EXPECT_EQ(chi, 4);
  kc_coloring_free(wit);
  kc_coloring_free(a);
  kc_coloring_free(b);
  kc_graph_free(g);
}

TEST(CApi, UnsupportedFamily) {
  kc_graph* g = nullptr;
  std::string text = "p edge 6 15\n";
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) text += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  ASSERT_EQ(kc_graph_parse(text.c_str(), &g), KC_OK);
  kc_coloring* f = nullptr;
  kc_coloring* h = nullptr;
  ASSERT_EQ(kc_gen_coloring(g, 6, 1, &f), KC_OK);
  ASSERT_EQ(kc_gen_coloring(g, 6, 2, &h), KC_OK);
  kc_transcript* t = nullptr;
  EXPECT_EQ(kc_transform(g, f, h, KC_MODE_AUTO, &t, nullptr), KC_ERR_UNSUPPORTED_FAMILY);
  EXPECT_EQ(t, nullptr);
  kc_coloring_free(f);
  kc_coloring_free(h);
  kc_graph_free(g);
}

}  // namespace
