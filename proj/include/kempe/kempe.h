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

#ifndef KEMPE_KEMPE_H_
#define KEMPE_KEMPE_H_

/* C interface to the kempe library. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a kc_status; on failure kc_last_error() describes the problem for
 * the calling thread. Strings returned through char** are released with
 * kc_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KC_API __declspec(dllexport)
#else
#define KC_API __attribute__((visibility("default")))
#endif

typedef struct kc_graph kc_graph;
typedef struct kc_coloring kc_coloring;
typedef struct kc_transcript kc_transcript;

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_PARSE,
  KC_ERR_INVALID_GRAPH,
  KC_ERR_MISSING_EDGE_COLOR,
  KC_ERR_COLOR_OUT_OF_RANGE,
  KC_ERR_NOT_PROPER,
  KC_ERR_EQUAL_COLORS,
  KC_ERR_REP_EDGE_NOT_BICOLORED,
  KC_ERR_EDGE_NOT_INCIDENT,
  KC_ERR_NOT_SATURATED,
  KC_ERR_INVALID_MOVE,
  KC_ERR_PALETTE_TOO_SMALL,
  KC_ERR_PALETTE_MISMATCH,
  KC_ERR_MAX_DEGREE_SUBGRAPH_CYCLIC,
  KC_ERR_PRECONDITION_VIOLATED,
  KC_ERR_BAD_WINDOW,
  KC_ERR_DISTANCE_CONDITION_VIOLATED,
  KC_ERR_NOT_REGULAR4,
  KC_ERR_TARGET_NOT_PROPER4,
  KC_ERR_CLAIM_VIOLATED,
  KC_ERR_WRONG_MAX_DEGREE,
  KC_ERR_NO_FREE_LOW_COLOR,
  KC_ERR_PROJECTION_MISMATCH,
  KC_ERR_SEARCH_BUDGET_EXCEEDED,
  KC_ERR_BUDGET_EXCEEDED,
  KC_ERR_UNSUPPORTED_FAMILY,
  KC_ERR_INFEASIBLE_N,
  KC_ERR_IO,
  KC_ERR_TERMINAL_MISMATCH,
  KC_ERR_INVALID_ARGUMENT,
  KC_ERR_INTERNAL
} kc_status;

typedef enum kc_mode {
  KC_MODE_AUTO = 0,
  KC_MODE_VIZING,
  KC_MODE_ACYCLIC,
  KC_MODE_REGULAR4,
  KC_MODE_DELTA4
} kc_mode;

/* snake_case name of a status, e.g. "unsupported_family". */
KC_API const char* kc_status_name(kc_status status);
/* Detail message of the last failure on this thread ("" when none). */
KC_API const char* kc_last_error(void);
KC_API void kc_string_free(char* s);

/* Graphs. */
KC_API kc_status kc_graph_parse(const char* text, kc_graph** out);
KC_API kc_status kc_graph_read(const char* path, kc_graph** out);
KC_API kc_status kc_graph_format(const kc_graph* g, const char* comment, char** out);
KC_API int kc_graph_vertex_count(const kc_graph* g);
KC_API int kc_graph_edge_count(const kc_graph* g);
KC_API int kc_graph_max_degree(const kc_graph* g);
/* Endpoints of edge e (0-based edge id, 1-based vertices). */
KC_API kc_status kc_graph_edge(const kc_graph* g, int e, int* u, int* v);
KC_API void kc_graph_free(kc_graph* g);

/* Colorings are tied to the graph they were parsed against. */
KC_API kc_status kc_coloring_parse(const kc_graph* g, const char* text, kc_coloring** out);
KC_API kc_status kc_coloring_read(const kc_graph* g, const char* path, kc_coloring** out);
KC_API kc_status kc_coloring_format(const kc_graph* g, const kc_coloring* f, char** out);
KC_API int kc_coloring_palette(const kc_coloring* f);
KC_API int kc_coloring_color(const kc_coloring* f, int e);
/* Rewrites the palette header; fails if a used color exceeds it. */
KC_API kc_status kc_coloring_set_palette(kc_coloring* f, int palette);
/* *proper = 1 when f is a proper coloring of g. */
KC_API kc_status kc_coloring_is_proper(const kc_graph* g, const kc_coloring* f, int* proper);
KC_API int kc_coloring_equal(const kc_coloring* a, const kc_coloring* b);
KC_API void kc_coloring_free(kc_coloring* f);

/* Transcripts. */
KC_API kc_status kc_transcript_parse(const kc_graph* g, const char* text, kc_transcript** out);
KC_API kc_status kc_transcript_read(const kc_graph* g, const char* path, kc_transcript** out);
KC_API kc_status kc_transcript_format(const kc_graph* g, const kc_transcript* t,
                                      const char* comment, char** out);
KC_API size_t kc_transcript_size(const kc_transcript* t);
KC_API void kc_transcript_free(kc_transcript* t);

/* Transcript from `from` toward `to`. For KC_MODE_VIZING and KC_MODE_ACYCLIC
 * `to` may be NULL: the transcript then ends at the reduced coloring. When
 * `to` is given and the terminal coloring differs, KC_ERR_TERMINAL_MISMATCH is
 * returned together with the transcript and terminal coloring. `terminal` may
 * be NULL. */
KC_API kc_status kc_transform(const kc_graph* g, const kc_coloring* from, const kc_coloring* to,
                              kc_mode mode, kc_transcript** transcript, kc_coloring** terminal);

/* Applies t to f. check_every_step = 1 verifies properness after each move;
 * the failing move index is reported through kc_last_error. */
KC_API kc_status kc_apply(const kc_graph* g, const kc_coloring* f, const kc_transcript* t,
                          int check_every_step, kc_coloring** out);

/* Oracle. */
KC_API kc_status kc_oracle_chi(const kc_graph* g, int* chi, kc_coloring** witness);
/* JSON summary of the Kempe classes of all proper t-colorings. */
KC_API kc_status kc_oracle_classes(const kc_graph* g, int t, int jobs, uint64_t state_cap,
                                   char** json);
/* *same = 1 when f and h are Kempe equivalent at palette t; a shortest
 * transcript is returned through path (may be NULL). */
KC_API kc_status kc_oracle_same_class(const kc_graph* g, int t, const kc_coloring* f,
                                      const kc_coloring* h, int jobs, uint64_t state_cap,
                                      int* same, kc_transcript** path);

/* Fixtures. */
KC_API kc_status kc_gen_octahedron(kc_graph** out);
KC_API kc_status kc_gen_figure1(kc_coloring** f, kc_coloring** g);
KC_API kc_status kc_gen_regular4(int n, uint64_t seed, kc_graph** out, kc_coloring** witness);
KC_API kc_status kc_gen_overfull5(kc_graph** out);
KC_API kc_status kc_gen_coloring(const kc_graph* g, int t, uint64_t seed, kc_coloring** out);

#ifdef __cplusplus
}
#endif

#endif  // KEMPE_KEMPE_H_
