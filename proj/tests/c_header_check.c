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

/* The public header must compile as C and link against the shared library. */

#include <stdio.h>
#include <string.h>

#include "kempe/kempe.h"

int main(void) {
  kc_graph* g = NULL;
  kc_coloring* a = NULL;
  kc_coloring* b = NULL;
  kc_transcript* t = NULL;
  kc_coloring* end = NULL;
  int proper = 0;
  if (kc_gen_octahedron(&g) != KC_OK) return 1;
  if (kc_gen_figure1(&a, &b) != KC_OK) return 1;
  if (kc_coloring_is_proper(g, a, &proper) != KC_OK || !proper) return 1;
  if (kc_transform(g, a, b, KC_MODE_REGULAR4, &t, &end) != KC_OK) return 1;
  if (!kc_coloring_equal(end, b)) return 1;
  if (strcmp(kc_status_name(KC_ERR_PARSE), "parse_error") != 0) return 1;
  printf("moves %zu\n", kc_transcript_size(t));
  kc_transcript_free(t);
  kc_coloring_free(end);
  kc_coloring_free(a);
  kc_coloring_free(b);
  kc_graph_free(g);
  return 0;
}
