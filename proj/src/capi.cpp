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

#include "kempe/kempe.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "kempe/acyclic.hpp"
#include "kempe/fixtures.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"
#include "kempe/reductions.hpp"

struct kc_graph {
  kempe::Graph g;
};
struct kc_coloring {
  kempe::EdgeColoring f;
};
struct kc_transcript {
  kempe::Transcript t;
};

namespace {

using kempe::ErrorCode;

static_assert(static_cast<int>(ErrorCode::kIo) == KC_ERR_IO);
static_assert(static_cast<int>(ErrorCode::kUnsupportedFamily) == KC_ERR_UNSUPPORTED_FAMILY);
static_assert(static_cast<int>(ErrorCode::kInternal) == KC_ERR_INTERNAL);

thread_local std::string last_error;

kc_status status_of(ErrorCode code) { return static_cast<kc_status>(code); }

kc_status set_error(kc_status s, std::string detail) {
  last_error = std::move(detail);
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
kc_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return KC_OK;
  } catch (const kempe::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(KC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(KC_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) kempe::fail(ErrorCode::kInvalidArgument, what);
}

void same_size(const kc_graph* g, const kc_coloring* f) {
  require(g && f, "null handle");
  if (f->f.size() != static_cast<std::size_t>(g->g.edge_count())) {
    kempe::fail(ErrorCode::kInvalidArgument, "coloring does not belong to this graph");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

using kempe::Color;
using kempe::EdgeColoring;
using kempe::Graph;
using kempe::Transcript;

// Transcript from `from` to `to` (or to the reduced coloring for the
// reduction-only modes).
Transcript run_mode(const Graph& g, const EdgeColoring& from, const EdgeColoring* to, kc_mode mode) {
  const int delta = g.max_degree();
  switch (mode) {
    case KC_MODE_VIZING:
      return kempe::reduce_to_delta_plus_one(g, from).transcript;
    case KC_MODE_ACYCLIC: {
      EdgeColoring f = from;
      if (f.palette() > delta + 1 && kempe::max_used_color(f) <= delta + 1) f.set_palette(delta + 1);
      return kempe::acyclic_reduce(g, f).transcript;
    }
    case KC_MODE_REGULAR4:
      require(to != nullptr, "regular4 mode needs a target");
      return kempe::regular4_transform(g, from, *to).transcript;
    case KC_MODE_DELTA4:
      require(to != nullptr, "delta4 mode needs a target");
      return kempe::transform_delta4(g, from, *to).transcript;
    case KC_MODE_AUTO: {
      require(to != nullptr, "auto mode needs a target");
      const int palette = std::max(from.palette(), to->palette());
      auto reduce = [&](const EdgeColoring& c, Transcript& tr) {
        EdgeColoring cur = c;
        cur.set_palette(palette);
        if (kempe::max_used_color(cur) > delta + 1) {
          auto r = kempe::reduce_to_delta_plus_one(g, cur);
          tr = std::move(r.transcript);
          cur = std::move(r.coloring);
          cur.set_palette(palette);
        }
        return cur;
      };
      Transcript head, tail;
      const EdgeColoring a = reduce(from, head);
      const EdgeColoring b = reduce(*to, tail);
      head.append(kempe::equalize(g, a, b).transcript);
      head.append(tail.reversed());
      return head;
    }
  }
  kempe::fail(ErrorCode::kInvalidArgument, "unknown mode");
}

}  // namespace

extern "C" {

const char* kc_status_name(kc_status status) {
  static thread_local std::string name;
  name = std::string(kempe::error_code_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

const char* kc_last_error(void) { return last_error.c_str(); }

void kc_string_free(char* s) { std::free(s); }

kc_status kc_graph_parse(const char* text, kc_graph** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new kc_graph{kempe::io::parse_graph(text)};
  });
}

kc_status kc_graph_read(const char* path, kc_graph** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new kc_graph{kempe::io::parse_graph(kempe::io::read_file(path))};
  });
}

kc_status kc_graph_format(const kc_graph* g, const char* comment, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = dup(kempe::io::format_graph(g->g, comment ? comment : ""));
  });
}

int kc_graph_vertex_count(const kc_graph* g) { return g ? g->g.vertex_count() : -1; }
int kc_graph_edge_count(const kc_graph* g) { return g ? g->g.edge_count() : -1; }
int kc_graph_max_degree(const kc_graph* g) { return g ? g->g.max_degree() : -1; }

kc_status kc_graph_edge(const kc_graph* g, int e, int* u, int* v) {
  return guard([&] {
    require(g && u && v, "null argument");
    require(e >= 0 && e < g->g.edge_count(), "edge id out of range");
    *u = g->g.edge(e).u;
    *v = g->g.edge(e).v;
  });
}

void kc_graph_free(kc_graph* g) { delete g; }

kc_status kc_coloring_parse(const kc_graph* g, const char* text, kc_coloring** out) {
  return guard([&] {
    require(g && text && out, "null argument");
    *out = new kc_coloring{kempe::io::parse_coloring(g->g, text)};
  });
}

kc_status kc_coloring_read(const kc_graph* g, const char* path, kc_coloring** out) {
  return guard([&] {
    require(g && path && out, "null argument");
    *out = new kc_coloring{kempe::io::parse_coloring(g->g, kempe::io::read_file(path))};
  });
}

kc_status kc_coloring_format(const kc_graph* g, const kc_coloring* f, char** out) {
  return guard([&] {
    same_size(g, f);
    require(out != nullptr, "null argument");
    *out = dup(kempe::io::format_coloring(g->g, f->f));
  });
}

int kc_coloring_palette(const kc_coloring* f) { return f ? f->f.palette() : -1; }

int kc_coloring_color(const kc_coloring* f, int e) {
  if (!f || e < 0 || static_cast<std::size_t>(e) >= f->f.size()) return -1;
  return f->f[e];
}

kc_status kc_coloring_set_palette(kc_coloring* f, int palette) {
  return guard([&] {
    require(f != nullptr, "null argument");
    if (palette < 1 || palette > 30 || kempe::max_used_color(f->f) > palette) {
      kempe::fail(ErrorCode::kPaletteMismatch, "palette " + std::to_string(palette) +
                                                   " does not cover the colors in use");
    }
    f->f.set_palette(palette);
  });
}

kc_status kc_coloring_is_proper(const kc_graph* g, const kc_coloring* f, int* proper) {
  return guard([&] {
    same_size(g, f);
    require(proper != nullptr, "null argument");
    *proper = kempe::is_proper(g->g, f->f) ? 1 : 0;
  });
}

int kc_coloring_equal(const kc_coloring* a, const kc_coloring* b) {
  return a && b && a->f.same_colors(b->f) ? 1 : 0;
}

void kc_coloring_free(kc_coloring* f) { delete f; }

kc_status kc_transcript_parse(const kc_graph* g, const char* text, kc_transcript** out) {
  return guard([&] {
    require(g && text && out, "null argument");
    *out = new kc_transcript{kempe::io::parse_transcript(g->g, text)};
  });
}

kc_status kc_transcript_read(const kc_graph* g, const char* path, kc_transcript** out) {
  return guard([&] {
    require(g && path && out, "null argument");
    *out = new kc_transcript{kempe::io::parse_transcript(g->g, kempe::io::read_file(path))};
  });
}

kc_status kc_transcript_format(const kc_graph* g, const kc_transcript* t, const char* comment,
                               char** out) {
  return guard([&] {
    require(g && t && out, "null argument");
    *out = dup(kempe::io::format_transcript(g->g, t->t, comment ? comment : ""));
  });
}

size_t kc_transcript_size(const kc_transcript* t) { return t ? t->t.size() : 0; }

void kc_transcript_free(kc_transcript* t) { delete t; }

kc_status kc_transform(const kc_graph* g, const kc_coloring* from, const kc_coloring* to,
                       kc_mode mode, kc_transcript** transcript, kc_coloring** terminal) {
  kc_status mismatch = KC_OK;
  const kc_status s = guard([&] {
    same_size(g, from);
    if (to) same_size(g, to);
    require(transcript != nullptr, "null argument");
    Transcript tr = run_mode(g->g, from->f, to ? &to->f : nullptr, mode);
    EdgeColoring start = from->f;
    int palette = start.palette();
    if (to) palette = std::max(palette, to->f.palette());
    if (mode == KC_MODE_REGULAR4 || mode == KC_MODE_DELTA4) palette = std::max(palette, 5);
    start.set_palette(palette);
    EdgeColoring end = kempe::apply_transcript(g->g, start, tr);
    if (to && !end.same_colors(to->f)) mismatch = KC_ERR_TERMINAL_MISMATCH;
    if (to && kempe::max_used_color(end) <= to->f.palette()) end.set_palette(to->f.palette());
    *transcript = new kc_transcript{std::move(tr)};
    if (terminal) *terminal = new kc_coloring{std::move(end)};
  });
  if (s != KC_OK) return s;
  if (mismatch != KC_OK) return set_error(mismatch, "terminal coloring differs from the target");
  return KC_OK;
}

kc_status kc_apply(const kc_graph* g, const kc_coloring* f, const kc_transcript* t,
                   int check_every_step, kc_coloring** out) {
  return guard([&] {
    same_size(g, f);
    require(t && out, "null argument");
    *out = new kc_coloring{kempe::apply_transcript(g->g, f->f, t->t,
                                                   kempe::ApplyOptions{check_every_step != 0})};
  });
}

kc_status kc_oracle_chi(const kc_graph* g, int* chi, kc_coloring** witness) {
  return guard([&] {
    require(g && chi, "null argument");
    auto r = kempe::oracle::chromatic_index(g->g);
    *chi = r.value;
    if (witness) *witness = new kc_coloring{std::move(r.witness)};
  });
}

kc_status kc_oracle_classes(const kc_graph* g, int t, int jobs, uint64_t state_cap, char** json) {
  return guard([&] {
    require(g && json, "null argument");
    kempe::oracle::OracleOptions opts;
    opts.jobs = std::max(1, jobs);
    if (state_cap) opts.state_cap = state_cap;
    const auto r = kempe::oracle::kempe_classes(g->g, t, opts);
    nlohmann::json j;
    j["palette"] = r.palette;
    j["colorings"] = r.total;
    j["classes"] = r.class_count;
    j["sizes"] = r.sizes;
    j["truncated"] = r.truncated;
    *json = dup(j.dump());
  });
}

kc_status kc_oracle_same_class(const kc_graph* g, int t, const kc_coloring* f,
                               const kc_coloring* h, int jobs, uint64_t state_cap, int* same,
                               kc_transcript** path) {
  return guard([&] {
    same_size(g, f);
    same_size(g, h);
    require(same != nullptr, "null argument");
    kempe::oracle::OracleOptions opts;
    opts.jobs = std::max(1, jobs);
    if (state_cap) opts.state_cap = state_cap;
    auto r = kempe::oracle::same_class(g->g, t, f->f, h->f, opts);
    *same = r.same ? 1 : 0;
    if (path) *path = r.transcript ? new kc_transcript{std::move(*r.transcript)} : nullptr;
  });
}

kc_status kc_gen_octahedron(kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new kc_graph{kempe::fixtures::octahedron()};
  });
}

kc_status kc_gen_figure1(kc_coloring** f, kc_coloring** g) {
  return guard([&] {
    require(f && g, "null argument");
    auto [a, b] = kempe::fixtures::figure1_pair();
    *f = new kc_coloring{std::move(a)};
    *g = new kc_coloring{std::move(b)};
  });
}

kc_status kc_gen_regular4(int n, uint64_t seed, kc_graph** out, kc_coloring** witness) {
  return guard([&] {
    require(out != nullptr, "null argument");
    auto w = kempe::fixtures::random_regular4_class1(n, seed);
    *out = new kc_graph{std::move(w.graph)};
    if (witness) *witness = new kc_coloring{std::move(w.witness)};
  });
}

kc_status kc_gen_overfull5(kc_graph** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new kc_graph{kempe::fixtures::overfull_delta5()};
  });
}

kc_status kc_gen_coloring(const kc_graph* g, int t, uint64_t seed, kc_coloring** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(t >= 1 && t <= 30, "palette must be in 1..30");
    kempe::fixtures::Rng rng(seed);
    *out = new kc_coloring{kempe::fixtures::random_proper_coloring(g->g, t, rng)};
  });
}

}  // extern "C"
