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

// Command-line front end; talks to the library only through kempe.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kempe/kempe.h"

namespace {

struct DomainError {
  kc_status status;
  std::string detail;
};

void check(kc_status s) {
  if (s != KC_OK) throw DomainError{s, kc_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<kc_graph, Deleter<kc_graph, kc_graph_free>>;
using ColoringPtr = std::unique_ptr<kc_coloring, Deleter<kc_coloring, kc_coloring_free>>;
using TranscriptPtr = std::unique_ptr<kc_transcript, Deleter<kc_transcript, kc_transcript_free>>;

std::string take(char* s) {
  std::string out(s);
  kc_string_free(s);
  return out;
}

GraphPtr read_graph(const std::string& path) {
  kc_graph* g = nullptr;
  check(kc_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

ColoringPtr read_coloring(const kc_graph* g, const std::string& path) {
  kc_coloring* f = nullptr;
  check(kc_coloring_read(g, path.c_str(), &f));
  return ColoringPtr(f);
}

TranscriptPtr read_transcript(const kc_graph* g, const std::string& path) {
  kc_transcript* t = nullptr;
  check(kc_transcript_read(g, path.c_str(), &t));
  return TranscriptPtr(t);
}

// Writes to path, or stdout for "" / "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError{KC_ERR_IO, "cannot write " + path};
  out << text;
}

std::string coloring_text(const kc_graph* g, const kc_coloring* f) {
  char* s = nullptr;
  check(kc_coloring_format(g, f, &s));
  return take(s);
}

std::string transcript_text(const kc_graph* g, const kc_transcript* t, const std::string& comment) {
  char* s = nullptr;
  check(kc_transcript_format(g, t, comment.c_str(), &s));
  return take(s);
}

std::string graph_text(const kc_graph* g, const std::string& comment) {
  char* s = nullptr;
  check(kc_graph_format(g, comment.c_str(), &s));
  return take(s);
}

kc_mode parse_mode(const std::string& m) {
  if (m == "auto") return KC_MODE_AUTO;
  if (m == "vizing") return KC_MODE_VIZING;
  if (m == "acyclic") return KC_MODE_ACYCLIC;
  if (m == "regular4") return KC_MODE_REGULAR4;
  return KC_MODE_DELTA4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kempe interchange transforms for proper edge colorings"};
  app.require_subcommand(1);

  std::string graph, coloring, from, to, out, transcript, mode = "auto", result;
  int palette = 0, out_palette = 0, colors = 0, n = 0, jobs = 1;
  std::uint64_t seed = 0, cap = 0;
  bool check_steps = false;
  std::string out_f, out_g, witness;

  auto* verify = app.add_subcommand("verify", "Exit 0 iff the coloring is proper");
  verify->add_option("--graph", graph)->required();
  verify->add_option("--coloring", coloring)->required();

  auto* transform = app.add_subcommand("transform", "Write a transcript from --from to --to");
  transform->add_option("--graph", graph)->required();
  transform->add_option("--from", from)->required();
  transform->add_option("--to", to, "Target coloring (optional for vizing and acyclic)");
  transform->add_option("--out", out, "Transcript file")->required();
  transform->add_option("--mode", mode)
      ->check(CLI::IsMember({"auto", "vizing", "acyclic", "regular4", "delta4"}));
  transform->add_option("--result", result, "Also write the terminal coloring here");

  auto* apply = app.add_subcommand("apply", "Apply a transcript and print the result");
  apply->add_option("--graph", graph)->required();
  apply->add_option("--coloring", coloring)->required();
  apply->add_option("--transcript", transcript)->required();
  apply->add_flag("--check", check_steps, "Verify properness after every move");
  apply->add_option("--palette", palette, "Working palette (default: coloring header)");
  apply->add_option("--out-palette", out_palette, "Palette header of the printed result");
  apply->add_option("--out", out, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle->require_subcommand(1);
  auto* chi = oracle->add_subcommand("chi", "Chromatic index");
  chi->add_option("--graph", graph)->required();
  chi->add_option("--witness", witness, "Write an optimal coloring here");
  auto* classes = oracle->add_subcommand("classes", "Kempe classes of all proper t-colorings");
  classes->add_option("--graph", graph)->required();
  classes->add_option("--colors", colors)->required();
  classes->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  classes->add_option("--cap", cap, "State cap");
  auto* same = oracle->add_subcommand("same-class", "Are two t-colorings Kempe equivalent");
  same->add_option("--graph", graph)->required();
  same->add_option("--colors", colors)->required();
  same->add_option("--from", from)->required();
  same->add_option("--to", to)->required();
  same->add_option("--out", out, "Write a shortest transcript here");
  same->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  same->add_option("--cap", cap, "State cap");

  auto* gen = app.add_subcommand("gen", "Fixture generators");
  gen->require_subcommand(1);
  auto* g_oct = gen->add_subcommand("octahedron", "K_{2,2,2}");
  g_oct->add_option("--out", out);
  auto* g_fig = gen->add_subcommand("figure1", "Octahedron colorings in distinct classes at palette 4");
  g_fig->add_option("--out-f", out_f)->required();
  g_fig->add_option("--out-g", out_g)->required();
  auto* g_r4 = gen->add_subcommand("regular4", "Random 4-regular graph with a 4-coloring");
  g_r4->add_option("--n", n)->required();
  g_r4->add_option("--seed", seed)->required();
  g_r4->add_option("--out", out);
  g_r4->add_option("--witness", witness);
  auto* g_over = gen->add_subcommand("overfull5", "Overfull max-degree-5 fixture");
  g_over->add_option("--out", out);
  auto* g_col = gen->add_subcommand("coloring", "Random proper coloring");
  g_col->add_option("--graph", graph)->required();
  g_col->add_option("--colors", colors)->required();
  g_col->add_option("--seed", seed)->required();
  g_col->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify) {
      auto g = read_graph(graph);
      auto f = read_coloring(g.get(), coloring);
      int proper = 0;
      check(kc_coloring_is_proper(g.get(), f.get(), &proper));
      if (!proper) throw DomainError{KC_ERR_NOT_PROPER, "coloring is not proper"};
      std::cout << nlohmann::json{{"proper", true}, {"palette", kc_coloring_palette(f.get())}}.dump()
                << '\n';
    } else if (*transform) {
      auto g = read_graph(graph);
      auto f = read_coloring(g.get(), from);
      ColoringPtr h;
      if (!to.empty()) h = read_coloring(g.get(), to);
      kc_transcript* t = nullptr;
      kc_coloring* end = nullptr;
      const kc_status s = kc_transform(g.get(), f.get(), h.get(), parse_mode(mode), &t, &end);
      const std::string detail = kc_last_error();
      TranscriptPtr tp(t);
      ColoringPtr ep(end);
      if (tp) emit(out, transcript_text(g.get(), tp.get(), "mode " + mode));
      if (ep && !result.empty()) emit(result, coloring_text(g.get(), ep.get()));
      if (s != KC_OK) throw DomainError{s, detail};
      std::cout << nlohmann::json{{"mode", mode}, {"moves", kc_transcript_size(tp.get())}}.dump()
                << '\n';
    } else if (*apply) {
      auto g = read_graph(graph);
      auto f = read_coloring(g.get(), coloring);
      if (palette > 0) check(kc_coloring_set_palette(f.get(), palette));
      auto t = read_transcript(g.get(), transcript);
      kc_coloring* r = nullptr;
      check(kc_apply(g.get(), f.get(), t.get(), check_steps ? 1 : 0, &r));
      ColoringPtr rp(r);
      if (out_palette > 0) check(kc_coloring_set_palette(rp.get(), out_palette));
      emit(out, coloring_text(g.get(), rp.get()));
    } else if (*chi) {
      auto g = read_graph(graph);
      int value = 0;
      kc_coloring* w = nullptr;
      check(kc_oracle_chi(g.get(), &value, &w));
      ColoringPtr wp(w);
      if (!witness.empty()) emit(witness, coloring_text(g.get(), wp.get()));
      const int delta = kc_graph_max_degree(g.get());
      std::cout << nlohmann::json{{"chromatic_index", value},
                                  {"max_degree", delta},
                                  {"class", value == delta ? 1 : 2}}.dump()
                << '\n';
    } else if (*classes) {
      auto g = read_graph(graph);
      char* json = nullptr;
      check(kc_oracle_classes(g.get(), colors, jobs, cap, &json));
      std::cout << take(json) << '\n';
    } else if (*same) {
      auto g = read_graph(graph);
      auto f = read_coloring(g.get(), from);
      auto h = read_coloring(g.get(), to);
      int yes = 0;
      kc_transcript* t = nullptr;
      check(kc_oracle_same_class(g.get(), colors, f.get(), h.get(), jobs, cap, &yes, &t));
      TranscriptPtr tp(t);
      if (tp && !out.empty()) emit(out, transcript_text(g.get(), tp.get(), "oracle shortest"));
      nlohmann::json j{{"same", yes == 1}};
      if (tp) j["moves"] = kc_transcript_size(tp.get());
      std::cout << j.dump() << '\n';
    } else if (*g_oct) {
      kc_graph* g = nullptr;
      check(kc_gen_octahedron(&g));
      GraphPtr gp(g);
      emit(out, graph_text(gp.get(), "octahedron K_{2,2,2}"));
    } else if (*g_fig) {
      kc_graph* g = nullptr;
      check(kc_gen_octahedron(&g));
      GraphPtr gp(g);
      kc_coloring* a = nullptr;
      kc_coloring* b = nullptr;
      check(kc_gen_figure1(&a, &b));
      ColoringPtr ap(a), bp(b);
      emit(out_f, coloring_text(gp.get(), ap.get()));
      emit(out_g, coloring_text(gp.get(), bp.get()));
    } else if (*g_r4) {
      kc_graph* g = nullptr;
      kc_coloring* w = nullptr;
      check(kc_gen_regular4(n, seed, &g, &w));
      GraphPtr gp(g);
      ColoringPtr wp(w);
      emit(out, graph_text(gp.get(), "random 4-regular n=" + std::to_string(n) + " seed=" +
                                         std::to_string(seed)));
      if (!witness.empty()) emit(witness, coloring_text(gp.get(), wp.get()));
    } else if (*g_over) {
      kc_graph* g = nullptr;
      check(kc_gen_overfull5(&g));
      GraphPtr gp(g);
      emit(out, graph_text(gp.get(), "K7 minus a triangle and a two-edge matching"));
    } else if (*g_col) {
      auto g = read_graph(graph);
      kc_coloring* f = nullptr;
      check(kc_gen_coloring(g.get(), colors, seed, &f));
      ColoringPtr fp(f);
      emit(out, coloring_text(g.get(), fp.get()));
    }
  } catch (const DomainError& e) {
    std::cerr << nlohmann::json{{"error", kc_status_name(e.status)}, {"detail", e.detail}}.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
              << '\n';
    return 1;
  }
  return 0;
}
