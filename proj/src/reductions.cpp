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

#include "kempe/reductions.hpp"

#include <algorithm>

#include "kempe/acyclic.hpp"
#include "kempe/oracle.hpp"

namespace kempe {
namespace {

bool high_forest(const Graph& g, int threshold) {
  return is_acyclic(induced_high_degree_subgraph(g, threshold).graph);
}

void replay_mapped(Work& w, const Transcript& inner, const std::vector<EdgeId>& to_parent) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const KempeMove& mv = inner[i];
    w.interchange(mv.a, mv.b, to_parent[static_cast<std::size_t>(mv.rep_edge)], inner.tag(i));
  }
}

}  // namespace

TransformResult maximalize_top_class(const Graph& g, const EdgeColoring& h, Color top) {
  require_proper(g, h);
  Work w(g, h);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (w.color(e) != top && w.missing(ed.u, top) && w.missing(ed.v, top)) {
      w.recolor(e, top, "maximalize");
    }
  }
  EdgeColoring out = w.coloring();
  return {std::move(out), w.take_transcript()};
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kLowDegree: return "low_degree";
    case Family::kDelta4Class1: return "delta4_class1";
    case Family::kDelta4Class2: return "delta4_class2";
    case Family::kDelta5Class2: return "delta5_class2";
    case Family::kHighForest: return "high_forest";
    case Family::kUnsupported: return "unsupported";
  }
  return "unsupported";
}

Family classify(const Graph& g, int chromatic_index) {
  const int delta = g.max_degree();
  if (delta <= 3) return Family::kLowDegree;
  if (delta == 4) return chromatic_index == 4 ? Family::kDelta4Class1 : Family::kDelta4Class2;
  if (delta == 5 && chromatic_index == 6) return Family::kDelta5Class2;
  if (high_forest(g, 5)) return Family::kHighForest;
  return Family::kUnsupported;
}

Transcript peel_and_recurse(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                            int k, PeelStats* stats) {
  require_proper(g, f);
  require_proper(g, h);
  const int delta = g.max_degree();
  if (g.edge_count() == 0) return {};
  if (k < delta || max_used_color(f) > k + 1 || max_used_color(h) > k) {
    fail(ErrorCode::kPreconditionViolated, "peel needs f within k+1 and h within k >= max degree");
  }
  if (stats) ++stats->depth;
  EdgeColoring start = f;
  start.set_palette(k + 1);
  Work w(g, start);

  if (k == 4 && delta == 4) {
    EdgeColoring target = h;
    target.set_palette(4);
    auto direct = transform_delta4(g, w.coloring(), target);
    w.replay(direct.transcript);
    if (stats) ++stats->delta4_steps;
    return w.take_transcript();
  }
  if (max_used_color(w.coloring()) > k) {
    if (k >= delta + 1) {
      for (EdgeId e : color_class(w.coloring(), k + 1)) {
        if (!fan_eliminate(w, g.edge(e).u, e, k, "peel-fan")) {
          fail(ErrorCode::kPreconditionViolated, "fan blocked above max degree");
        }
      }
      if (stats) ++stats->vizing_steps;
    } else if (high_forest(g, delta)) {
      acyclic_reduce(w);
      if (stats) ++stats->acyclic_steps;
    } else if (delta <= 3) {
      search_reduce_top(w, k + 1);
      if (stats) ++stats->search_steps;
    } else {
      fail(ErrorCode::kUnsupportedFamily,
           "no constructive reduction for max degree " + std::to_string(delta) +
               " with a cyclic max-degree subgraph");
    }
  }

  const auto maximal = maximalize_top_class(g, h, k);
  const EdgeColoring& hs = maximal.coloring;
  const auto top_edges = color_class(hs, k);
  for (EdgeId e : top_edges) w.recolor(e, k + 1, "peel-open");

  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (hs[e] != k) keep.push_back(e);
  }
  const EdgeSubgraph sub = edge_subgraph(g, keep);
  EdgeColoring sub_f(k, keep.size());
  EdgeColoring sub_h(k, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sub_f[static_cast<EdgeId>(i)] = w.color(keep[i]);
    sub_h[static_cast<EdgeId>(i)] = hs[keep[i]];
  }
  sub_h.set_palette(std::max(1, k - 1));
  replay_mapped(w, peel_and_recurse(sub.graph, sub_f, sub_h, k - 1, stats), sub.edge_to_parent);

  for (EdgeId e : top_edges) w.recolor(e, k, "peel-close");
  w.replay(maximal.transcript.reversed());
  if (!w.coloring().same_colors(h)) {
    fail(ErrorCode::kPreconditionViolated, "peeling did not end at the target");
  }
  return w.take_transcript();
}

EqualizeResult equalize(const Graph& g, const EdgeColoring& f, const EdgeColoring& h,
                        EqualizeOptions opts) {
  require_proper(g, f);
  require_proper(g, h);
  EqualizeResult out;
  const int delta = g.max_degree();
  if (g.edge_count() == 0) {
    out.family = Family::kLowDegree;
    return out;
  }
  EdgeColoring witness;
  if (opts.witness && is_proper(g, *opts.witness) && max_used_color(*opts.witness) <= delta) {
    witness = *opts.witness;
    out.chromatic_index = delta;
  } else if (delta <= 3) {
    out.chromatic_index = -1;  // decided inside the low-degree route when needed
  } else {
    auto chi = oracle::chromatic_index(g);
    out.chromatic_index = chi.value;
    witness = std::move(chi.witness);
  }
  out.family = classify(g, out.chromatic_index);
  if (out.family == Family::kUnsupported) {
    fail(ErrorCode::kUnsupportedFamily,
         "max degree " + std::to_string(delta) + ", chromatic index " +
             std::to_string(out.chromatic_index) +
             ", vertices of degree >= 5 induce a cycle");
  }
  if (out.family == Family::kLowDegree) {
    if (max_used_color(f) <= delta + 1 && max_used_color(h) <= delta + 1) {
      out.transcript = low_degree_equalize(g, f, h);
      return out;
    }
    // Class 2 graphs may arrive with delta + 2 colors; drop one at each end.
    if (out.chromatic_index < 0) out.chromatic_index = oracle::chromatic_index(g).value;
    if (std::max(max_used_color(f), max_used_color(h)) > out.chromatic_index + 1) {
      fail(ErrorCode::kPaletteMismatch, "colorings must use at most chromatic index + 1 colors");
    }
    const auto lower = [&](const EdgeColoring& x) {
      if (max_used_color(x) <= delta + 1) return TransformResult{x, {}};
      EdgeColoring wide = x;
      wide.set_palette(max_used_color(x));
      return reduce_to_delta_plus_one(g, wide);
    };
    const TransformResult lf = lower(f);
    const TransformResult lh = lower(h);
    out.transcript = lf.transcript;
    out.transcript.append(low_degree_equalize(g, lf.coloring, lh.coloring));
    out.transcript.append(lh.transcript.reversed());
    return out;
  }
  const int k = out.chromatic_index;
  if (max_used_color(f) > k + 1 || max_used_color(h) > k + 1) {
    fail(ErrorCode::kPaletteMismatch, "colorings must use at most chromatic index + 1 colors");
  }
  if (out.family == Family::kDelta4Class1) {
    EdgeColoring target = witness;
    target.set_palette(4);
    out.transcript = transform_delta4(g, f, target).transcript;
    out.transcript.append(transform_delta4(g, h, target).transcript.reversed());
    return out;
  }
  if (max_used_color(h) <= k) {
    out.transcript = peel_and_recurse(g, f, h, k, &out.stats);
  } else if (max_used_color(f) <= k) {
    out.transcript = peel_and_recurse(g, h, f, k, &out.stats).reversed();
  } else {
    out.transcript = peel_and_recurse(g, f, witness, k, &out.stats);
    out.transcript.append(peel_and_recurse(g, h, witness, k, &out.stats).reversed());
  }
  return out;
}

}  // namespace kempe
