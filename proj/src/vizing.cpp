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

#include "kempe/vizing.hpp"

#include <algorithm>

namespace kempe {
namespace {

Fan prefix(const Fan& fan, std::size_t len) {
  Fan out = fan;
  out.edges.resize(len);
  out.associated.resize(len);
  out.leaves.resize(len);
  out.repeat_index = -1;
  return out;
}

bool on_component(const BicoloredComponent& q, Vertex x) {
  return std::find(q.vertices.begin(), q.vertices.end(), x) != q.vertices.end();
}

}  // namespace

bool fan_eliminate(Work& w, Vertex pivot, EdgeId e, Color low, const std::string& tag) {
  const Graph& g = w.graph();
  const Fan fan = grow_fan(g, w.coloring(), pivot, e, low);
  const Vertex last = fan.leaves.back();
  const auto next = smallest_missing(g, w.coloring(), last, 1, low);
  if (!next) return false;
  if (fan.repeat_index < 0) {
    w.downshift(fan, *next, tag);
    return true;
  }
  const auto c0 = smallest_missing(g, w.coloring(), pivot, 1, low);
  if (!c0) {
    fail(ErrorCode::kPreconditionViolated,
         "no low color missing at pivot " + std::to_string(pivot));
  }
  if (w.missing(last, *c0)) {
    w.downshift(fan, *c0, tag);
    return true;
  }
  // The repeated color sits on edge e_{j+1}; u_j misses it as well.
  const std::size_t j = static_cast<std::size_t>(fan.repeat_index);
  const Vertex uj = fan.leaves[j - 1];
  const auto q = w.interchange_at(*c0, *next, last, tag);
  if (on_component(*q, pivot)) {
    w.downshift(prefix(fan, j), *next, tag);
  } else if (on_component(*q, uj)) {
    w.downshift(prefix(fan, j), *c0, tag);
  } else {
    w.downshift(fan, *c0, tag);
  }
  return true;
}

TransformResult reduce_to_delta_plus_one(const Graph& g, const EdgeColoring& f) {
  require_proper(g, f);
  const int delta = g.max_degree();
  if (f.palette() <= delta + 1) {
    fail(ErrorCode::kPaletteTooSmall,
         "palette " + std::to_string(f.palette()) + " does not exceed max degree + 1 = " +
             std::to_string(delta + 1));
  }
  Work w(g, f);
  for (Color top = f.palette(); top > delta + 1; --top) {
    while (true) {
      const auto bad = std::find(w.coloring().colors().begin(), w.coloring().colors().end(), top);
      if (bad == w.coloring().colors().end()) break;
      const EdgeId e = static_cast<EdgeId>(bad - w.coloring().colors().begin());
      std::size_t above = 0;
      for (Color c : w.coloring().colors()) above += c > delta + 1;
      if (!fan_eliminate(w, g.edge(e).u, e, delta + 1, "vizing-fan")) {
        fail(ErrorCode::kPreconditionViolated, "fan blocked below max degree + 1");
      }
      std::size_t after = 0;
      for (Color c : w.coloring().colors()) after += c > delta + 1;
      if (after >= above) {
        fail(ErrorCode::kPreconditionViolated, "elimination round did not make progress");
      }
    }
  }
  w.set_palette(delta + 1);
  EdgeColoring out = w.coloring();
  return {std::move(out), w.take_transcript()};
}

}  // namespace kempe
