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

#pragma once

#include <vector>

namespace kempe::oracle {

template <typename F>
void for_each_kempe_move(const Graph& g, const EdgeColoring& f, int t, F&& visit) {
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()));
  for (Color a = 1; a <= t; ++a) {
    for (Color b = a + 1; b <= t; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (seen[static_cast<std::size_t>(e)] || (f[e] != a && f[e] != b)) continue;
        const auto comp = component_of_edge(g, f, a, b, e);
        for (EdgeId x : comp.edges) seen[static_cast<std::size_t>(x)] = 1;
        visit(KempeMove{a, b, e}, comp);
      }
    }
  }
}

}  // namespace kempe::oracle
