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

#include "kempe/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kempe/engine.hpp"
#include "kempe/oracle.hpp"
#include "kempe/vizing.hpp"

namespace kempe::fixtures {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Vertex> shuffled_vertices(int n, Rng& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Sorted edge list with colors carried along.
Witnessed assemble(int n, std::vector<std::pair<std::pair<Vertex, Vertex>, Color>> colored,
                   int palette) {
  std::sort(colored.begin(), colored.end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Color> colors;
  for (const auto& [p, c] : colored) {
    pairs.push_back(p);
    colors.push_back(c);
  }
  Graph g(n, pairs);
  EdgeColoring w(palette, std::move(colors));
  require_proper(g, w);
  return {std::move(g), std::move(w)};
}

}  // namespace

Graph octahedron() {
  return Graph(6, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
                   {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}});
}

std::pair<EdgeColoring, EdgeColoring> figure1_pair() {
  const auto report = oracle::kempe_classes(octahedron(), 4);
  if (report.class_count < 2) {
    fail(ErrorCode::kPreconditionViolated, "octahedron has a single class at palette 4");
  }
  return {report.representatives[0], report.representatives[1]};
}

Witnessed random_regular4_class1(int n, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0) {
    fail(ErrorCode::kInfeasibleN, "need an even vertex count >= 6, got " + std::to_string(n));
  }
  Rng rng(seed);
  const auto first = shuffled_vertices(n, rng);
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::pair<std::pair<Vertex, Vertex>, Color>> colored;
  for (int i = 0; i < n; ++i) {
    const auto e = ordered(first[static_cast<std::size_t>(i)],
                           first[static_cast<std::size_t>((i + 1) % n)]);
    used.insert(e);
    colored.push_back({e, i % 2 == 0 ? 1 : 2});
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto second = shuffled_vertices(n, rng);
    bool disjoint = true;
    for (int i = 0; i < n && disjoint; ++i) {
      disjoint = !used.contains(ordered(second[static_cast<std::size_t>(i)],
                                        second[static_cast<std::size_t>((i + 1) % n)]));
    }
    if (!disjoint) continue;
    for (int i = 0; i < n; ++i) {
      colored.push_back({ordered(second[static_cast<std::size_t>(i)],
                                 second[static_cast<std::size_t>((i + 1) % n)]),
                         i % 2 == 0 ? 3 : 4});
    }
    return assemble(n, std::move(colored), 4);
  }
  fail(ErrorCode::kInfeasibleN, "no second Hamiltonian cycle found");
}

Witnessed random_cubic_class1(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    fail(ErrorCode::kInfeasibleN, "need an even vertex count >= 4, got " + std::to_string(n));
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto cycle = shuffled_vertices(n, rng);
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<std::pair<std::pair<Vertex, Vertex>, Color>> colored;
    for (int i = 0; i < n; ++i) {
      const auto e = ordered(cycle[static_cast<std::size_t>(i)],
                             cycle[static_cast<std::size_t>((i + 1) % n)]);
      used.insert(e);
      colored.push_back({e, i % 2 == 0 ? 1 : 2});
    }
    const auto match = shuffled_vertices(n, rng);
    bool ok = true;
    for (int i = 0; i < n && ok; i += 2) {
      const auto e = ordered(match[static_cast<std::size_t>(i)], match[static_cast<std::size_t>(i + 1)]);
      ok = !used.contains(e);
      colored.push_back({e, 3});
    }
    if (ok) return assemble(n, std::move(colored), 3);
  }
  fail(ErrorCode::kInfeasibleN, "no disjoint perfect matching found");
}

Graph overfull_delta5() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::set<std::pair<Vertex, Vertex>> removed{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {6, 7}};
  for (Vertex a = 1; a <= 7; ++a) {
    for (Vertex b = a + 1; b <= 7; ++b) {
      if (!removed.contains({a, b})) pairs.emplace_back(a, b);
    }
  }
  return Graph(7, pairs);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  }
  return Graph(n, pairs);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (coin(rng)) pairs.emplace_back(a, b);
    }
  }
  return Graph(n, pairs);
}

Graph random_acyclic_high(int n, int delta, std::uint64_t seed) {
  if (delta < 1 || n < delta + 1) {
    fail(ErrorCode::kInfeasibleN, "need n >= delta + 1");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int hubs = uniform(rng, 1, std::max(1, n / (delta + 1) + 1));
    const auto order = shuffled_vertices(n, rng);
    std::vector<char> is_hub(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i < hubs; ++i) is_hub[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
    std::vector<int> deg(static_cast<std::size_t>(n + 1), 0);
    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&](Vertex a, Vertex b) {
      edges.insert(ordered(a, b));
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
    };
    // Random forest on the hubs.
    for (int i = 1; i < hubs; ++i) {
      if (uniform(rng, 0, 2) == 0) continue;
      const Vertex a = order[static_cast<std::size_t>(i)];
      const Vertex b = order[static_cast<std::size_t>(uniform(rng, 0, i - 1))];
      if (deg[static_cast<std::size_t>(a)] < delta && deg[static_cast<std::size_t>(b)] < delta) add(a, b);
    }
    // Non-hubs stay below delta.
    bool ok = true;
    for (int i = 0; i < hubs && ok; ++i) {
      const Vertex h = order[static_cast<std::size_t>(i)];
      std::vector<Vertex> options;
      for (int j = hubs; j < n; ++j) options.push_back(order[static_cast<std::size_t>(j)]);
      std::shuffle(options.begin(), options.end(), rng);
      for (Vertex x : options) {
        if (deg[static_cast<std::size_t>(h)] == delta) break;
        if (deg[static_cast<std::size_t>(x)] < delta - 1 && !edges.contains(ordered(h, x))) add(h, x);
      }
      ok = deg[static_cast<std::size_t>(h)] == delta;
    }
    if (!ok) continue;
    const int extra = uniform(rng, 0, n);
    for (int i = 0; i < extra; ++i) {
      const Vertex a = order[static_cast<std::size_t>(uniform(rng, hubs, n - 1))];
      const Vertex b = order[static_cast<std::size_t>(uniform(rng, hubs, n - 1))];
      if (a == b || edges.contains(ordered(a, b))) continue;
      if (deg[static_cast<std::size_t>(a)] < delta - 1 && deg[static_cast<std::size_t>(b)] < delta - 1) add(a, b);
    }
    Graph g(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
    if (g.max_degree() == delta) return g;
  }
  fail(ErrorCode::kInfeasibleN, "could not build graph with acyclic max-degree subgraph");
}

EdgeColoring random_kempe_walk(const Graph& g, const EdgeColoring& f, Rng& rng, int steps) {
  EdgeColoring cur = f;
  const int t = f.palette();
  if (t < 2 || g.edge_count() == 0) return cur;
  for (int s = 0; s < steps; ++s) {
    const EdgeId e = uniform(rng, 0, g.edge_count() - 1);
    Color b = uniform(rng, 1, t - 1);
    if (b >= cur[e]) ++b;
    apply_move(g, cur, KempeMove{cur[e], b, e});
  }
  return cur;
}

namespace {

// Random greedy coloring reduced by fans to Delta+1 colors, then spread over
// a random subset of 1..t.
EdgeColoring greedy_then_reduce(const Graph& g, int t, Rng& rng) {
  const int m = g.edge_count();
  const int delta = g.max_degree();
  std::vector<EdgeId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  EdgeColoring f(std::max(1, 2 * delta - 1), static_cast<std::size_t>(m));
  std::vector<ColorSet> used(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    const ColorSet blocked = used[static_cast<std::size_t>(ed.u)] | used[static_cast<std::size_t>(ed.v)];
    std::vector<Color> free;
    for (Color k = 1; k <= f.palette(); ++k) {
      if (!has_color(blocked, k)) free.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick(0, free.size() / 2);
    const Color k = free[pick(rng)];
    f[e] = k;
    used[static_cast<std::size_t>(ed.u)] |= bit(k);
    used[static_cast<std::size_t>(ed.v)] |= bit(k);
  }
  const EdgeColoring reduced =
      max_used_color(f) > delta + 1 ? reduce_to_delta_plus_one(g, f).coloring : f;
  std::vector<Color> target(static_cast<std::size_t>(t));
  std::iota(target.begin(), target.end(), 1);
  std::shuffle(target.begin(), target.end(), rng);
  EdgeColoring out(t, static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) out[e] = target[static_cast<std::size_t>(reduced[e] - 1)];
  return out;
}

}  // namespace

EdgeColoring random_proper_coloring(const Graph& g, int t, Rng& rng, int walk) {
  if (g.edge_count() > 0 && t >= g.max_degree() + 1) {
    return random_kempe_walk(g, greedy_then_reduce(g, t, rng), rng, walk);
  }
  const int m = g.edge_count();
  std::vector<Color> c(static_cast<std::size_t>(m), 0);
  std::vector<ColorSet> used(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int e) -> bool {
    if (e == m) return true;
    if (++nodes > 10'000'000) fail(ErrorCode::kBudgetExceeded, "random coloring search exhausted");
    const Edge& ed = g.edge(e);
    std::vector<Color> options(static_cast<std::size_t>(t));
    std::iota(options.begin(), options.end(), 1);
    std::shuffle(options.begin(), options.end(), rng);
    for (Color k : options) {
      const ColorSet blocked = used[static_cast<std::size_t>(ed.u)] | used[static_cast<std::size_t>(ed.v)];
      if (has_color(blocked, k)) continue;
      c[static_cast<std::size_t>(e)] = k;
      used[static_cast<std::size_t>(ed.u)] |= bit(k);
      used[static_cast<std::size_t>(ed.v)] |= bit(k);
      if (self(self, e + 1)) return true;
      used[static_cast<std::size_t>(ed.u)] &= ~bit(k);
      used[static_cast<std::size_t>(ed.v)] &= ~bit(k);
    }
    return false;
  };
  if (!rec(rec, 0)) fail(ErrorCode::kPaletteTooSmall, "no proper coloring with this palette");
  return random_kempe_walk(g, EdgeColoring(t, std::move(c)), rng, walk);
}

}  // namespace kempe::fixtures
