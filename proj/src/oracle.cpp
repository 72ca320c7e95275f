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

#include "kempe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>

namespace kempe::oracle {
namespace {

using Key = std::uint64_t;

// Colorings packed into one word, edge 0 in the most significant field so
// that numeric order equals lexicographic order.
class Packing {
 public:
  Packing(const Graph& g, int t) : m_(g.edge_count()) {
    width_ = std::bit_width(static_cast<unsigned>(t));
    if (width_ * m_ > 64) {
      fail(ErrorCode::kBudgetExceeded, "state does not fit the oracle's 64-bit key");
    }
  }

  Key pack(const Color* c) const {
    Key k = 0;
    for (int e = 0; e < m_; ++e) k = (k << width_) | static_cast<Key>(c[e]);
    return k;
  }

  void unpack(Key k, Color* c) const {
    const Key mask = (Key{1} << width_) - 1;
    for (int e = m_ - 1; e >= 0; --e) {
      c[e] = static_cast<Color>(k & mask);
      k >>= width_;
    }
  }

 private:
  int m_;
  int width_;
};

// Neighbor generation on raw color arrays; avoids allocation per component.
class MoveGen {
 public:
  MoveGen(const Graph& g, int t) : g_(g), t_(t), m_(g.edge_count()) {
    comp_.resize(static_cast<std::size_t>(m_));
    stack_.reserve(static_cast<std::size_t>(m_));
  }

  // visit(a, b, rep, colors_after) for each component; colors_after is
  // restored after the call.
  template <typename F>
  void each(Color* c, F&& visit) {
    for (Color a = 1; a <= t_; ++a) {
      for (Color b = a + 1; b <= t_; ++b) {
        std::fill(comp_.begin(), comp_.end(), -1);
        for (EdgeId e = 0; e < m_; ++e) {
          if (comp_[static_cast<std::size_t>(e)] >= 0 || (c[e] != a && c[e] != b)) continue;
          members_.clear();
          stack_.clear();
          stack_.push_back(e);
          comp_[static_cast<std::size_t>(e)] = e;
          while (!stack_.empty()) {
            const EdgeId x = stack_.back();
            stack_.pop_back();
            members_.push_back(x);
            for (Vertex end : {g_.edge(x).u, g_.edge(x).v}) {
              for (const auto& inc : g_.incident(end)) {
                const EdgeId y = inc.edge;
                if (comp_[static_cast<std::size_t>(y)] >= 0 || (c[y] != a && c[y] != b)) continue;
                comp_[static_cast<std::size_t>(y)] = e;
                stack_.push_back(y);
              }
            }
          }
          for (EdgeId x : members_) c[x] = c[x] == a ? b : a;
          visit(a, b, e, c);
          for (EdgeId x : members_) c[x] = c[x] == a ? b : a;
        }
      }
    }
  }

 private:
  const Graph& g_;
  int t_;
  int m_;
  std::vector<EdgeId> comp_;
  std::vector<EdgeId> stack_;
  std::vector<EdgeId> members_;
};

// Edge order for enumeration is edge id; colors tried ascending.
void enumerate(const Graph& g, int t, std::uint64_t cap, bool& truncated,
               std::vector<Key>& out) {
  const Packing pack(g, t);
  const int m = g.edge_count();
  std::vector<Color> c(static_cast<std::size_t>(m), 0);
  std::vector<ColorSet> used(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  truncated = false;
  auto rec = [&](auto&& self, int e) -> bool {
    if (e == m) {
      if (out.size() >= cap) {
        truncated = true;
        return false;
      }
      out.push_back(pack.pack(c.data()));
      return true;
    }
    const Edge& ed = g.edge(e);
    const ColorSet blocked = used[static_cast<std::size_t>(ed.u)] | used[static_cast<std::size_t>(ed.v)];
    for (Color k = 1; k <= t; ++k) {
      if (has_color(blocked, k)) continue;
      c[static_cast<std::size_t>(e)] = k;
      used[static_cast<std::size_t>(ed.u)] |= bit(k);
      used[static_cast<std::size_t>(ed.v)] |= bit(k);
      const bool go = self(self, e + 1);
      used[static_cast<std::size_t>(ed.u)] &= ~bit(k);
      used[static_cast<std::size_t>(ed.v)] &= ~bit(k);
      if (!go) return false;
    }
    return true;
  };
  if (m == 0) {
    out.push_back(0);
    return;
  }
  rec(rec, 0);
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

bool extends_within(const Graph& g, int e, int t,
                    std::vector<ColorSet>& used, std::uint64_t& nodes,
                    std::uint64_t budget, std::vector<Color>& c) {
  if (e == g.edge_count()) return true;
  if (++nodes > budget) fail(ErrorCode::kBudgetExceeded, "chromatic index search budget exhausted");
  const Edge& ed = g.edge(e);
  const ColorSet blocked = used[static_cast<std::size_t>(ed.u)] | used[static_cast<std::size_t>(ed.v)];
  // New colors are introduced in increasing order to break symmetry.
  Color highest = 0;
  for (int x = 0; x < e; ++x) highest = std::max(highest, c[static_cast<std::size_t>(x)]);
  for (Color k = 1; k <= std::min(t, highest + 1); ++k) {
    if (has_color(blocked, k)) continue;
    c[static_cast<std::size_t>(e)] = k;
    used[static_cast<std::size_t>(ed.u)] |= bit(k);
    used[static_cast<std::size_t>(ed.v)] |= bit(k);
    if (extends_within(g, e + 1, t, used, nodes, budget, c)) return true;
    used[static_cast<std::size_t>(ed.u)] &= ~bit(k);
    used[static_cast<std::size_t>(ed.v)] &= ~bit(k);
  }
  c[static_cast<std::size_t>(e)] = 0;
  return false;
}

// Edges reordered so each edge follows its neighbors (BFS over vertices);
// this keeps conflicts close and prunes early.
Graph bfs_ordered(const Graph& g, std::vector<EdgeId>& to_original) {
  std::vector<char> seen_v(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  std::vector<char> seen_e(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  to_original.clear();
  for (Vertex s = 1; s <= g.vertex_count(); ++s) {
    if (seen_v[static_cast<std::size_t>(s)]) continue;
    std::deque<Vertex> queue{s};
    seen_v[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (!seen_e[static_cast<std::size_t>(inc.edge)]) {
          seen_e[static_cast<std::size_t>(inc.edge)] = 1;
          pairs.emplace_back(g.edge(inc.edge).u, g.edge(inc.edge).v);
          to_original.push_back(inc.edge);
        }
        if (!seen_v[static_cast<std::size_t>(inc.neighbor)]) {
          seen_v[static_cast<std::size_t>(inc.neighbor)] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return Graph(g.vertex_count(), pairs);
}

}  // namespace

ChromaticIndex chromatic_index(const Graph& g, std::uint64_t node_budget) {
  const int delta = g.max_degree();
  if (g.edge_count() == 0) return {0, EdgeColoring(1, std::size_t{0})};
  std::vector<EdgeId> to_original;
  const Graph ordered = bfs_ordered(g, to_original);
  for (int t = delta; t <= delta + 1; ++t) {
    std::vector<ColorSet> used(static_cast<std::size_t>(g.vertex_count() + 1), 0);
    std::vector<Color> c(static_cast<std::size_t>(g.edge_count()), 0);
    std::uint64_t nodes = 0;
    if (extends_within(ordered, 0, t, used, nodes, node_budget, c)) {
      EdgeColoring w(t, static_cast<std::size_t>(g.edge_count()));
      for (std::size_t i = 0; i < to_original.size(); ++i) w[to_original[i]] = c[i];
      require_proper(g, w);
      return {t, std::move(w)};
    }
  }
  fail(ErrorCode::kPreconditionViolated, "no coloring with max degree + 1 colors found");
}

std::vector<EdgeColoring> enumerate_colorings(const Graph& g, int t, std::uint64_t cap) {
  std::vector<Key> keys;
  bool truncated = false;
  enumerate(g, t, cap, truncated, keys);
  if (truncated) fail(ErrorCode::kBudgetExceeded, "more than cap proper colorings");
  const Packing pack(g, t);
  std::vector<EdgeColoring> out;
  out.reserve(keys.size());
  for (Key k : keys) {
    std::vector<Color> c(static_cast<std::size_t>(g.edge_count()));
    pack.unpack(k, c.data());
    out.emplace_back(t, std::move(c));
  }
  return out;
}

KempeClassReport kempe_classes(const Graph& g, int t, OracleOptions opts) {
  KempeClassReport report;
  report.palette = t;
  std::vector<Key> keys;
  enumerate(g, t, opts.state_cap, report.truncated, keys);
  report.total = keys.size();
  if (report.truncated) return report;

  const Packing pack(g, t);
  const std::size_t n = keys.size();
  const int jobs = std::max(1, opts.jobs);
  // Each worker lists (i, j) neighbor pairs for its slice; union is sequential
  // in slice order, so the partition does not depend on scheduling.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> links(
      static_cast<std::size_t>(jobs));
  auto work = [&](int part) {
    MoveGen gen(g, t);
    std::vector<Color> c(static_cast<std::size_t>(g.edge_count()));
    auto& out = links[static_cast<std::size_t>(part)];
    for (std::size_t i = static_cast<std::size_t>(part); i < n; i += static_cast<std::size_t>(jobs)) {
      pack.unpack(keys[i], c.data());
      gen.each(c.data(), [&](Color, Color, EdgeId, const Color* after) {
        const Key k = pack.pack(after);
        const auto j = static_cast<std::size_t>(
            std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
        if (j > i) out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      });
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < jobs; ++p) pool.emplace_back(work, p);
    for (auto& th : pool) th.join();
  }
  UnionFind uf(n);
  for (const auto& part : links) {
    for (const auto& [a, b] : part) uf.unite(a, b);
  }
  std::unordered_map<std::uint32_t, std::uint32_t> class_id;
  report.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
    auto [it, fresh] = class_id.emplace(root, static_cast<std::uint32_t>(class_id.size()));
    if (fresh) {
      std::vector<Color> c(static_cast<std::size_t>(g.edge_count()));
      pack.unpack(keys[i], c.data());
      report.representatives.emplace_back(t, std::move(c));
      report.sizes.push_back(0);
    }
    report.class_of[i] = it->second;
    ++report.sizes[it->second];
  }
  report.class_count = class_id.size();
  return report;
}

SameClass same_class(const Graph& g, int t, const EdgeColoring& f, const EdgeColoring& h,
                     OracleOptions opts) {
  require_proper(g, f);
  require_proper(g, h);
  if (max_used_color(f) > t || max_used_color(h) > t) {
    fail(ErrorCode::kColorOutOfRange, "coloring uses colors above the palette");
  }
  const Packing pack(g, t);
  const Key start = pack.pack(f.colors().data());
  const Key goal = pack.pack(h.colors().data());
  if (start == goal) return {true, Transcript{}};

  // Two searches meet in the middle; every move undoes itself, so the goal
  // side's parent links read backwards are valid moves.
  struct Parent {
    Key from;
    KempeMove move;
    std::uint32_t depth;
  };
  std::unordered_map<Key, Parent> side[2];
  side[0].emplace(start, Parent{start, {}, 0});
  side[1].emplace(goal, Parent{goal, {}, 0});
  std::vector<Key> frontier[2] = {{start}, {goal}};
  MoveGen gen(g, t);
  std::vector<Color> c(static_cast<std::size_t>(g.edge_count()));
  std::optional<Key> meet;
  std::uint32_t best = UINT32_MAX;
  while (!meet && !frontier[0].empty() && !frontier[1].empty()) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& mine = side[s];
    const auto& other = side[1 - s];
    std::vector<Key> next;
    for (const Key cur : frontier[s]) {
      pack.unpack(cur, c.data());
      const std::uint32_t d = mine.at(cur).depth + 1;
      gen.each(c.data(), [&](Color a, Color b, EdgeId rep, const Color* after) {
        const Key k = pack.pack(after);
        if (mine.contains(k)) return;
        if (side[0].size() + side[1].size() >= opts.state_cap) {
          fail(ErrorCode::kBudgetExceeded, "same-class search exceeded the state cap");
        }
        mine.emplace(k, Parent{cur, KempeMove{a, b, rep}, d});
        if (const auto it = other.find(k); it != other.end() && d + it->second.depth < best) {
          best = d + it->second.depth;
          meet = k;
        }
        next.push_back(k);
      });
    }
    frontier[s] = std::move(next);
  }
  if (!meet) return {false, std::nullopt};
  std::vector<KempeMove> head;
  for (Key k = *meet; k != start; k = side[0].at(k).from) head.push_back(side[0].at(k).move);
  Transcript tr;
  for (auto it = head.rbegin(); it != head.rend(); ++it) tr.push(*it, "oracle");
  for (Key k = *meet; k != goal; k = side[1].at(k).from) tr.push(side[1].at(k).move, "oracle");
  return {true, std::move(tr)};
}

}  // namespace kempe::oracle
