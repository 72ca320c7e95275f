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

#include "kempe/regular4.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

#include "kempe/degree4.hpp"

namespace kempe {
namespace {

constexpr std::size_t kStepBudget = 400;

// Path or cycle of G_f(1, two) seen from the working edge u1v1.
struct Line {
  bool cycle = false;
  std::size_t length = 0;  // edges
  std::vector<Vertex> u;   // u[0] = u1, walking away from v1
  std::vector<Vertex> v;   // v[0] = v1, walking away from u1
};

// Window facts once both spoke conditions hold at w1, w2, w3.
struct Frame {
  bool improved = false;
  int i = 0;
  Color c = 0;
  Color c1 = 0, c2 = 0, c3 = 0;
  Vertex x1 = 0, x2 = 0;
};

enum class PairOutcome { kCertified, kOneFreed, kWindowFreed };

struct PairResult {
  PairOutcome outcome = PairOutcome::kCertified;
  int i = 0;
  Color c = 0;
};

// Tail-call result: either the target increase was reached or the machine
// continues on a specific edge.
struct Next {
  bool done = false;
  EdgeId edge = -1;
  static Next finished() { return {true, -1}; }
  static Next on(EdgeId e) { return {false, e}; }
};

Vertex at(const std::vector<Vertex>& side, int i) {
  return i >= 1 && static_cast<std::size_t>(i) <= side.size() ? side[static_cast<std::size_t>(i - 1)] : 0;
}

class Machine {
 public:
  Machine(Work& w, const EdgeColoring& h, Regular4Stats* stats)
      : w_(w), g_(w.graph()), h_(h), stats_(stats) {}

  std::size_t matched() const {
    std::size_t n = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) n += h_[e] == 1 && w_.color(e) == 1;
    return n;
  }

  // Raises matched() above its current value, starting from edge e with
  // h(e) = 1 != f(e).
  void improve(EdgeId e) {
    const std::size_t base = matched();
    for (std::size_t step = 0; step < kStepBudget; ++step) {
      if (matched() > base) return;
      if (h_[e] != 1 || w_.color(e) == 1) {
        const auto next = first_wrong();
        if (!next) return;
        e = *next;
      }
      const Next n = dispatch(e);
      if (n.done) {
        if (matched() <= base) {
          fail(ErrorCode::kPreconditionViolated, "a terminal step did not raise the matched count");
        }
        return;
      }
      e = n.edge;
    }
    fail(ErrorCode::kBudgetExceeded, "case machine exceeded its step budget");
  }

  std::optional<EdgeId> first_wrong() const {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (h_[e] == 1 && w_.color(e) != 1) return e;
    }
    return std::nullopt;
  }

 private:
  void count(const char* name) {
    if (stats_) ++stats_->case_counts[name];
  }

  EdgeId edge(Vertex a, Vertex b) const {
    const auto e = g_.find_edge(a, b);
    if (!e) fail(ErrorCode::kBadWindow, "window vertices are not adjacent");
    return *e;
  }
  bool correct(EdgeId e) const { return w_.color(e) == h_[e]; }
  bool correct_one(Vertex a, Vertex b) const {
    const EdgeId e = edge(a, b);
    return w_.color(e) == 1 && h_[e] == 1;
  }
  Vertex nbr(Vertex v, Color c) const {
    const auto e = w_.edge_at(v, c);
    return e ? g_.edge(*e).other(v) : 0;
  }
  ColorSet rest(Vertex v) const { return w_.palette(v) & ~(bit(1) | bit(two_)); }
  ColorSet others() const {
    ColorSet s = 0;
    for (Color c = 2; c <= 5; ++c) {
      if (c != two_) s |= bit(c);
    }
    return s;
  }
  static Color only(ColorSet s) {
    if (popcount(s) != 1) fail(ErrorCode::kBadWindow, "expected a single shared color");
    return std::countr_zero(s);
  }
  std::optional<Color> free_pair(Vertex a, Vertex b) const {
    const ColorSet used = w_.palette(a) | w_.palette(b);
    for (Color c = 2; c <= 5; ++c) {
      if (c != two_ && !has_color(used, c)) return c;
    }
    return std::nullopt;
  }

  void recolor(Vertex a, Vertex b, Color c, const char* tag) { w_.recolor(edge(a, b), c, tag); }
  void swap_line(EdgeId e, const char* tag) { w_.interchange(1, w_.color(e), e, tag); }

  // Interchange the (a,b) component at v and check its vertex sequence.
  void swap_expect(Color a, Color b, Vertex v, std::initializer_list<Vertex> expect,
                   const char* tag) {
    const auto comp = component_at_vertex(g_, w_.coloring(), a, b, v);
    if (!comp || comp->is_cycle || !std::equal(comp->vertices.begin(), comp->vertices.end(),
                                                expect.begin(), expect.end())) {
      fail(ErrorCode::kClaimViolated,
           std::string("bicolored path at vertex ") + std::to_string(v) + " differs from the required shape (" + tag + ")");
    }
    w_.interchange(a, b, comp->edges.front(), tag);
  }

  Line line(EdgeId e, Vertex u1) const {
    const auto comp = component_of_edge(g_, w_.coloring(), 1, w_.color(e), e);
    Line out;
    out.cycle = comp.is_cycle;
    out.length = comp.edges.size();
    const auto& vs = comp.vertices;
    const std::size_t n = vs.size();
    const std::size_t p = static_cast<std::size_t>(
        std::find(comp.edges.begin(), comp.edges.end(), e) - comp.edges.begin());
    if (comp.is_cycle) {
      const bool forward = vs[p] == u1;  // edge p joins vs[p] and vs[(p+1) % n]
      const std::size_t iu = forward ? p : (p + 1) % n;
      const std::size_t iv = forward ? (p + 1) % n : p;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        out.u.push_back(vs[forward ? (iu + n - k) % n : (iu + k) % n]);
        out.v.push_back(vs[forward ? (iv + k) % n : (iv + n - k) % n]);
      }
    } else if (vs[p] == u1) {
      for (std::size_t k = p + 1; k-- > 0;) out.u.push_back(vs[k]);
      for (std::size_t k = p + 1; k < n; ++k) out.v.push_back(vs[k]);
    } else {
      for (std::size_t k = p + 1; k < n; ++k) out.u.push_back(vs[k]);
      for (std::size_t k = p + 1; k-- > 0;) out.v.push_back(vs[k]);
    }
    return out;
  }

  // ---- one-sided window on w0..w4 (interior w1, w2, w3) ----
  Frame window(const std::array<Vertex, 5>& wv) {
    for (int iter = 0; iter < 12; ++iter) {
      Frame fr;
      for (int i = 1; i <= 2; ++i) {
        if (auto c = free_pair(wv[static_cast<std::size_t>(i)], wv[static_cast<std::size_t>(i + 1)])) {
          fr.improved = true;
          fr.i = i;
          fr.c = *c;
          return fr;
        }
      }
      const ColorSet p1 = rest(wv[1]), p2 = rest(wv[2]), p3 = rest(wv[3]);
      if (popcount(p1) != 2 || popcount(p2) != 2 || popcount(p3) != 2) {
        fail(ErrorCode::kBadWindow, "window interior is not on a (1,2)-path");
      }
      if (p1 == p3) {
        count("window-balance");
        w_.interchange_at(only(p1 & ~p2), only(p2 & ~p1), wv[2], "window");
        continue;
      }
      fr.c1 = only(p1 & p3);
      fr.c2 = only(p2 & p3);
      fr.c3 = only(p1 & p2);
      fr.x1 = nbr(wv[2], fr.c3);
      fr.x2 = nbr(wv[2], fr.c2);
      if (w_.missing(fr.x1, fr.c1)) {
        count("window-spoke");
        recolor(wv[2], fr.x1, fr.c1, "window");
        continue;
      }
      if (w_.missing(fr.x2, fr.c1)) {
        count("window-spoke");
        recolor(wv[2], fr.x2, fr.c1, "window");
        continue;
      }
      if (w_.missing(fr.x1, fr.c2)) {
        count("window-path");
        const auto q = w_.interchange_at(fr.c1, fr.c2, wv[1], "window");
        if (q && ends_at(*q, wv[2]) && w_.missing(fr.x1, fr.c2)) {
          recolor(wv[2], fr.x1, fr.c2, "window");
        }
        continue;
      }
      if (w_.missing(fr.x2, fr.c3)) {
        count("window-path");
        const auto q = w_.interchange_at(fr.c1, fr.c3, wv[3], "window");
        if (q && ends_at(*q, wv[2]) && w_.missing(fr.x2, fr.c3)) {
          recolor(wv[2], fr.x2, fr.c3, "window");
        }
        continue;
      }
      return fr;
    }
    fail(ErrorCode::kBadWindow, "window did not settle");
  }

  static bool ends_at(const BicoloredComponent& q, Vertex x) {
    return !q.is_cycle && (q.vertices.front() == x || q.vertices.back() == x);
  }
  static bool contains(const BicoloredComponent& q, Vertex x) {
    return std::find(q.vertices.begin(), q.vertices.end(), x) != q.vertices.end();
  }

  // ---- window w0..w5 (interior w1..w4): free color at some consecutive pair ----
  std::pair<int, Color> long_window(const std::array<Vertex, 6>& wv) {
    for (int iter = 0; iter < 12; ++iter) {
      for (int i = 1; i <= 3; ++i) {
        if (auto c = free_pair(wv[static_cast<std::size_t>(i)], wv[static_cast<std::size_t>(i + 1)])) {
          return {i, *c};
        }
      }
      const Frame fr = window({wv[0], wv[1], wv[2], wv[3], wv[4]});
      if (fr.improved) return {fr.i, fr.c};
      const ColorSet p4 = rest(wv[4]);
      if (p4 == rest(wv[2])) {
        const Frame sub = window({wv[1], wv[2], wv[3], wv[4], wv[5]});
        if (!sub.improved) fail(ErrorCode::kBadWindow, "shifted window certified unexpectedly");
        return {sub.i + 1, sub.c};
      }
      if (p4 == rest(wv[1])) {
        count("long-window-path");
        w_.interchange_at(fr.c1, fr.c2, wv[2], "window");
        continue;
      }
      fail(ErrorCode::kBadWindow, "fourth interior vertex has an unexpected palette");
    }
    fail(ErrorCode::kBadWindow, "long window did not settle");
  }

  // ---- the x1/x2 dichotomy at v2 for the window u1 v1 v2 v3 v4 ----
  PairResult pair(const std::array<Vertex, 5>& wv) {
    const Frame fr = window(wv);
    if (fr.improved) return {PairOutcome::kWindowFreed, fr.i, fr.c};
    const Vertex v1 = wv[1], v2 = wv[2], v3 = wv[3];
    if (wv[0] == fr.x2) fail(ErrorCode::kPreconditionViolated, "u1 coincides with x2");
    if (w_.missing(fr.x2, 1)) {
      count("pair-swap");
      swap_expect(1, fr.c2, v1, {v1, v2, fr.x2}, "pair");
      return {PairOutcome::kOneFreed, 0, 0};
    }
    if (w_.missing(fr.x1, two_)) {
      const auto q = component_at_vertex(g_, w_.coloring(), fr.c1, two_, fr.x1);
      const bool has_v3 = q && contains(*q, v3);
      const bool has_x2 = q && contains(*q, fr.x2);
      Fan fan;
      fan.pivot = v2;
      if (!has_v3 && !has_x2) {
        count("pair-fan4");
        if (q) w_.interchange(fr.c1, two_, q->edges.front(), "pair");
        fan.edges = {edge(v2, v1), edge(v2, fr.x2), edge(v2, v3), edge(v2, fr.x1)};
        fan.leaves = {v1, fr.x2, v3, fr.x1};
      } else if (has_v3 && !has_x2) {
        count("pair-fan2");
        w_.interchange_at(fr.c1, two_, fr.x2, "pair");
        fan.edges = {edge(v2, v1), edge(v2, fr.x2)};
        fan.leaves = {v1, fr.x2};
      } else if (has_x2 && !has_v3) {
        count("pair-fan2");
        w_.interchange(fr.c1, two_, q->edges.front(), "pair");
        fan.edges = {edge(v2, v1), edge(v2, fr.x2)};
        fan.leaves = {v1, fr.x2};
      } else {
        fail(ErrorCode::kClaimViolated, "path from x1 meets both v3 and x2");
      }
      for (EdgeId fe : fan.edges) fan.associated.push_back(w_.color(fe));
      w_.downshift(fan, fr.c1, "pair");
      if (!w_.missing(v1, 1)) fail(ErrorCode::kClaimViolated, "fan rotation left color 1 at v1");
      return {PairOutcome::kOneFreed, 0, 0};
    }
    return {PairOutcome::kCertified, 0, 0};
  }

  // ---- no correct 1-edge within distance 2 of xy on its (1,two)-line ----
  Next distance(EdgeId xy) {
    for (int iter = 0; iter < 16; ++iter) {
      two_ = w_.color(xy);
      const auto comp = component_of_edge(g_, w_.coloring(), 1, two_, xy);
      bool any = false;
      for (EdgeId e : comp.edges) any = any || (w_.color(e) == 1 && h_[e] == 1);
      if (!any) {
        count("distance-swap");
        swap_line(xy, "distance");
        return Next::finished();
      }
      const Edge& ed = g_.edge(xy);
      const Line ln = line(xy, ed.u);
      for (const auto* side : {&ln.u, &ln.v}) {
        for (int d : {1, 3}) {
          const Vertex a = at(*side, d), b = at(*side, d + 1);
          if (a && b && !(ln.cycle && static_cast<std::size_t>(d + 1) > ln.length - 1) &&
              correct_one(a, b)) {
            fail(ErrorCode::kDistanceConditionViolated, "correct 1-edge close to the working edge");
          }
        }
      }
      std::array<Vertex, 6> win{};
      if (ln.cycle) {
        if (ln.length < 10) fail(ErrorCode::kDistanceConditionViolated, "short cycle with a correct edge");
        for (int k = 0; k < 6; ++k) win[static_cast<std::size_t>(k)] = ln.v[static_cast<std::size_t>(k)];
        count("distance-cycle");
      } else {
        const std::size_t ua = ln.u.size() - 1;  // edges beyond xy on each side
        const std::size_t vb = ln.v.size() - 1;
        const auto& longer = (ua <= 4) ? ln.v : (vb <= 4 ? ln.u : ln.v);
        if (longer.size() < 6) fail(ErrorCode::kDistanceConditionViolated, "no room for a window");
        for (int k = 0; k < 6; ++k) win[static_cast<std::size_t>(k)] = longer[static_cast<std::size_t>(k)];
        count(ua <= 4 || vb <= 4 ? "distance-short" : "distance-long");
      }
      const auto [i, c] = long_window(win);
      recolor(win[static_cast<std::size_t>(i)], win[static_cast<std::size_t>(i + 1)], c, "distance");
    }
    fail(ErrorCode::kBudgetExceeded, "distance reduction did not terminate");
  }

  Next finish_window(EdgeId e, const std::vector<Vertex>& wv, int i, Color c) {
    recolor(wv[static_cast<std::size_t>(i)], wv[static_cast<std::size_t>(i + 1)], c, "window-cut");
    return distance(e);
  }

  Next dispatch(EdgeId e) {
    two_ = w_.color(e);
    const Edge& ed = g_.edge(e);
    const bool one_u = !w_.missing(ed.u, 1);
    const bool one_v = !w_.missing(ed.v, 1);
    if (!one_u && !one_v) {
      count("single");
      w_.recolor(e, 1, "single");
      return Next::finished();
    }
    if (one_u != one_v) return one_side(e, one_v ? ed.u : ed.v);
    return two_side(e);
  }

  // At most one 1-edge next to e; u1 is the end without one.
  Next one_side(EdgeId e, Vertex u1) {
    const Line ln = line(e, u1);
    const auto& vs = ln.v;
    const int k = static_cast<int>(vs.size());
    if (k <= 3 || !correct_one(at(vs, 3), at(vs, 4))) {
      count("one-side-distance");
      return distance(e);
    }
    const Vertex v1 = at(vs, 1), v2 = at(vs, 2), v3 = at(vs, 3), v4 = at(vs, 4);
    const std::vector<Vertex> wv{u1, v1, v2, v3, v4};
    Frame fr = window({u1, v1, v2, v3, v4});
    if (fr.improved) {
      count("one-side-window");
      return finish_window(e, wv, fr.i, fr.c);
    }
    const EdgeId v34 = edge(v3, v4);
    if (k == 4) {
      if (fr.x2 != u1) {
        const PairResult pr = pair({u1, v1, v2, v3, v4});
        if (pr.outcome == PairOutcome::kWindowFreed) {
          count("one-side-end-window");
          return finish_window(e, wv, pr.i, pr.c);
        }
        if (pr.outcome == PairOutcome::kOneFreed) {
          count("one-side-end-free");
          w_.recolor(e, 1, "one-side-end");
          return Next::finished();
        }
        if (fr.x1 != u1) {
          count("one-side-end-swap");
          swap_line(e, "one-side-end");
          swap_expect(fr.c3, 1, fr.x1, {fr.x1, v2, v3}, "one-side-end");
          w_.recolor(v34, 1, "one-side-end");
          return Next::finished();
        }
        count("one-side-end-x1");
        swap_line(e, "one-side-end");
        swap_expect(fr.c2, two_, v1, {v1, v2, fr.x2}, "one-side-end");
        return distance(v34);
      }
      if (!w_.missing(fr.x1, 1)) {
        count("one-side-end-x2-one");
        swap_expect(fr.c3, two_, fr.x1, {fr.x1, v2, v3}, "one-side-end");
        return distance(e);
      }
      count("one-side-end-x2-two");
      swap_line(e, "one-side-end");
      swap_expect(fr.c3, 1, fr.x1, {fr.x1, v2, v3}, "one-side-end");
      w_.recolor(v34, 1, "one-side-end");
      return Next::finished();
    }
    // v4 interior.
    const Vertex v5 = at(vs, 5);
    const std::vector<Vertex> wv6{u1, v1, v2, v3, v4, v5};
    long_window({u1, v1, v2, v3, v4, v5});
    for (int i = 1; i <= 2; ++i) {
      if (auto c = free_pair(wv6[static_cast<std::size_t>(i)], wv6[static_cast<std::size_t>(i + 1)])) {
        count("one-side-mid-window");
        return finish_window(e, wv6, i, *c);
      }
    }
    fr = window({u1, v1, v2, v3, v4});
    if (fr.improved) {
      count("one-side-mid-window");
      return finish_window(e, wv, fr.i, fr.c);
    }
    if (!w_.missing(v3, fr.c3) || !w_.missing(v4, fr.c3)) {
      fail(ErrorCode::kClaimViolated, "expected the third spoke color free at v3 and v4");
    }
    if (fr.x2 != u1) {
      const PairResult pr = pair({u1, v1, v2, v3, v4});
      if (pr.outcome == PairOutcome::kWindowFreed) {
        count("one-side-mid-window");
        return finish_window(e, wv, pr.i, pr.c);
      }
      if (pr.outcome == PairOutcome::kOneFreed) {
        count("one-side-mid-free");
        w_.recolor(e, 1, "one-side-mid");
        return Next::finished();
      }
    }
    w_.recolor(v34, fr.c3, "one-side-mid");
    swap_line(e, "one-side-mid");
    if (u1 != fr.x1 && u1 != fr.x2) {
      count("one-side-mid-plain");
      swap_expect(1, fr.c3, v4, {v4, v3, v2, fr.x1}, "one-side-mid");
      return Next::finished();
    }
    if (u1 == fr.x1) {
      count("one-side-mid-x1");
      return Next::on(v34);
    }
    if (!w_.missing(fr.x1, two_)) {
      count("one-side-mid-x2-two");
      swap_expect(1, fr.c3, v4, {v4, v3, v2, fr.x1}, "one-side-mid");
      return Next::finished();
    }
    count("one-side-mid-x2-one");
    return distance(v34);
  }

  // Both ends of e carry color 1.
  Next two_side(EdgeId e) {
    const Edge& ed = g_.edge(e);
    Line ln = line(e, ed.u);
    const auto corr = [&](const std::vector<Vertex>& s) {
      return s.size() >= 4 && correct_one(at(s, 3), at(s, 4));
    };
    if (!corr(ln.u) && !corr(ln.v)) {
      count("two-side-distance");
      return distance(e);
    }
    if (!ln.cycle && (ln.u.size() <= 3 || ln.v.size() <= 3)) {
      if (ln.v.size() <= 3) std::swap(ln.u, ln.v);
      return two_side_short(e, ln);
    }
    return two_side_long(e, ln);
  }

  // The u side carries no correct 1-edge near e; v3v4 is correct.
  Next two_side_short(EdgeId e, const Line& ln) {
    const auto& vs = ln.v;
    const Vertex u1 = at(ln.u, 1), v1 = at(vs, 1), v2 = at(vs, 2), v3 = at(vs, 3), v4 = at(vs, 4);
    if (!correct_one(v3, v4)) fail(ErrorCode::kPreconditionViolated, "expected a correct edge at distance 2");
    const std::vector<Vertex> wv{u1, v1, v2, v3, v4};
    const Frame fr = window({u1, v1, v2, v3, v4});
    if (fr.improved) {
      count("two-side-short-window");
      return finish_window(e, wv, fr.i, fr.c);
    }
    if (rest(fr.x1) != others() || w_.missing(fr.x1, two_)) {
      const PairResult pr = pair({u1, v1, v2, v3, v4});
      if (pr.outcome == PairOutcome::kWindowFreed) {
        count("two-side-short-pair-window");
        return finish_window(e, wv, pr.i, pr.c);
      }
      if (pr.outcome == PairOutcome::kOneFreed) {
        count("two-side-short-pair-free");
        return Next::on(e);
      }
      fail(ErrorCode::kClaimViolated, "pair certificate contradicts the palette at x1");
    }
    const EdgeId v34 = edge(v3, v4);
    if (!ln.cycle && vs.size() == 4) {
      count("two-side-short-end");
      swap_line(e, "two-side-short");
      return Next::on(v34);
    }
    const std::vector<Vertex> wv6{u1, v1, v2, v3, v4, at(vs, 5)};
    const auto [i, c] = long_window({u1, v1, v2, v3, v4, at(vs, 5)});
    for (int j = 1; j <= 2; ++j) {
      if (auto cc = free_pair(wv6[static_cast<std::size_t>(j)], wv6[static_cast<std::size_t>(j + 1)])) {
        count("two-side-short-mid-window");
        return finish_window(e, wv6, j, *cc);
      }
    }
    if (i != 3) fail(ErrorCode::kClaimViolated, "long window result vanished");
    count("two-side-short-mid-cut");
    w_.recolor(v34, c, "two-side-short");
    swap_line(e, "two-side-short");
    return Next::on(v34);
  }

  Next two_side_long(EdgeId e, Line ln) {
    auto wv_of = [&](const Line& l) {
      return std::array<Vertex, 5>{at(l.u, 1), at(l.v, 1), at(l.v, 2), at(l.v, 3), at(l.v, 4)};
    };
    auto wu_of = [&](const Line& l) {
      return std::array<Vertex, 5>{at(l.v, 1), at(l.u, 1), at(l.u, 2), at(l.u, 3), at(l.u, 4)};
    };
    {
      const auto wv = wv_of(ln);
      const Frame fv = window(wv);
      if (fv.improved) {
        count("two-side-long-v-window");
        recolor(wv[static_cast<std::size_t>(fv.i)], wv[static_cast<std::size_t>(fv.i + 1)], fv.c, "two-side-long");
        return Next::on(e);
      }
      const auto wu = wu_of(ln);
      const Frame fu = window(wu);
      if (fu.improved) {
        count("two-side-long-u-window");
        recolor(wu[static_cast<std::size_t>(fu.i)], wu[static_cast<std::size_t>(fu.i + 1)], fu.c, "two-side-long");
        return Next::on(e);
      }
      for (const auto& [fr, win] : {std::pair{fv, wv}, std::pair{fu, wu}}) {
        const bool ok = rest(fr.x1) == others() && !w_.missing(fr.x1, two_) &&
                        rest(fr.x2) == others() && !w_.missing(fr.x2, 1);
        if (ok) continue;
        const PairResult pr = pair(win);
        if (pr.outcome == PairOutcome::kCertified) {
          fail(ErrorCode::kClaimViolated, "pair certificate contradicts the spoke palettes");
        }
        count(pr.outcome == PairOutcome::kOneFreed ? "two-side-long-pair-free" : "two-side-long-pair-window");
        if (pr.outcome == PairOutcome::kWindowFreed) {
          recolor(win[static_cast<std::size_t>(pr.i)], win[static_cast<std::size_t>(pr.i + 1)], pr.c, "two-side-long");
        }
        return Next::on(e);
      }
    }
    // Align the u palettes with the v palettes, one interchange at a time.
    for (int i = 1; i <= 3; ++i) {
      const ColorSet pu = rest(at(ln.u, i)), pv = rest(at(ln.v, i));
      if (pu == pv) continue;
      count("two-side-long-align");
      w_.interchange_at(only(pu & ~pv), only(pv & ~pu), at(ln.u, i), "align");
      return Next::on(e);
    }
    const Frame fr = window(wv_of(ln));
    c1_ = fr.c1;
    c2_ = fr.c2;
    c3_ = fr.c3;
    if (ln.cycle && ln.length == 6) {
      count("two-side-long-cycle6");
      const Vertex u1 = at(ln.u, 1), u2 = at(ln.u, 2), u3 = at(ln.u, 3);
      const Vertex v2 = at(ln.v, 2), v3 = at(ln.v, 3);
      const Vertex x1 = nbr(v2, c3_), y1 = nbr(u2, c3_);
      recolor(v3, u3, c3_, "close");
      swap_line(e, "close");
      swap_expect(1, c3_, y1, {y1, u2, u3, v3, v2, x1}, "close");
      (void)u1;
      return Next::finished();
    }
    if (!ln.cycle && ln.u.size() == 4 && ln.v.size() == 4) {
      count("two-side-long-path7");
      const Vertex u2 = at(ln.u, 2), u3 = at(ln.u, 3), u4 = at(ln.u, 4);
      const Vertex v2 = at(ln.v, 2), v3 = at(ln.v, 3), v4 = at(ln.v, 4);
      const Vertex x1 = nbr(v2, c3_), y1 = nbr(u2, c3_);
      swap_line(e, "close");
      swap_expect(1, c3_, u3, {u3, u2, y1}, "close");
      swap_expect(1, c3_, v3, {v3, v2, x1}, "close");
      recolor(u3, u4, 1, "close");
      recolor(v3, v4, 1, "close");
      return Next::finished();
    }
    // Both distance-2 edges must be correct.
    const bool u_end = !ln.cycle && ln.u.size() == 4;
    const bool v_end = !ln.cycle && ln.v.size() == 4;
    const bool u_ok = correct_one(at(ln.u, 3), at(ln.u, 4));
    const bool v_ok = correct_one(at(ln.v, 3), at(ln.v, 4));
    if (u_end && !u_ok) {
      count("two-side-long-u-end-short");
      return two_side_short(e, ln);
    }
    if (v_end && !v_ok) {
      count("two-side-long-v-end-short");
      std::swap(ln.u, ln.v);
      return two_side_short(e, ln);
    }
    if (!v_ok || !u_ok) {
      count("two-side-long-mid-cut");
      const auto& s = !v_ok ? ln.v : ln.u;
      const auto& o = !v_ok ? ln.u : ln.v;
      const std::array<Vertex, 6> win{at(o, 1), at(s, 1), at(s, 2), at(s, 3), at(s, 4), at(s, 5)};
      const auto [i, c] = long_window(win);
      recolor(win[static_cast<std::size_t>(i)], win[static_cast<std::size_t>(i + 1)], c, "two-side-long");
      return Next::on(e);
    }
    if (u_end || v_end) {
      if (v_end) std::swap(ln.u, ln.v);
      return one_end(e, ln);
    }
    return no_end(e, ln);
  }

  // Shapes of interior palettes relative to the aligned frame.
  enum Shape { kA, kB, kC };  // {c1,c2}, {c1,c3}, {c2,c3}
  Shape shape(Vertex x) const {
    const ColorSet p = rest(x);
    if (p == (bit(c1_) | bit(c2_))) return kA;
    if (p == (bit(c1_) | bit(c3_))) return kB;
    if (p == (bit(c2_) | bit(c3_))) return kC;
    fail(ErrorCode::kBadWindow, "fourth vertex palette outside the frame");
  }

  // Path Q of colors (a,b) from s expected to end at `end`, contain `through`
  // (if nonzero) and avoid `avoid` (if nonzero). On violation performs the
  // escape interchange and reports false.
  bool claim_path(Color a, Color b, Vertex s, Vertex end, Vertex through, Vertex avoid,
                  Vertex avoid_v1, Vertex avoid_x1) {
    const auto q = component_at_vertex(g_, w_.coloring(), a, b, s);
    if (!q || q->is_cycle) fail(ErrorCode::kClaimViolated, "claim path missing");
    const bool ok = ends_at(*q, end) && (!through || contains(*q, through)) &&
                    (!avoid || !contains(*q, avoid));
    if (ok) {
      count("claim-held");
      w_.interchange(a, b, q->edges.front(), "claim");
      return true;
    }
    count("claim-escape");
    w_.interchange(a, b, q->edges.front(), "claim-escape");
    if (avoid && contains(*q, avoid) && ends_at(*q, end)) {
      // The far spoke path through `avoid` now frees color 1 next to e.
      const auto r = component_at_vertex(g_, w_.coloring(), 1, c2_, avoid_v1);
      if (r && !r->is_cycle && r->vertices.size() == 3 && contains(*r, avoid) && contains(*r, avoid_x1)) {
        w_.interchange(1, c2_, r->edges.front(), "claim-escape");
      }
    }
    return false;
  }

  Next one_end(EdgeId e, const Line& ln) {
    const Vertex u2 = at(ln.u, 2), u3 = at(ln.u, 3), u4 = at(ln.u, 4);
    const Vertex v1 = at(ln.v, 1), v2 = at(ln.v, 2), v3 = at(ln.v, 3), v4 = at(ln.v, 4);
    const Vertex y1 = nbr(u2, c3_);
    const EdgeId v34 = edge(v3, v4);
    switch (shape(v4)) {
      case kA:
        count("tail-one-a");
        w_.recolor(v34, c3_, "tail-one");
        break;
      case kB:
        count("tail-one-b");
        if (!claim_path(c2_, c3_, v3, v1, v2, u2, at(ln.u, 1), nbr(u2, c2_))) return Next::on(e);
        w_.recolor(v34, c2_, "tail-one");
        break;
      case kC:
        count("tail-one-c");
        if (!claim_path(c1_, c3_, v3, v2, 0, 0, 0, 0)) return Next::on(e);
        w_.recolor(v34, c1_, "tail-one");
        break;
    }
    swap_line(e, "tail-one");
    swap_expect(1, c3_, u3, {u3, u2, y1}, "tail-one");
    recolor(u3, u4, 1, "tail-one");
    return Next::on(v34);
  }

  Next no_end(EdgeId e, Line ln) {
    Shape su = shape(at(ln.u, 4));
    Shape sv = shape(at(ln.v, 4));
    if (su != sv && !(su == kA || (su == kB && sv == kC))) {
      std::swap(ln.u, ln.v);
      std::swap(su, sv);
    }
    const Vertex u1 = at(ln.u, 1), u2 = at(ln.u, 2), u3 = at(ln.u, 3), u4 = at(ln.u, 4);
    const Vertex v1 = at(ln.v, 1), v2 = at(ln.v, 2), v3 = at(ln.v, 3), v4 = at(ln.v, 4);
    const Vertex x1 = nbr(v2, c3_), y1 = nbr(u2, c3_);
    const Vertex x2 = nbr(v2, c2_), y2 = nbr(u2, c2_);
    const EdgeId u34 = edge(u3, u4), v34 = edge(v3, v4);
    if (su == kA && sv == kA) {
      count("tail-two-aa");
      w_.recolor(v34, c3_, "tail-two");
      w_.recolor(u34, c3_, "tail-two");
      swap_line(e, "tail-two");
      swap_expect(1, c3_, u4, {u4, u3, u2, y1}, "tail-two");
      swap_expect(1, c3_, v4, {v4, v3, v2, x1}, "tail-two");
      return Next::finished();
    }
    if (su == kB && sv == kB) {
      count("tail-two-bb");
      if (!claim_path(c2_, c3_, u3, u1, u2, v2, v1, x1)) return Next::on(e);
      if (!claim_path(c2_, c3_, v3, v1, v2, u2, u1, y1)) return Next::on(e);
      w_.recolor(u34, c2_, "tail-two");
      w_.recolor(v34, c2_, "tail-two");
      swap_line(e, "tail-two");
      swap_expect(1, c2_, u4, {u4, u3, u2, y1}, "tail-two");
      swap_expect(1, c2_, v4, {v4, v3, v2, x1}, "tail-two");
      return Next::finished();
    }
    if (su == kC && sv == kC) {
      count("tail-two-cc");
      if (!claim_path(c1_, c3_, u3, u2, 0, 0, 0, 0)) return Next::on(e);
      if (!claim_path(c1_, c3_, v3, v2, 0, 0, 0, 0)) return Next::on(e);
      w_.recolor(u34, c1_, "tail-two");
      w_.recolor(v34, c1_, "tail-two");
      swap_line(e, "tail-two");
      swap_expect(1, c1_, u4, {u4, u3, u2, y1}, "tail-two");
      swap_expect(1, c1_, v4, {v4, v3, v2, x1}, "tail-two");
      return Next::finished();
    }
    if (su == kA && sv == kB) {
      count("tail-two-ab");
      if (!claim_path(c2_, c3_, v3, v1, v2, u2, u1, y1)) return Next::on(e);
      w_.recolor(u34, c3_, "tail-two");
      w_.recolor(v34, c2_, "tail-two");
      swap_line(e, "tail-two");
      swap_expect(1, c3_, u4, {u4, u3, u2, y1}, "tail-two");
      return Next::on(v34);
    }
    if (su == kA && sv == kC) {
      count("tail-two-ac");
      if (!claim_path(c1_, c3_, v3, v2, 0, 0, 0, 0)) return Next::on(e);
      w_.recolor(u34, c3_, "tail-two");
      w_.recolor(v34, c1_, "tail-two");
      swap_line(e, "tail-two");
      swap_expect(1, c3_, u4, {u4, u3, u2, y1}, "tail-two");
      return Next::on(v34);
    }
    // su == kB, sv == kC
    count("tail-two-bc");
    if (!claim_path(c2_, c3_, u3, u1, u2, v2, v1, x1)) return Next::on(e);
    if (!claim_path(c1_, c3_, v3, v2, 0, 0, 0, 0)) return Next::on(e);
    w_.recolor(v34, c1_, "tail-two");
    w_.recolor(u34, c2_, "tail-two");
    swap_line(e, "tail-two");
    swap_expect(1, c1_, v4, {v4, v3, v2, x1}, "tail-two");
    (void)x2;
    (void)y2;
    return Next::on(u34);
  }

  Work& w_;
  const Graph& g_;
  const EdgeColoring& h_;
  Regular4Stats* stats_;
  Color two_ = 2;
  Color c1_ = 3, c2_ = 4, c3_ = 5;
};

}  // namespace

std::size_t regular4_improve(Work& w, const EdgeColoring& h, EdgeId e, Regular4Stats* stats) {
  if (h[e] != 1 || w.color(e) == 1) fail(ErrorCode::kPreconditionViolated, "edge is not a wrong 1-edge");
  Machine machine(w, h, stats);
  const std::size_t before = machine.matched();
  machine.improve(e);
  const std::size_t after = machine.matched();
  if (stats) {
    ++stats->improvements;
    if (after <= before) ++stats->monovariant_violations;
  }
  return after;
}

TransformResult regular4_transform(const Graph& g, const EdgeColoring& f,
                                      const EdgeColoring& h, Regular4Stats* stats) {
  if (!g.is_regular(4)) fail(ErrorCode::kNotRegular4, "graph is not 4-regular");
  require_proper(g, f);
  if (max_used_color(f) > 5) fail(ErrorCode::kColorOutOfRange, "source uses colors above 5");
  if (!is_proper(g, h) || max_used_color(h) > 4) {
    fail(ErrorCode::kTargetNotProper4, "target is not a proper 4-coloring");
  }
  EdgeColoring start = f;
  start.set_palette(5);
  Work w(g, start);
  const std::size_t m = static_cast<std::size_t>(g.edge_count());
  w.set_move_budget(50 * m * m);
  Machine machine(w, h, stats);

  while (auto e = machine.first_wrong()) {
    const std::size_t before = machine.matched();
    if (stats) stats->matched_trace.push_back(before);
    machine.improve(*e);
    const std::size_t after = machine.matched();
    if (after <= before) {
      if (stats) ++stats->monovariant_violations;
      fail(ErrorCode::kPreconditionViolated, "outer iteration did not raise the matched count");
    }
    if (stats) ++stats->improvements;
  }
  if (stats) stats->matched_trace.push_back(machine.matched());

  // Remaining edges form a cubic graph colored from {2,3,4,5} and {2,3,4}.
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (h[e] != 1) keep.push_back(e);
  }
  const EdgeSubgraph sub = edge_subgraph(g, keep);
  EdgeColoring sf(4, keep.size());
  EdgeColoring sh(4, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sf[static_cast<EdgeId>(i)] = w.color(keep[i]) - 1;
    sh[static_cast<EdgeId>(i)] = h[keep[i]] - 1;
  }
  const Transcript rest = low_degree_equalize(sub.graph, sf, sh);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const KempeMove& mv = rest[i];
    w.interchange(mv.a + 1, mv.b + 1, sub.edge_to_parent[static_cast<std::size_t>(mv.rep_edge)],
                  "cubic-" + rest.tag(i));
  }
  if (!w.coloring().same_colors(h)) {
    fail(ErrorCode::kPreconditionViolated, "transform did not end at the target");
  }
  EdgeColoring out = w.coloring();
  return {std::move(out), w.take_transcript()};
}

}  // namespace kempe
