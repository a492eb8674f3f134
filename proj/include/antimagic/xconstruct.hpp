// Copyright 2026 The Antimagic Authors
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

// Antimagic orientations around a small centre set X = {x_1, .., x_t},
// t <= 3, with every other vertex within distance 2 of X.
//
// Layout of the construction:
//
//   A1 = N(X) \ X, A2 = the rest of V \ X.
//   F  = a spanning forest with one star-of-stars per centre: every A1
//        vertex v hangs off one centre by its edge e_v (these form E0), and
//        every A2 vertex hangs off its lowest-id A1 neighbour (E2).
//   E1 = the other edges at X, including G[X]; labels 1..m1.
//   H\X = everything else, Euler-labelled from {m1+1 .. m-n1-n2}.
//   E0, E2 take the top n1+n2 labels, in an order that makes
//     (P1) the A1-sums positive and strictly decreasing along u_1..u_n1,
//     (P2) the A2-sums nonpositive and strictly increasing along v_1..v_n2,
//     (P3) every x-sum below s(v_1).
//
// Only the x-sums can then collide; the repair ladder fixes that by moving
// a few small labels at X (or reversing x_1x_2), touching only X and at
// most the two witnesses y_4, y_8.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/euler.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/random.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

/// Which alternative of the witness hypothesis holds.
enum class WitnessShape {
  none,      // t = 1, or not yet inferred
  x1_to_x2,  // t = 2: x_1 complete to {y_1, y_2, y_3, x_2}
  x1_to_y4,  // t = 2: x_1 complete to {y_1, .., y_4}
  x3_to_y4,  // t = 3: x_3 complete to {y_4, y_9, y_10, y_11}
  x3_to_y8,  // t = 3: x_3 complete to {y_8, y_9, y_10, y_11}
};

struct WitnessConfig {
  std::vector<VertexId> centers;    // x_1..x_t
  std::vector<VertexId> witnesses;  // y_1..y_{4t-1}; empty when t = 1
  WitnessShape shape = WitnessShape::none;
};

struct WitnessCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline bool complete_to(const Graph& g, VertexId x, std::initializer_list<VertexId> targets) {
  return std::all_of(targets.begin(), targets.end(), [&](VertexId y) { return g.adjacent(x, y); });
}

inline bool in_range(const Graph& g, VertexId v) { return v >= 0 && v < g.order(); }

}  // namespace detail

/// The shape that the witnesses actually satisfy, preferring the y_4
/// alternative for t = 2 and the y_4 alternative for t = 3.
inline WitnessShape infer_shape(const Graph& g, const WitnessConfig& w) {
  const auto& x = w.centers;
  const auto& y = w.witnesses;
  if (x.size() == 2 && y.size() == 7) {
    if (detail::complete_to(g, x[0], {y[0], y[1], y[2], y[3]})) return WitnessShape::x1_to_y4;
    if (detail::complete_to(g, x[0], {y[0], y[1], y[2], x[1]})) return WitnessShape::x1_to_x2;
  }
  if (x.size() == 3 && y.size() == 11) {
    if (detail::complete_to(g, x[2], {y[3], y[8], y[9], y[10]})) return WitnessShape::x3_to_y4;
    if (detail::complete_to(g, x[2], {y[7], y[8], y[9], y[10]})) return WitnessShape::x3_to_y8;
  }
  return WitnessShape::none;
}

/// Checks every hypothesis of the centre-set construction. Reasons:
/// "centers", "neighbors", "edge-count", "witness-count",
/// "witness-distinct", "witness-adjacency", "distance".
inline WitnessCheck validate_witnesses(const Graph& g, const WitnessConfig& w) {
  const auto& x = w.centers;
  const auto& y = w.witnesses;
  const int t = static_cast<int>(x.size());
  const int n = g.order();
  const int m = g.size();
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };

  if (t < 1 || t > 3) return fail("centers");
  for (int i = 0; i < t; ++i) {
    if (!detail::in_range(g, x[i])) return fail("centers");
    for (int j = 0; j < i; ++j)
      if (x[i] == x[j]) return fail("centers");
  }
  if (t == 1 && g.degree(x[0]) < 2) return fail("neighbors");
  if (t == 2 && m < 2 * n - 5) return fail("edge-count");
  if (t == 3 && m < 2 * n - 4) return fail("edge-count");
  if (static_cast<int>(y.size()) != (t == 1 ? 0 : 4 * t - 1)) return fail("witness-count");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!detail::in_range(g, y[i]) || std::find(x.begin(), x.end(), y[i]) != x.end()) return fail("witness-distinct");
    for (std::size_t j = 0; j < i; ++j)
      if (y[i] == y[j]) return fail("witness-distinct");
  }
  if (t == 2) {
    const WitnessShape shape = w.shape == WitnessShape::none ? infer_shape(g, w) : w.shape;
    bool x1_ok = false;
    if (shape == WitnessShape::x1_to_y4) x1_ok = detail::complete_to(g, x[0], {y[0], y[1], y[2], y[3]});
    if (shape == WitnessShape::x1_to_x2) x1_ok = detail::complete_to(g, x[0], {y[0], y[1], y[2], x[1]});
    if (!x1_ok || !detail::complete_to(g, x[1], {y[3], y[4], y[5], y[6]})) return fail("witness-adjacency");
  }
  if (t == 3) {
    const WitnessShape shape = w.shape == WitnessShape::none ? infer_shape(g, w) : w.shape;
    bool x3_ok = false;
    if (shape == WitnessShape::x3_to_y4) x3_ok = detail::complete_to(g, x[2], {y[3], y[8], y[9], y[10]});
    if (shape == WitnessShape::x3_to_y8) x3_ok = detail::complete_to(g, x[2], {y[7], y[8], y[9], y[10]});
    if (!x3_ok || !detail::complete_to(g, x[0], {y[0], y[1], y[2], y[3]}) ||
        !detail::complete_to(g, x[1], {y[3], y[4], y[5], y[6], y[7]}))
      return fail("witness-adjacency");
  }
  const auto dist = bfs_distances(g, std::span<const VertexId>(x));
  for (VertexId v = 0; v < n; ++v)
    if (dist[v] > 2) return fail("distance");
  return {true, {}};
}

/// The spanning forest around X and the A1/A2 split.
struct ForestSplit {
  std::vector<VertexId> a1;  // ascending
  std::vector<VertexId> a2;  // ascending
  /// Per vertex: index i of the forest component F_i holding it.
  std::vector<int> component;
  /// Per vertex outside X: its unique forest edge toward X.
  std::vector<EdgeId> forest_edge;
  std::vector<EdgeId> e0;  // edges e_v, ascending id
  std::vector<char> in_forest;
};

namespace detail {

/// Fixed pieces of the layout: which witnesses play y_4 and y_8, and which
/// A1 vertices must hang off which centre.
struct Anchors {
  std::vector<VertexId> centers;
  std::optional<VertexId> y4;
  std::optional<VertexId> y8;
  std::vector<std::pair<VertexId, int>> fixed;  // (A1 vertex, centre index)
  /// Unfixed A1 vertices go to the least-loaded adjacent centre instead of
  /// the lowest-index one.
  bool balance = false;
};

inline Anchors anchors_from(const WitnessConfig& w) {
  Anchors a;
  a.centers = w.centers;
  const auto& y = w.witnesses;
  const int t = static_cast<int>(w.centers.size());
  if (t == 2) {
    // y_1..y_3 -> x_1, y_4..y_7 -> x_2
    for (int k = 0; k < 7; ++k) a.fixed.emplace_back(y[k], k < 3 ? 0 : 1);
    a.y4 = y[3];
  } else if (t == 3) {
    // y_1..y_3 -> x_1, y_4..y_8 -> x_2, y_9..y_11 -> x_3
    for (int k = 0; k < 11; ++k) a.fixed.emplace_back(y[k], k < 3 ? 0 : (k < 8 ? 1 : 2));
    a.y4 = y[3];
    a.y8 = y[7];
  }
  return a;
}

inline ForestSplit build_forest(const Graph& g, const Anchors& anchors) {
  const int n = g.order();
  const auto& x = anchors.centers;
  const int t = static_cast<int>(x.size());
  ForestSplit f;
  f.component.assign(static_cast<std::size_t>(n), -1);
  f.forest_edge.assign(static_cast<std::size_t>(n), -1);
  f.in_forest.assign(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> x_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < t; ++i) {
    x_index[x[i]] = i;
    f.component[x[i]] = i;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (x_index[v] != -1) continue;
    bool near = false;
    for (VertexId c : x) near = near || g.adjacent(v, c);
    (near ? f.a1 : f.a2).push_back(v);
  }
  std::vector<int> load(static_cast<std::size_t>(t), 0);
  for (const auto& [v, i] : anchors.fixed) {
    if (!g.adjacent(v, x.at(static_cast<std::size_t>(i)))) throw ConstructionBug("fixed anchor is not adjacent to its centre");
    if (f.component[v] != -1) throw ConstructionBug("anchor assigned twice");
    f.component[v] = i;
    ++load[i];
  }
  // Vertices adjacent to a single centre first, so balancing sees them.
  std::vector<VertexId> pending;
  for (VertexId v : f.a1) {
    if (f.component[v] != -1) continue;
    int adjacent = 0;
    int only = -1;
    for (int i = 0; i < t; ++i)
      if (g.adjacent(v, x[i])) ++adjacent, only = i;
    if (adjacent == 1 || !anchors.balance) {
      int pick = only;
      if (!anchors.balance)
        for (int i = t - 1; i >= 0; --i)
          if (g.adjacent(v, x[i])) pick = i;
      f.component[v] = pick;
      ++load[pick];
    } else {
      pending.push_back(v);
    }
  }
  for (VertexId v : pending) {
    int pick = -1;
    for (int i = 0; i < t; ++i)
      if (g.adjacent(v, x[i]) && (pick == -1 || load[i] < load[pick])) pick = i;
    f.component[v] = pick;
    ++load[pick];
  }
  for (VertexId v : f.a1) {
    const EdgeId e = *g.find_edge(v, x[f.component[v]]);
    f.forest_edge[v] = e;
    f.in_forest[e] = 1;
    f.e0.push_back(e);
  }
  std::sort(f.e0.begin(), f.e0.end());
  std::vector<char> in_a1(static_cast<std::size_t>(n), 0);
  for (VertexId v : f.a1) in_a1[v] = 1;
  for (VertexId v : f.a2) {
    VertexId parent = -1;
    for (const auto& inc : g.incident(v)) {
      if (in_a1[inc.neighbor]) {
        parent = inc.neighbor;
        break;
      }
    }
    if (parent == -1) throw ConstructionBug("vertex at distance > 2 from the centres");
    const EdgeId e = *g.find_edge(v, parent);
    f.forest_edge[v] = e;
    f.in_forest[e] = 1;
    f.component[v] = f.component[parent];
  }
  return f;
}

}  // namespace detail

/// Forest of a validated witness configuration.
inline ForestSplit build_forest(const Graph& g, const WitnessConfig& w) {
  if (auto check = validate_witnesses(g, w); !check) throw RejectedInstance(check.reason);
  return detail::build_forest(g, detail::anchors_from(w));
}

/// Labeling case: whether A1 is at most as large as A2.
enum class XCase { a1_not_larger, a1_larger };

enum class RepairBranch {
  none,
  complete_swap12,   // y_4 complete to X: exchange labels of x_1y_4, x_2y_4
  complete_swap13,   // ... of x_1y_4, x_3y_4
  complete_swap23,   // ... of x_2y_4, x_3y_4
  reverse_x1x2,      // t = 2, y_4 not adjacent to x_1: reverse the arc x_1x_2
  split_swap12,      // t = 3, y_4 not adjacent to x_3: exchange on x_1y_4, x_2y_4
  split_swap23,      // ... on x_2y_8, x_3y_8
  split_relabel,     // ... the four-edge relabel x_1y_4=a, x_2y_4=1, x_2y_8=2, x_3y_8=b
  adjacent_reorder,  // ... b = a+1 and s(y_4) = s(y_8)-1: exchange a and b
  adjacent_shift,    // ... b = a+1 and s(y_4) <= s(y_8)-3
  adjacent_double,   // ... b = a+1 and s(y_4) = s(y_8)-2
};

inline const char* to_string(RepairBranch b) {
  switch (b) {
    case RepairBranch::none: return "none";
    case RepairBranch::complete_swap12: return "complete-swap-1-2";
    case RepairBranch::complete_swap13: return "complete-swap-1-3";
    case RepairBranch::complete_swap23: return "complete-swap-2-3";
    case RepairBranch::reverse_x1x2: return "reverse-x1x2";
    case RepairBranch::split_swap12: return "split-swap-1-2";
    case RepairBranch::split_swap23: return "split-swap-2-3";
    case RepairBranch::split_relabel: return "split-relabel";
    case RepairBranch::adjacent_reorder: return "adjacent-reorder";
    case RepairBranch::adjacent_shift: return "adjacent-shift";
    case RepairBranch::adjacent_double: return "adjacent-double";
  }
  return "?";
}

struct XTrace {
  std::vector<VertexId> centers;
  std::optional<VertexId> y4;
  std::optional<VertexId> y8;
  ForestSplit forest;
  std::vector<EdgeId> e1;
  std::vector<EdgeId> e2;  // e_i = forest edge of v_i, in v-order
  std::vector<EdgeId> inner;  // edges of H \ X
  XCase split = XCase::a1_not_larger;
  Flavor flavor = Flavor::increasing;
  std::vector<VertexId> u_order;
  std::vector<VertexId> v_order;
  Label m1 = 0;
  VertexSums pre_repair_sums;
  /// Branches applied, in order; {none} when the x-sums were distinct.
  std::vector<RepairBranch> repairs;
  /// Vertices whose sums the repair changed.
  std::vector<VertexId> touched;
  /// Set when an instance with at most four vertices fell back to
  /// exhaustive search.
  bool small_fallback = false;
};

struct XOptions {
  /// 0 keeps the free labels of E1 in ascending edge-id order; any other
  /// value shuffles them (the fixed labels at y_4, y_8 and G[X] stay put).
  std::uint64_t e1_shuffle_seed = 0;
};

struct XState {
  LabeledOrientation labeled;
  XTrace trace;
};

struct XConstruction {
  LabeledOrientation result;
  XTrace trace;
};

namespace detail {

inline EdgeId edge_between(const Graph& g, VertexId a, VertexId b) {
  auto e = g.find_edge(a, b);
  if (!e) throw ConstructionBug("repair needs an edge that does not exist");
  return *e;
}

inline void orient_centre_edges(const Graph& g, std::span<const VertexId> x, std::span<const EdgeId> inside,
                                Orientation& d) {
  // At most one arc of G[X] enters each centre.
  auto index_of = [&](VertexId v) { return static_cast<int>(std::find(x.begin(), x.end(), v) - x.begin()); };
  if (inside.size() == 3) {
    for (int i = 0; i < 3; ++i) d.orient(g, *g.find_edge(x[i], x[(i + 1) % 3]), x[i]);
  } else if (inside.size() == 2) {
    std::vector<int> deg(3, 0);
    for (EdgeId e : inside) ++deg[index_of(g.edge(e).u)], ++deg[index_of(g.edge(e).v)];
    const int mid = static_cast<int>(std::find(deg.begin(), deg.end(), 2) - deg.begin());
    int ends[2];
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != mid) ends[k++] = i;
    d.orient(g, *g.find_edge(x[ends[0]], x[mid]), x[ends[0]]);
    d.orient(g, *g.find_edge(x[mid], x[ends[1]]), x[mid]);
  } else if (inside.size() == 1) {
    const Edge& ed = g.edge(inside[0]);
    const VertexId from = index_of(ed.u) < index_of(ed.v) ? ed.u : ed.v;
    d.orient(g, inside[0], from);
  }
}

inline XState label_x_instance(const Graph& g, const Anchors& anchors, const XOptions& options) {
  const int n = g.order();
  const int m = g.size();
  const auto& x = anchors.centers;
  const int t = static_cast<int>(x.size());

  XState st;
  XTrace& tr = st.trace;
  tr.centers = x;
  tr.y4 = anchors.y4;
  tr.y8 = anchors.y8;
  tr.forest = build_forest(g, anchors);
  const ForestSplit& f = tr.forest;
  const int n1 = static_cast<int>(f.a1.size());
  const int n2 = static_cast<int>(f.a2.size());

  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (VertexId v : x) in_x[v] = 1;
  std::vector<EdgeId> inside;  // E(G[X])
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (f.in_forest[e]) continue;
    if (in_x[ed.u] || in_x[ed.v]) tr.e1.push_back(e);
    if (in_x[ed.u] && in_x[ed.v]) inside.push_back(e);
  }
  tr.m1 = static_cast<Label>(tr.e1.size());

  Orientation d(m);
  ArcLabeling tau(m);

  // H \ X, Euler-labelled from {m1+1 .. m-n1-n2}.
  const Graph inner = edge_subgraph(
      g, [&](EdgeId e) { return !f.in_forest[e] && !in_x[g.edge(e).u] && !in_x[g.edge(e).v]; }, &tr.inner);
  tr.split = n1 <= n2 ? XCase::a1_not_larger : XCase::a1_larger;
  tr.flavor = n1 <= n2 ? Flavor::increasing : Flavor::decreasing;
  const EulerLabelingResult euler = orient_and_label(inner, tr.m1, tr.flavor);
  for (EdgeId k = 0; k < inner.size(); ++k) {
    d.orient(g, tr.inner[k], euler.orientation.tail(inner, k));
    tau[tr.inner[k]] = euler.labeling[k];
  }
  const VertexSums inner_sums = vertex_sums(inner, euler.orientation, euler.labeling);

  // Forest arcs leave X and leave A2; E1 arcs leave X.
  for (VertexId v = 0; v < n; ++v) {
    const EdgeId e = f.forest_edge[v];
    if (e == -1) continue;
    const VertexId other = g.edge(e).other(v);
    d.orient(g, e, in_x[other] ? other : v);
  }
  for (EdgeId e : tr.e1) {
    const Edge& ed = g.edge(e);
    if (in_x[ed.u] != in_x[ed.v]) d.orient(g, e, in_x[ed.u] ? ed.u : ed.v);
  }
  std::sort(inside.begin(), inside.end(), [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });
  orient_centre_edges(g, x, inside, d);

  // tau_1 on E1.
  std::vector<char> labelled(static_cast<std::size_t>(m), 0);
  Label next = 1;
  auto give = [&](EdgeId e, Label l) {
    tau[e] = l;
    labelled[e] = 1;
  };
  if (t == 2) {
    if (anchors.y4 && g.adjacent(x[0], *anchors.y4)) {
      give(edge_between(g, x[0], *anchors.y4), 1);
    } else {
      give(edge_between(g, x[0], x[1]), 1);
    }
    next = 2;
  } else if (t == 3) {
    give(edge_between(g, x[0], *anchors.y4), 1);
    if (g.adjacent(x[2], *anchors.y4)) give(edge_between(g, x[2], *anchors.y4), 2);
    else give(edge_between(g, x[2], *anchors.y8), 2);
    next = 3;
  }
  for (EdgeId e : inside)
    if (!labelled[e]) give(e, next++);
  std::vector<EdgeId> free_edges;
  for (EdgeId e : tr.e1)
    if (!labelled[e]) free_edges.push_back(e);
  if (options.e1_shuffle_seed != 0) {
    Lcg64 rng(options.e1_shuffle_seed);
    rng.shuffle(free_edges);
  }
  for (EdgeId e : free_edges) give(e, next++);

  // v_1..v_n2 by Euler sum ascending; E2 labels.
  tr.v_order = f.a2;
  std::stable_sort(tr.v_order.begin(), tr.v_order.end(),
                   [&](VertexId a, VertexId b) { return inner_sums[a] < inner_sums[b]; });
  for (int i = 0; i < n2; ++i) {
    const EdgeId e = f.forest_edge[tr.v_order[i]];
    tr.e2.push_back(e);
    tau[e] = tr.split == XCase::a1_not_larger ? m - n1 - i : m - i;
  }

  // u_1..u_n1 by partial sum descending; E0 labels.
  const VertexSums partial = partial_sums(g, d, tau);
  tr.u_order = f.a1;
  std::stable_sort(tr.u_order.begin(), tr.u_order.end(),
                   [&](VertexId a, VertexId b) { return partial[a] > partial[b]; });
  for (int i = 0; i < n1; ++i) {
    const EdgeId e = f.forest_edge[tr.u_order[i]];
    tau[e] = tr.split == XCase::a1_not_larger ? m - i : m - n2 - i;
  }

  st.labeled = {std::move(d), std::move(tau)};
  if (!st.labeled.labeling.is_bijection()) throw ConstructionBug("label windows overlap");
  tr.pre_repair_sums = vertex_sums(g, st.labeled.orientation, st.labeled.labeling);
  tr.repairs.clear();
  return st;
}

/// One rung of the repair ladder. Returns false when the x-sums are
/// already pairwise distinct.
inline bool repair_step(const Graph& g, XState& st) {
  XTrace& tr = st.trace;
  auto& d = st.labeled.orientation;
  auto& tau = st.labeled.labeling;
  const auto& x = tr.centers;
  const int t = static_cast<int>(x.size());
  if (t < 2) return false;
  const VertexSums s = vertex_sums(g, d, tau);
  const std::int64_t s1 = s[x[0]];
  const std::int64_t s2 = s[x[1]];
  const std::int64_t s3 = t == 3 ? s[x[2]] : s1 - 1;  // s3 unused for t = 2
  if (s1 != s2 && (t == 2 || (s1 != s3 && s2 != s3))) return false;

  auto swap_labels = [&](EdgeId e, EdgeId f) { std::swap(tau[e], tau[f]); };
  auto touch = [&](std::initializer_list<VertexId> vs) {
    for (VertexId v : vs)
      if (std::find(tr.touched.begin(), tr.touched.end(), v) == tr.touched.end()) tr.touched.push_back(v);
  };
  auto apply = [&](RepairBranch b) { tr.repairs.push_back(b); };

  const bool have_y4 = tr.y4.has_value();
  const bool y4_complete =
      have_y4 && std::all_of(x.begin(), x.end(), [&](VertexId c) { return g.adjacent(c, *tr.y4); });

  if (y4_complete) {
    const VertexId y4 = *tr.y4;
    const EdgeId e1 = edge_between(g, x[0], y4);
    const EdgeId e2 = edge_between(g, x[1], y4);
    const std::int64_t a = tau[e2];
    if (t == 2) {
      swap_labels(e1, e2);
      touch({x[0], x[1]});
      apply(RepairBranch::complete_swap12);
      return true;
    }
    const EdgeId e3 = edge_between(g, x[2], y4);
    if ((s1 == s2 && s2 >= s3) || (s1 == s3 && s3 < s2) || (s2 == s3 && s3 < s1 && s1 != s2 + a - 2)) {
      swap_labels(e2, e3);
      touch({x[1], x[2]});
      apply(RepairBranch::complete_swap23);
    } else if ((s1 == s2 && s2 < s3) || (s1 == s3 && s3 > s2 && s2 != s1 - 1)) {
      swap_labels(e1, e3);
      touch({x[0], x[2]});
      apply(RepairBranch::complete_swap13);
    } else if ((s2 == s3 && s3 > s1) || (s2 == s3 && s3 < s1 && s1 == s2 + a - 2) ||
               (s1 == s3 && s3 > s2 && s2 == s1 - 1)) {
      swap_labels(e1, e2);
      touch({x[0], x[1]});
      apply(RepairBranch::complete_swap12);
    } else {
      throw ConstructionBug("no repair branch applies");
    }
    return true;
  }

  if (t == 2) {
    const EdgeId e = edge_between(g, x[0], x[1]);
    if (tau[e] != 1) throw ConstructionBug("x1x2 does not carry label 1");
    if (d.tail(g, e) != x[0]) d.reverse(e);  // make it leave x_1 first
    d.reverse(e);
    touch({x[0], x[1]});
    apply(RepairBranch::reverse_x1x2);
    return true;
  }

  if (!have_y4 || !tr.y8) throw ConstructionBug("repair needs y4 and y8");
  const VertexId y4 = *tr.y4;
  const VertexId y8 = *tr.y8;
  const EdgeId e14 = edge_between(g, x[0], y4);
  const EdgeId e24 = edge_between(g, x[1], y4);
  const EdgeId e28 = edge_between(g, x[1], y8);
  const EdgeId e38 = edge_between(g, x[2], y8);
  const std::int64_t a = tau[e24];
  const std::int64_t b = tau[e28];
  const std::int64_t c1 = s2 + a - 1;
  const bool lifted = c1 == s3 || c1 == s1 - (a - 1);

  if ((s2 == s3 && s3 >= s1) || (s1 == s2 && s2 < s3 && s3 != s2 + a - 1) || (s1 == s3 && s3 > s2 && !lifted)) {
    swap_labels(e14, e24);
    touch({x[0], x[1]});
    apply(RepairBranch::split_swap12);
  } else if ((s1 == s2 && s2 > s3) || (s1 == s3 && s3 < s2) || (s2 == s3 && s3 < s1 && s1 != s2 + b - 2)) {
    swap_labels(e28, e38);
    touch({x[1], x[2]});
    apply(RepairBranch::split_swap23);
  } else if ((s1 == s2 && s2 < s3 && s3 == s2 + a - 1) || (s2 == s3 && s3 < s1 && s1 == s2 + b - 2) ||
             (s1 == s3 && s3 > s2 && lifted && b != a + 1)) {
    const Label l14 = tau[e14];
    const Label l38 = tau[e38];
    tau[e14] = a;
    tau[e24] = l14;
    tau[e28] = l38;
    tau[e38] = b;
    touch({x[0], x[1], x[2]});
    apply(RepairBranch::split_relabel);
  } else if (s1 == s3 && s3 > s2 && lifted && b == a + 1) {
    // y_8 and y_4 are consecutive in the u-order: u_l = y_8, u_{l+1} = y_4.
    const std::int64_t sy4 = s[y4];
    const std::int64_t sy8 = s[y8];
    if (sy4 == sy8 - 1) {
      swap_labels(e24, e28);
      std::iter_swap(std::find(tr.u_order.begin(), tr.u_order.end(), y8),
                     std::find(tr.u_order.begin(), tr.u_order.end(), y4));
      touch({y4, y8});
      apply(RepairBranch::adjacent_reorder);
    } else if (sy4 <= sy8 - 3) {
      swap_labels(e14, e38);
      touch({x[0], x[2], y4, y8});
      apply(RepairBranch::adjacent_shift);
    } else if (sy4 == sy8 - 2) {
      swap_labels(e14, e38);
      swap_labels(e24, e28);
      touch({x[0], x[2], y4, y8});
      apply(RepairBranch::adjacent_double);
    } else {
      throw ConstructionBug("u-order violated at y4, y8");
    }
  } else {
    throw ConstructionBug("no repair branch applies");
  }
  return true;
}

}  // namespace detail

/// Runs the repair ladder on a labelled state until the x-sums are pairwise
/// distinct, then re-verifies the whole labeling from scratch.
inline XConstruction repair_x_sums(const Graph& g, XState state) {
  state.trace.repairs.clear();
  state.trace.touched.clear();
  for (int rung = 0; rung < 4 && detail::repair_step(g, state); ++rung) {
  }
  if (state.trace.repairs.empty()) state.trace.repairs.push_back(RepairBranch::none);
  if (!is_antimagic(g, state.labeled)) throw ConstructionBug("centre-set construction failed verification");
  return {std::move(state.labeled), std::move(state.trace)};
}

/// The labelled state before any repair; exposed for property tests.
inline XState label_x_instance(const Graph& g, const WitnessConfig& w, const XOptions& options = {}) {
  if (auto check = validate_witnesses(g, w); !check) throw RejectedInstance(check.reason);
  if (!is_connected(g)) throw RejectedInstance("G is connected");
  return detail::label_x_instance(g, detail::anchors_from(w), options);
}

struct XPropertyReport {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
};

/// Checks the ordering properties of a labelled state against `sums`.
inline XPropertyReport check_x_properties(const Graph& g, const XTrace& tr, const VertexSums& s,
                                          const ArcLabeling& tau) {
  XPropertyReport r;
  const std::int64_t m = g.size();
  const std::int64_t n1 = static_cast<std::int64_t>(tr.u_order.size());
  const std::int64_t n2 = static_cast<std::int64_t>(tr.v_order.size());
  r.p1 = true;
  for (std::size_t i = 0; i < tr.u_order.size(); ++i) {
    if (s[tr.u_order[i]] <= 0) r.p1 = false;
    if (i > 0 && !(s[tr.u_order[i - 1]] > s[tr.u_order[i]])) r.p1 = false;
  }
  r.p2 = true;
  for (std::size_t i = 0; i < tr.v_order.size(); ++i) {
    if (s[tr.v_order[i]] > 0) r.p2 = false;
    if (i > 0 && !(s[tr.v_order[i - 1]] < s[tr.v_order[i]])) r.p2 = false;
  }
  if (n2 > 0) {
    const std::int64_t floor_v1 = tr.split == XCase::a1_not_larger ? -2 * (m - n1) + 1 : -2 * m + n1 + n2;
    if (s[tr.v_order[0]] < floor_v1) r.p2 = false;
  }
  const std::int64_t ceiling = n2 > 0 ? s[tr.v_order[0]] : 0;
  r.p3 = true;
  for (VertexId c : tr.centers)
    if (!(s[c] < ceiling)) r.p3 = false;
  if (tr.centers.size() >= 2 && tr.y4) {
    std::int64_t lifted = s[tr.centers[1]] + tau[*g.find_edge(tr.centers[1], *tr.y4)];
    if (tr.centers.size() == 3 && tr.y8) lifted += tau[*g.find_edge(tr.centers[1], *tr.y8)];
    if (!(lifted < ceiling)) r.p3 = false;
  }
  return r;
}

/// Antimagic orientation for a graph and a validated centre set with its
/// witnesses. Graphs on at most four vertices that the layout cannot
/// separate fall back to exhaustive search.
inline XConstruction construct_x_orientation(const Graph& g, const WitnessConfig& w, const XOptions& options = {}) {
  XState st = label_x_instance(g, w, options);
  try {
    return repair_x_sums(g, std::move(st));
  } catch (const ConstructionBug&) {
    if (g.order() > 4) throw;
  }
  auto witness = oracle_antimagic_exists(g);
  if (!witness) throw ConstructionBug("no antimagic orientation on a small instance");
  XConstruction out{std::move(*witness), label_x_instance(g, w, options).trace};
  out.trace.small_fallback = true;
  return out;
}

/// Search for witnesses y_1..y_{4t-1} around the given centres. `y4` and
/// `y8` pin those two witnesses when set.
inline std::optional<WitnessConfig> find_witnesses(const Graph& g, std::span<const VertexId> centers,
                                                   std::optional<VertexId> y4 = std::nullopt,
                                                   std::optional<VertexId> y8 = std::nullopt) {
  const int t = static_cast<int>(centers.size());
  WitnessConfig w;
  w.centers.assign(centers.begin(), centers.end());
  if (t == 1) return validate_witnesses(g, w) ? std::optional(w) : std::nullopt;
  if (t != 2 && t != 3) return std::nullopt;
  const int slots = 4 * t - 1;
  // Required neighbourhoods per slot (indices into centers).
  std::vector<std::vector<int>> need(static_cast<std::size_t>(slots));
  if (t == 2) {
    for (int k = 0; k < 3; ++k) need[k] = {0};
    need[3] = {1};
    for (int k = 4; k < 7; ++k) need[k] = {1};
  } else {
    for (int k = 0; k < 3; ++k) need[k] = {0};
    need[3] = {0, 1};
    for (int k = 4; k < 8; ++k) need[k] = {1};
    for (int k = 8; k < 11; ++k) need[k] = {2};
  }
  std::vector<std::optional<VertexId>> pinned(static_cast<std::size_t>(slots));
  pinned[3] = y4;
  if (t == 3) pinned[7] = y8;

  std::vector<std::vector<VertexId>> options(static_cast<std::size_t>(slots));
  for (int k = 0; k < slots; ++k) {
    if (pinned[k]) {
      options[k] = {*pinned[k]};
      continue;
    }
    for (VertexId v = 0; v < g.order(); ++v) {
      if (std::find(centers.begin(), centers.end(), v) != centers.end()) continue;
      bool ok = std::all_of(need[k].begin(), need[k].end(), [&](int i) { return g.adjacent(v, centers[i]); });
      if (ok) options[k].push_back(v);
    }
  }
  // Fill the most constrained slots first.
  std::vector<int> order(static_cast<std::size_t>(slots));
  for (int k = 0; k < slots; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return options[a].size() < options[b].size(); });

  w.witnesses.assign(static_cast<std::size_t>(slots), -1);
  long budget = 200000;
  auto place = [&](auto&& self, int depth) -> bool {
    if (--budget < 0) return false;
    if (depth == slots) {
      w.shape = WitnessShape::none;
      return static_cast<bool>(validate_witnesses(g, w));
    }
    const int k = order[depth];
    for (VertexId v : options[k]) {
      if (std::find(w.witnesses.begin(), w.witnesses.end(), v) != w.witnesses.end()) continue;
      w.witnesses[k] = v;
      if (self(self, depth + 1)) return true;
      w.witnesses[k] = -1;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  w.shape = infer_shape(g, w);
  return w;
}

/// Shared-witness variant for centre sets that dominate the graph:
///   t = 2: x_1 is adjacent to x_2 or shares a neighbour with it;
///   t = 3: e(G) >= 2|G|-4, y_1 complete to {x_1, x_2}, y_2 complete to
///          {x_2, x_3}.
/// The layout is the centre-set one with y_4 := the shared neighbour
/// (t = 2) or y_4 := y_1, y_8 := y_2 (t = 3), and no guarantee on the forest
/// degrees. The result is verifier-gated; nullopt means no variant passed.
inline std::optional<XConstruction> construct_corollary_main(const Graph& g, std::span<const VertexId> centers,
                                                             std::optional<VertexId> y1 = std::nullopt,
                                                             std::optional<VertexId> y2 = std::nullopt) {
  const int t = static_cast<int>(centers.size());
  const int n = g.order();
  if (t != 2 && t != 3) throw RejectedInstance("t in {2, 3}");
  for (VertexId c : centers)
    if (!detail::in_range(g, c)) throw RejectedInstance("centres are vertices");
  if (!is_connected(g)) throw RejectedInstance("G is connected");
  const auto dist = bfs_distances(g, centers);
  for (VertexId v = 0; v < n; ++v)
    if (dist[v] > 1) throw RejectedInstance("every vertex outside X is adjacent to X");

  std::vector<detail::Anchors> variants;
  if (t == 2) {
    std::vector<VertexId> shared;
    for (VertexId v = 0; v < n; ++v)
      if (v != centers[0] && v != centers[1] && g.adjacent(v, centers[0]) && g.adjacent(v, centers[1]))
        shared.push_back(v);
    if (shared.empty() && !g.adjacent(centers[0], centers[1])) throw RejectedInstance("|N(x1) ∩ N[x2]| >= 1");
    for (bool balance : {true, false}) {
      for (VertexId y : shared) {
        detail::Anchors a;
        a.centers.assign(centers.begin(), centers.end());
        a.y4 = y;
        a.fixed = {{y, 1}};
        a.balance = balance;
        variants.push_back(a);
      }
      if (g.adjacent(centers[0], centers[1])) {
        detail::Anchors a;
        a.centers.assign(centers.begin(), centers.end());
        a.balance = balance;
        variants.push_back(a);
      }
    }
  } else {
    if (g.size() < 2 * n - 4) throw RejectedInstance("e(G) >= 2|G|-4");
    if (!y1 || !y2 || *y1 == *y2 || !detail::in_range(g, *y1) || !detail::in_range(g, *y2) ||
        std::find(centers.begin(), centers.end(), *y1) != centers.end() ||
        std::find(centers.begin(), centers.end(), *y2) != centers.end())
      throw RejectedInstance("distinct shared witnesses y1, y2 outside X");
    if (!g.adjacent(*y1, centers[0]) || !g.adjacent(*y1, centers[1]))
      throw RejectedInstance("y1 complete to {x1, x2}");
    if (!g.adjacent(*y2, centers[1]) || !g.adjacent(*y2, centers[2]))
      throw RejectedInstance("y2 complete to {x2, x3}");
    for (bool balance : {true, false}) {
      detail::Anchors a;
      a.centers.assign(centers.begin(), centers.end());
      a.y4 = *y1;
      a.y8 = *y2;
      a.fixed = {{*y1, 1}, {*y2, 1}};
      a.balance = balance;
      variants.push_back(a);
    }
  }
  for (const auto& anchors : variants) {
    try {
      XState st = detail::label_x_instance(g, anchors, {});
      return repair_x_sums(g, std::move(st));
    } catch (const ConstructionBug&) {
      // next variant
    }
  }
  return std::nullopt;
}

}  // namespace antimagic
