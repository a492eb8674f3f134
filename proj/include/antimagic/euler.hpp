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

// Euler-tour orientation and labeling from a label window {p+1..p+m}.
//
// Walking an Euler tour of the graph (with odd-degree vertices paired by
// extra edges) and numbering the original edges in tour order makes every
// pass through a vertex between two consecutive original edges contribute
// exactly -1 (increasing labels) or +1 (decreasing labels). This keeps
// each vertex-sum inside
//
//   increasing: [-floor((d-1)/2) - (p+m), -floor((d-1)/2) + (p+m)]
//   decreasing: [ floor((d-1)/2) - (p+m),  floor((d-1)/2) + (p+m)]

#pragma once

#include <algorithm>
#include <list>
#include <optional>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

enum class Flavor {
  increasing,  // sigma_1: the j-th original edge on the tour gets p + j
  decreasing,  // sigma_2: the j-th original edge on the tour gets p + m + 1 - j
};

struct OddPairing {
  /// The input edges keep their ids 0..m-1; added edges follow.
  Multigraph graph;
  std::vector<EdgeId> added;
};

/// Joins the odd-degree vertices x_1 < ... < x_{2l} by the l new edges
/// x_i x_{i+l}.
inline OddPairing pair_odd_vertices(const Graph& g) {
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  OddPairing out;
  const std::size_t half = odd.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    out.added.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({odd[i], odd[i + half]});
  }
  out.graph = Multigraph(g.order(), std::move(edges));
  return out;
}

/// One traversal step of a closed walk: leave `from` along `edge`. The
/// step's end is the next step's `from` (cyclically).
struct WalkStep {
  VertexId from = 0;
  EdgeId edge = 0;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Hierholzer: a closed walk using every edge once, whose first step is
/// `start_edge` leaving `start` (default: the edge's lower endpoint). Sub-
/// tours are spliced at the earliest walk position that still has unused
/// edges, always continuing along the lowest unused edge id.
inline std::vector<WalkStep> euler_tour(const Multigraph& g, EdgeId start_edge,
                                        std::optional<VertexId> start = std::nullopt) {
  const int m = g.size();
  if (m == 0) return {};
  if (start_edge < 0 || start_edge >= m) throw InvalidArgument("start edge out of range");
  const Edge& first = g.edge(start_edge);
  VertexId origin = start.value_or(first.u);
  if (!first.has(origin)) throw InvalidArgument("start vertex is not an endpoint of the start edge");
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) throw PreconditionError("euler tour needs every degree even");

  std::vector<std::vector<EdgeId>> by_id(static_cast<std::size_t>(g.order()));
  for (VertexId v = 0; v < g.order(); ++v) {
    for (const auto& inc : g.incident(v)) by_id[v].push_back(inc.edge);
    std::sort(by_id[v].begin(), by_id[v].end());
  }
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> used(static_cast<std::size_t>(m), 0);

  auto next_unused = [&](VertexId v) -> std::optional<EdgeId> {
    auto& c = cursor[v];
    while (c < by_id[v].size() && used[by_id[v][c]]) ++c;
    if (c == by_id[v].size()) return std::nullopt;
    return by_id[v][c];
  };
  auto trail = [&](VertexId v, std::optional<EdgeId> forced) {
    std::list<WalkStep> steps;
    VertexId cur = v;
    while (true) {
      std::optional<EdgeId> e = forced ? forced : next_unused(cur);
      forced.reset();
      if (!e) break;
      used[*e] = 1;
      steps.push_back({cur, *e});
      cur = g.edge(*e).other(cur);
    }
    return steps;
  };

  std::list<WalkStep> walk = trail(origin, start_edge);
  for (auto it = walk.begin(); it != walk.end();) {
    if (next_unused(it->from)) {
      auto sub = trail(it->from, std::nullopt);
      auto sub_begin = sub.begin();
      walk.splice(it, sub);
      it = sub_begin;
    } else {
      ++it;
    }
  }
  if (static_cast<int>(walk.size()) != m)
    throw PreconditionError("euler tour needs the edges to form one connected piece");
  return {walk.begin(), walk.end()};
}

struct EulerLabelingResult {
  Orientation orientation;
  /// Window {p+1..p+m}.
  ArcLabeling labeling;
  Flavor flavor = Flavor::increasing;
  /// Per-vertex (lo, hi) bounds guaranteed for the vertex-sums.
  std::vector<std::pair<Label, Label>> bounds;
  /// One tour per nontrivial component, in the input graph's vertex ids;
  /// steps along added pairing edges carry edge id -1.
  std::vector<std::vector<WalkStep>> tours;
};

inline std::pair<Label, Label> euler_bounds(int degree, Label p_plus_m, Flavor flavor) {
  if (degree == 0) return {0, 0};  // isolated: the sum is exactly 0
  const Label slack = (degree - 1) / 2;
  const Label centre = flavor == Flavor::increasing ? -slack : slack;
  return {centre - p_plus_m, centre + p_plus_m};
}

/// Orients `g` along Euler tours and labels it from {p+1..p+m}. Components
/// are handled in ascending order of their smallest vertex, each taking the
/// next consecutive sub-window. An edgeless graph gets the empty labeling.
inline EulerLabelingResult orient_and_label(const Graph& g, Label p, Flavor flavor) {
  if (p < 0) throw InvalidArgument("label offset must be nonnegative");
  const int m = g.size();
  EulerLabelingResult out;
  out.orientation = Orientation(m);
  out.labeling = ArcLabeling(m, p);
  out.flavor = flavor;
  for (VertexId v = 0; v < g.order(); ++v) out.bounds.push_back(euler_bounds(g.degree(v), p + m, flavor));
  if (m == 0) return out;

  int count = 0;
  const auto comp = components(g, &count);
  Label base = p;
  for (int c = 0; c < count; ++c) {
    std::vector<VertexId> local_to_global;
    std::vector<int> global_to_local(static_cast<std::size_t>(g.order()), -1);
    for (VertexId v = 0; v < g.order(); ++v) {
      if (comp[v] == c) {
        global_to_local[v] = static_cast<int>(local_to_global.size());
        local_to_global.push_back(v);
      }
    }
    std::vector<Edge> local_edges;
    std::vector<EdgeId> edge_to_global;
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (comp[ed.u] == c) {
        local_edges.push_back({global_to_local[ed.u], global_to_local[ed.v]});
        edge_to_global.push_back(e);
      }
    }
    if (local_edges.empty()) continue;
    const Graph local(static_cast<int>(local_to_global.size()), std::move(local_edges));
    const int mc = local.size();
    const OddPairing paired = pair_odd_vertices(local);

    std::vector<WalkStep> tour;
    if (!paired.added.empty()) {
      // End the tour on a pairing edge. Pairing edges form a matching, so the
      // next edge (the tour's first) is original, and the pass through the
      // start vertex that wraps around involves the pairing edge.
      tour = euler_tour(paired.graph, paired.added.front());
      std::rotate(tour.begin(), tour.begin() + 1, tour.end());
    } else {
      VertexId v0 = 0;
      while (local.degree(v0) == 0) ++v0;
      EdgeId e0 = mc;
      for (const auto& inc : local.incident(v0)) e0 = std::min(e0, inc.edge);
      tour = euler_tour(paired.graph, e0, v0);
    }

    std::vector<WalkStep> global_tour;
    Label j = 0;
    for (std::size_t k = 0; k < tour.size(); ++k) {
      const WalkStep& step = tour[k];
      const VertexId from = local_to_global[step.from];
      if (step.edge >= mc) {
        global_tour.push_back({from, -1});
        continue;
      }
      ++j;
      const EdgeId ge = edge_to_global[step.edge];
      global_tour.push_back({from, ge});
      out.orientation.orient(g, ge, from);
      out.labeling[ge] = flavor == Flavor::increasing ? base + j : base + mc + 1 - j;
    }
    out.tours.push_back(std::move(global_tour));
    base += mc;
  }
  return out;
}

/// True when every vertex-sum of `r` lies inside its recorded bounds.
inline bool respects_bounds(const Graph& g, const EulerLabelingResult& r) {
  const VertexSums s = vertex_sums(g, r.orientation, r.labeling);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (s[v] < r.bounds[v].first || s[v] > r.bounds[v].second) return false;
  }
  return true;
}

}  // namespace antimagic
