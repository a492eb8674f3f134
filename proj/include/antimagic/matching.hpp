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

// Antimagic orientations from an independent set A (every vertex of degree
// at least 3) and a matching M saturating V(G)\A.
//
// All A-side edges point into A. The edges inside V(G)\A take the middle
// label window through an Euler labeling; the remaining A-edges (H) get the
// small labels through a zero-sum partition, so that each A-sum is congruent
// (mod q) to the single large label on its matching or E0 edge. The large
// labels are distinct mod q, which separates the A-sums; the B-sums are all
// negative and ordered by the matching labels.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/euler.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

/// Augmenting-path matching of V(G)\A into A, or nullopt if none saturates
/// V(G)\A. Returned edge ids are ordered by their V(G)\A endpoint.
inline std::optional<std::vector<EdgeId>> find_saturating_matching(const Graph& g, std::span<const VertexId> a_side) {
  if (!is_independent(g, a_side)) throw InvalidArgument("A must be an independent set");
  std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
  for (VertexId a : a_side) in_a.at(static_cast<std::size_t>(a)) = 1;

  std::vector<VertexId> mate(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> visited(static_cast<std::size_t>(g.order()), -1);
  auto augment = [&](auto&& self, VertexId b, int stamp) -> bool {
    for (const auto& inc : g.incident(b)) {
      const VertexId a = inc.neighbor;
      if (!in_a[a] || visited[a] == stamp) continue;
      visited[a] = stamp;
      if (mate[a] == -1 || self(self, mate[a], stamp)) {
        mate[a] = b;
        mate[b] = a;
        return true;
      }
    }
    return false;
  };
  for (VertexId b = 0; b < g.order(); ++b) {
    if (in_a[b]) continue;
    if (!augment(augment, b, b)) return std::nullopt;
  }
  std::vector<EdgeId> out;
  for (VertexId b = 0; b < g.order(); ++b)
    if (!in_a[b]) out.push_back(*g.find_edge(b, mate[b]));
  return out;
}

struct MatchingInstance {
  std::vector<VertexId> independent;  // A
  std::vector<EdgeId> matching;       // M
};

/// Name of the first violated hypothesis, or nullopt when the instance is
/// admissible.
inline std::optional<std::string> matching_instance_violation(const Graph& g, const MatchingInstance& inst) {
  const int n = g.order();
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (VertexId a : inst.independent) {
    if (a < 0 || a >= n) return "A contains a vertex out of range";
    in_a[a] = 1;
  }
  if (!is_independent(g, inst.independent)) return "A is independent";
  for (VertexId a : inst.independent)
    if (g.degree(a) < 3) return "d(v) >= 3 for every v in A";
  const int n1 = static_cast<int>(inst.independent.size());
  const int n2 = n - n1;
  if (static_cast<int>(inst.matching.size()) != n2) return "|M| = |G| - |A|";
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (EdgeId e : inst.matching) {
    if (e < 0 || e >= g.size()) return "M contains an edge out of range";
    const Edge& ed = g.edge(e);
    if (covered[ed.u] || covered[ed.v]) return "M is a matching";
    covered[ed.u] = covered[ed.v] = 1;
  }
  for (VertexId v = 0; v < n; ++v)
    if (!in_a[v] && !covered[v]) return "M saturates V(G)\\A";
  if (!(n1 >= n2 && n2 >= 3)) return "|A| >= |V(G)\\A| >= 3";
  if (!is_connected(g)) return "G is connected";
  return std::nullopt;
}

struct MatchingTrace {
  /// a_1..a_{n1}: matched vertices in b-order, then the unmatched ones.
  std::vector<VertexId> a_order;
  /// b_1..b_{n2}, sorted by partial sum descending (ties: ascending id).
  std::vector<VertexId> b_order;
  std::vector<EdgeId> e0;
  std::vector<EdgeId> h_edges;
  /// Zero-sum block of labels used on each A vertex's H edges, indexed by
  /// position in ascending order of A.
  ZeroSumPartition blocks;
  int modulus = 0;
};

struct MatchingConstruction {
  LabeledOrientation result;
  MatchingTrace trace;
};

inline MatchingConstruction construct_from_matching(const Graph& g, const MatchingInstance& inst) {
  if (auto violation = matching_instance_violation(g, inst)) throw RejectedInstance(*violation);
  const int n = g.order();
  const int m = g.size();
  std::vector<VertexId> a_side = inst.independent;
  std::sort(a_side.begin(), a_side.end());
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (VertexId a : a_side) in_a[a] = 1;
  const int n1 = static_cast<int>(a_side.size());
  const int n2 = n - n1;

  std::vector<EdgeId> partner_edge(static_cast<std::size_t>(n), -1);
  std::vector<char> special(static_cast<std::size_t>(m), 0);  // M u E0
  for (EdgeId e : inst.matching) {
    partner_edge[g.edge(e).u] = e;
    partner_edge[g.edge(e).v] = e;
    special[e] = 1;
  }
  MatchingTrace trace;
  for (VertexId a : a_side) {
    if (partner_edge[a] != -1) continue;
    const EdgeId e = g.incident(a).front().edge;  // lowest-id neighbor
    trace.e0.push_back(e);
    special[e] = 1;
  }

  std::vector<EdgeId> inner_ids;
  const Graph inner = edge_subgraph(
      g, [&](EdgeId e) { return !in_a[g.edge(e).u] && !in_a[g.edge(e).v]; }, &inner_ids);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if ((in_a[ed.u] || in_a[ed.v]) && !special[e]) trace.h_edges.push_back(e);
  }
  const int eh = static_cast<int>(trace.h_edges.size());

  Orientation d(m);
  ArcLabeling tau(m);
  const EulerLabelingResult inner_label = orient_and_label(inner, eh, Flavor::increasing);
  for (EdgeId k = 0; k < inner.size(); ++k) {
    const EdgeId e = inner_ids[k];
    d.orient(g, e, inner_label.orientation.tail(inner, k));
    tau[e] = inner_label.labeling[k];
  }
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (in_a[ed.u]) d.orient(g, e, ed.v);
    else if (in_a[ed.v]) d.orient(g, e, ed.u);
  }

  std::vector<std::vector<EdgeId>> h_at(static_cast<std::size_t>(n));
  for (EdgeId e : trace.h_edges) {
    const Edge& ed = g.edge(e);
    h_at[in_a[ed.u] ? ed.u : ed.v].push_back(e);
  }
  std::vector<int> sizes;
  for (VertexId a : a_side) sizes.push_back(static_cast<int>(h_at[a].size()));
  trace.blocks = zero_sum_partition(eh, sizes);
  trace.modulus = trace.blocks.modulus;
  for (std::size_t i = 0; i < a_side.size(); ++i) {
    const auto& edges = h_at[a_side[i]];
    for (std::size_t k = 0; k < edges.size(); ++k) tau[edges[k]] = trace.blocks.blocks[i][k];
  }
  for (std::size_t k = 0; k < trace.e0.size(); ++k)
    tau[trace.e0[k]] = m - static_cast<Label>(trace.e0.size()) + 1 + static_cast<Label>(k);

  const VertexSums partial = partial_sums(g, d, tau);
  for (VertexId v = 0; v < n; ++v)
    if (!in_a[v]) trace.b_order.push_back(v);
  std::stable_sort(trace.b_order.begin(), trace.b_order.end(),
                   [&](VertexId x, VertexId y) { return partial[x] > partial[y]; });
  for (int i = 0; i < n2; ++i) {
    const VertexId b = trace.b_order[i];
    const EdgeId e = partner_edge[b];
    tau[e] = static_cast<Label>(m - n1 + i + 1);
    trace.a_order.push_back(g.edge(e).other(b));
  }
  for (VertexId a : a_side)
    if (partner_edge[a] == -1) trace.a_order.push_back(a);

  MatchingConstruction out{{std::move(d), std::move(tau)}, std::move(trace)};
  if (!is_antimagic(g, out.result)) throw ConstructionBug("matching construction failed verification");
  return out;
}

}  // namespace antimagic
