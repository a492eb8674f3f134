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

// Maximum independent sets of graphs with small independence number, and
// the bipartite graph H_S between an independent set S and the rest.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

inline constexpr int kMaxIndependenceCap = 6;

struct IndependenceCertificate {
  std::vector<VertexId> set;  // S, ascending
  int alpha = 0;
  /// Component index in H_S per vertex.
  std::vector<int> hs_component;
  int hs_components = 0;
};

/// Visits the independent sets of size k in lexicographic order until
/// `visit` returns false. Returns false if it was stopped early.
inline bool for_each_independent_set(const Graph& g, int k,
                                     const std::function<bool(const std::vector<VertexId>&)>& visit) {
  const int n = g.order();
  std::vector<VertexId> chosen;
  std::vector<int> blocked(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, VertexId from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    for (VertexId v = from; v < n; ++v) {
      if (n - v < k - static_cast<int>(chosen.size())) break;
      if (blocked[v]) continue;
      chosen.push_back(v);
      for (const auto& inc : g.incident(v)) ++blocked[inc.neighbor];
      const bool go_on = self(self, v + 1);
      for (const auto& inc : g.incident(v)) --blocked[inc.neighbor];
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

inline std::optional<std::vector<VertexId>> first_independent_set(const Graph& g, int k) {
  std::optional<std::vector<VertexId>> found;
  for_each_independent_set(g, k, [&](const std::vector<VertexId>& s) {
    found = s;
    return false;
  });
  return found;
}

/// Components of H_S; fills `cert.hs_component` and `cert.hs_components`.
inline void compute_hs(const Graph& g, IndependenceCertificate& cert) {
  std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
  for (VertexId v : cert.set) in_s[v] = 1;
  const Graph hs = edge_subgraph(g, [&](EdgeId e) { return in_s[g.edge(e).u] != in_s[g.edge(e).v]; });
  cert.hs_component = components(hs, &cert.hs_components);
}

inline IndependenceCertificate make_certificate(const Graph& g, std::vector<VertexId> set) {
  IndependenceCertificate cert;
  cert.set = std::move(set);
  std::sort(cert.set.begin(), cert.set.end());
  cert.alpha = static_cast<int>(cert.set.size());
  compute_hs(g, cert);
  return cert;
}

/// Exact maximum independent set when alpha(G) <= cap, else nullopt
/// (too large). The set is the lexicographically first of maximum size.
inline std::optional<IndependenceCertificate> max_independent_set(const Graph& g, int cap) {
  if (cap < 0 || cap > kMaxIndependenceCap) throw InvalidArgument("independence cap must be in 0..6");
  if (first_independent_set(g, cap + 1)) return std::nullopt;
  for (int k = std::min(cap, g.order()); k >= 0; --k) {
    if (auto s = first_independent_set(g, k)) return make_certificate(g, std::move(*s));
  }
  return make_certificate(g, {});
}

inline int independence_number(const Graph& g, int cap) {
  auto cert = max_independent_set(g, cap);
  return cert ? cert->alpha : cap + 1;
}

/// Every component of H_S holds at least two vertices of S.
inline bool satisfies_claim_star(const IndependenceCertificate& cert) {
  std::vector<int> count(static_cast<std::size_t>(cert.hs_components), 0);
  for (VertexId v : cert.set) ++count[cert.hs_component[v]];
  return std::all_of(count.begin(), count.end(), [](int c) { return c >= 2; });
}

/// A maximum independent set minimising the number of components of H_S
/// (the lexicographically first among the minimisers), or nullopt when
/// alpha(G) > 4. If the result had a component with a single vertex u of S,
/// u is exchanged for a neighbour x adjacent to another component; this
/// lowers the component count and is repeated until no such component is
/// left.
inline std::optional<IndependenceCertificate> choose_S_min_components(const Graph& g) {
  auto first = max_independent_set(g, 4);
  if (!first) return std::nullopt;
  const int alpha = first->alpha;
  std::optional<IndependenceCertificate> best;
  for_each_independent_set(g, alpha, [&](const std::vector<VertexId>& s) {
    IndependenceCertificate c = make_certificate(g, s);
    if (!best || c.hs_components < best->hs_components) best = std::move(c);
    return true;
  });
  IndependenceCertificate cert = std::move(*best);

  while (!satisfies_claim_star(cert)) {
    std::vector<int> count(static_cast<std::size_t>(cert.hs_components), 0);
    for (VertexId v : cert.set) ++count[cert.hs_component[v]];
    VertexId lone = -1;
    for (VertexId v : cert.set)
      if (count[cert.hs_component[v]] == 1) {
        lone = v;
        break;
      }
    std::optional<VertexId> swap_in;
    for (const auto& inc : g.incident(lone)) {
      for (const auto& inc2 : g.incident(inc.neighbor)) {
        if (cert.hs_component[inc2.neighbor] != cert.hs_component[lone]) {
          swap_in = inc.neighbor;
          break;
        }
      }
      if (swap_in) break;
    }
    if (!swap_in) break;  // disconnected graph: nothing to exchange
    std::vector<VertexId> next;
    for (VertexId v : cert.set)
      if (v != lone) next.push_back(v);
    next.push_back(*swap_in);
    IndependenceCertificate c = make_certificate(g, std::move(next));
    if (!is_independent(g, c.set) || c.hs_components >= cert.hs_components) break;
    cert = std::move(c);
  }
  return cert;
}

}  // namespace antimagic
