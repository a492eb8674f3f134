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

// Bridges between library types and the raw forms the oracles read.

#pragma once

#include <utility>
#include <vector>

#include "antimagic/antimagic.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<std::pair<int, int>> raw_edges(const antimagic::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline std::vector<oracle::Arc> arcs(const antimagic::Graph& g, const antimagic::LabeledOrientation& c) {
  std::vector<oracle::Arc> out;
  for (antimagic::EdgeId e = 0; e < g.size(); ++e)
    out.push_back({c.orientation.tail(g, e), c.orientation.head(g, e), c.labeling[e]});
  return out;
}

/// Independent acceptance of a certificate: labels are 1..m, every edge
/// appears once, and the sums are pairwise distinct.
inline bool accepts(const antimagic::Graph& g, const antimagic::LabeledOrientation& c) {
  const auto a = arcs(g, c);
  for (antimagic::EdgeId e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    const bool ok = (a[e].tail == ed.u && a[e].head == ed.v) || (a[e].tail == ed.v && a[e].head == ed.u);
    if (!ok) return false;
  }
  return oracle::labels_are_permutation(a) && oracle::distinct(oracle::sums(g.order(), a));
}

inline antimagic::Graph graph(int n, std::vector<antimagic::Edge> edges) {
  return antimagic::Graph::canonical(n, std::move(edges));
}

inline antimagic::Graph cycle(int n) {
  std::vector<antimagic::Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return graph(n, std::move(e));
}

inline antimagic::Graph path(int n) {
  std::vector<antimagic::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return graph(n, std::move(e));
}

inline antimagic::Graph complete(int n) {
  std::vector<antimagic::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return graph(n, std::move(e));
}

inline antimagic::Graph complete_bipartite(int p, int q) {
  std::vector<antimagic::Edge> e;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) e.push_back({u, p + v});
  return graph(p + q, std::move(e));
}

inline antimagic::Graph cube() {
  std::vector<antimagic::Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) e.push_back({v, v ^ bit});
  return graph(8, std::move(e));
}

inline antimagic::Graph petersen() {
  std::vector<antimagic::Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return graph(10, std::move(e));
}

}  // namespace support
