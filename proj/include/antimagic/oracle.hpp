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

// Exhaustive search for an antimagic orientation of a small graph.
//
// Edges are decided in id order (direction, then label ascending). Edge 0
// always points forward: reversing every arc negates all sums and keeps
// them distinct. A vertex's sum is final once its last incident edge is
// decided, and is checked against the other final sums right away.

#pragma once

#include <optional>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

inline constexpr int kOracleMaxEdges = 9;

/// The first antimagic orientation in enumeration order, or nullopt if the
/// graph has none. Throws BudgetError above kOracleMaxEdges edges.
inline std::optional<LabeledOrientation> oracle_antimagic_exists(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (m > kOracleMaxEdges) throw BudgetError("oracle is limited to " + std::to_string(kOracleMaxEdges) + " edges");

  // last[v]: highest incident edge id, -1 for isolated vertices.
  std::vector<EdgeId> last(static_cast<std::size_t>(n), -1);
  for (EdgeId e = 0; e < m; ++e) {
    last[g.edge(e).u] = e;
    last[g.edge(e).v] = e;
  }
  std::vector<std::vector<VertexId>> closes(static_cast<std::size_t>(m));
  std::vector<std::int64_t> final_sums;
  for (VertexId v = 0; v < n; ++v) {
    if (last[v] >= 0) closes[last[v]].push_back(v);
    else final_sums.push_back(0);
  }
  if (final_sums.size() > 1) return std::nullopt;  // two isolated vertices

  LabeledOrientation w{Orientation(m), ArcLabeling(m)};
  VertexSums s(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);

  auto search = [&](auto&& self, EdgeId e) -> bool {
    if (e == m) return true;
    const Edge& ed = g.edge(e);
    for (Direction dir : {Direction::forward, Direction::backward}) {
      if (e == 0 && dir == Direction::backward) break;
      const VertexId tail = dir == Direction::forward ? ed.u : ed.v;
      const VertexId head = ed.other(tail);
      w.orientation.orient(g, e, tail);
      for (Label l = 1; l <= m; ++l) {
        if (used[l]) continue;
        used[l] = 1;
        w.labeling[e] = l;
        s[head] += l;
        s[tail] -= l;
        const std::size_t mark = final_sums.size();
        bool ok = true;
        for (VertexId v : closes[e]) {
          for (std::int64_t other : final_sums) ok = ok && other != s[v];
          if (!ok) break;
          final_sums.push_back(s[v]);
        }
        if (ok && self(self, e + 1)) return true;
        final_sums.resize(mark);
        s[head] -= l;
        s[tail] += l;
        used[l] = 0;
      }
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  if (!is_antimagic(g, w)) throw ConstructionBug("oracle witness failed verification");
  return w;
}

}  // namespace antimagic
