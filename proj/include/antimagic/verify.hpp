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

// Independent verifier. Every construction in the library is gated by
// is_antimagic before it is returned; this file must not depend on any of
// them.

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

namespace detail {

inline void require_cover(const Graph& g, const Orientation& d, const ArcLabeling& tau) {
  if (d.size() != g.size()) throw MalformedLabeling("orientation does not cover the edge set");
  if (tau.size() != g.size()) throw MalformedLabeling("labeling does not cover the edge set");
  if (!tau.is_bijection()) throw MalformedLabeling("labels are not a bijection onto their window");
}

}  // namespace detail

/// s(u) = labels entering u minus labels leaving u. Isolated vertices get 0.
inline VertexSums vertex_sums(const Graph& g, const Orientation& d, const ArcLabeling& tau) {
  detail::require_cover(g, d, tau);
  VertexSums s(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    s[d.head(g, e)] += tau[e];
    s[d.tail(g, e)] -= tau[e];
  }
  return s;
}

/// Vertex sums without the bijection check; used by constructions while a
/// labeling is still partial (unlabeled edges carry 0).
inline VertexSums partial_sums(const Graph& g, const Orientation& d, const ArcLabeling& tau) {
  VertexSums s(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    s[d.head(g, e)] += tau[e];
    s[d.tail(g, e)] -= tau[e];
  }
  return s;
}

struct AntimagicVerdict {
  bool antimagic = false;
  /// A colliding vertex pair (smaller id first) when not antimagic.
  std::optional<std::pair<VertexId, VertexId>> collision;
  VertexSums sums;

  explicit operator bool() const noexcept { return antimagic; }
};

/// First colliding pair in ascending (sum, id) order, if any.
inline std::optional<std::pair<VertexId, VertexId>> find_collision(const VertexSums& s) {
  std::vector<VertexId> order(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) order[i] = static_cast<VertexId>(i);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return s[a] != s[b] ? s[a] < s[b] : a < b; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (s[order[i]] == s[order[i - 1]]) return std::pair{order[i - 1], order[i]};
  }
  return std::nullopt;
}

inline AntimagicVerdict is_antimagic(const Graph& g, const Orientation& d, const ArcLabeling& tau) {
  if (tau.offset != 0) throw MalformedLabeling("antimagic labelings use the window {1..m}");
  AntimagicVerdict verdict;
  verdict.sums = vertex_sums(g, d, tau);
  verdict.collision = find_collision(verdict.sums);
  verdict.antimagic = !verdict.collision.has_value();
  return verdict;
}

inline AntimagicVerdict is_antimagic(const Graph& g, const LabeledOrientation& c) {
  return is_antimagic(g, c.orientation, c.labeling);
}

}  // namespace antimagic
