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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

using VertexId = int;
using EdgeId = int;
using Label = std::int64_t;

/// Undirected edge with endpoints stored in ascending order.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  bool has(VertexId w) const noexcept { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

namespace detail {

inline Edge normalized(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::vector<std::vector<Incidence>> build_incidence(int n, std::span<const Edge> edges) {
  std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    inc[edges[e].u].push_back({edges[e].v, e});
    inc[edges[e].v].push_back({edges[e].u, e});
  }
  for (auto& list : inc) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
    });
  }
  return inc;
}

}  // namespace detail

/// Finite simple undirected graph on vertices 0..n-1. Edge ids are the
/// positions in the edge list passed at construction.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidArgument("vertex count must be nonnegative");
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw InvalidArgument("edge endpoint out of range");
      if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
      e = detail::normalized(e.u, e.v);
    }
    incidence_ = detail::build_incidence(n_, edges_);
    for (const auto& list : incidence_) {
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i].neighbor == list[i - 1].neighbor)
          throw InvalidArgument("duplicate edge " + std::to_string(list[i].neighbor));
      }
    }
  }

  /// Graph whose edge ids follow ascending lexicographic endpoint order.
  static Graph canonical(int n, std::vector<Edge> edges) {
    for (auto& e : edges) e = detail::normalized(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edges of `v`, sorted by neighbor id.
  std::span<const Incidence> incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    auto list = incident(a);
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& x, VertexId key) { return x.neighbor < key; });
    if (it != list.end() && it->neighbor == b) return it->edge;
    return std::nullopt;
  }
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// True when edges are listed in strictly ascending lexicographic order,
  /// which is what the edge-list text format requires.
  bool is_canonical() const { return std::is_sorted(edges_.begin(), edges_.end()); }

  int min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (VertexId v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Loopless multigraph; parallel edges are distinct ids. Used internally to
/// pair odd-degree vertices before an Euler tour.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw InvalidArgument("edge endpoint out of range");
      if (e.u == e.v) throw InvalidArgument("multigraphs are loopless");
      e = detail::normalized(e.u, e.v);
    }
    incidence_ = detail::build_incidence(n_, edges_);
  }

  explicit Multigraph(const Graph& g) : Multigraph(g.order(), {g.edges().begin(), g.edges().end()}) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

enum class Direction : std::uint8_t { forward, backward };

/// Direction of every edge relative to its stored endpoint order
/// (forward means u -> v with u < v).
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int m, Direction d = Direction::forward) : dir_(static_cast<std::size_t>(m), d) {}

  int size() const noexcept { return static_cast<int>(dir_.size()); }
  Direction direction(EdgeId e) const { return dir_.at(static_cast<std::size_t>(e)); }

  VertexId tail(const Graph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return direction(e) == Direction::forward ? ed.u : ed.v;
  }
  VertexId head(const Graph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return direction(e) == Direction::forward ? ed.v : ed.u;
  }

  /// Orients edge `e` so that it leaves `from`.
  void orient(const Graph& g, EdgeId e, VertexId from) {
    const Edge& ed = g.edge(e);
    if (!ed.has(from)) throw InvalidArgument("vertex is not an endpoint of the edge");
    dir_.at(static_cast<std::size_t>(e)) = from == ed.u ? Direction::forward : Direction::backward;
  }

  void reverse(EdgeId e) {
    auto& d = dir_.at(static_cast<std::size_t>(e));
    d = d == Direction::forward ? Direction::backward : Direction::forward;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Direction> dir_;
};

/// Per-edge labels that are meant to be a bijection onto the window
/// {offset+1, ..., offset+m}.
struct ArcLabeling {
  std::vector<Label> labels;
  Label offset = 0;

  ArcLabeling() = default;
  explicit ArcLabeling(int m, Label window_offset = 0)
      : labels(static_cast<std::size_t>(m), 0), offset(window_offset) {}

  int size() const noexcept { return static_cast<int>(labels.size()); }
  Label& operator[](EdgeId e) { return labels.at(static_cast<std::size_t>(e)); }
  Label operator[](EdgeId e) const { return labels.at(static_cast<std::size_t>(e)); }

  bool is_bijection() const {
    std::vector<char> seen(labels.size(), 0);
    for (Label l : labels) {
      Label k = l - offset - 1;
      if (k < 0 || k >= static_cast<Label>(labels.size()) || seen[static_cast<std::size_t>(k)]) return false;
      seen[static_cast<std::size_t>(k)] = 1;
    }
    return true;
  }

  friend bool operator==(const ArcLabeling&, const ArcLabeling&) = default;
};

/// An orientation together with its arc labeling.
struct LabeledOrientation {
  Orientation orientation;
  ArcLabeling labeling;
};

using VertexSums = std::vector<std::int64_t>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from `source`; unreachable vertices get kUnreachable.
inline std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::queue<VertexId> queue;
  dist.at(static_cast<std::size_t>(source)) = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push(inc.neighbor);
      }
    }
  }
  return dist;
}

inline int distance(const Graph& g, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw InvalidArgument("vertex out of range");
  return bfs_distances(g, u)[v];
}

inline int eccentricity(const Graph& g, VertexId v) {
  auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

/// Minimum eccentricity; kUnreachable for disconnected graphs, 0 for the
/// empty and single-vertex graphs.
inline int radius(const Graph& g) {
  int r = g.order() == 0 ? 0 : kUnreachable;
  for (VertexId v = 0; v < g.order(); ++v) r = std::min(r, eccentricity(g, v));
  return r;
}

/// Lowest-id vertex among those of maximum degree with eccentricity <= r,
/// if any.
inline std::optional<VertexId> center_within(const Graph& g, int r) {
  std::optional<VertexId> best;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (eccentricity(g, v) > r) continue;
    if (!best || g.degree(v) > g.degree(*best)) best = v;
  }
  return best;
}

inline int set_distance(const Graph& g, VertexId v, std::span<const VertexId> set) {
  if (set.empty()) throw InvalidArgument("set_distance needs a nonempty set");
  if (std::find(set.begin(), set.end(), v) != set.end())
    throw InvalidArgument("set_distance needs a vertex outside the set");
  auto dist = bfs_distances(g, v);
  int best = kUnreachable;
  for (VertexId x : set) best = std::min(best, dist.at(static_cast<std::size_t>(x)));
  return best;
}

/// Distances from a vertex set (multi-source BFS).
inline std::vector<int> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::queue<VertexId> queue;
  for (VertexId s : sources) {
    if (dist.at(static_cast<std::size_t>(s)) != 0) {
      dist[s] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push(inc.neighbor);
      }
    }
  }
  return dist;
}

/// Component index per vertex, numbered in ascending order of each
/// component's smallest vertex.
inline std::vector<int> components(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int c = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u)) {
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = c;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline bool is_connected(const Graph& g) {
  int c = 0;
  components(g, &c);
  return c <= 1;
}

/// Two-coloring of a bipartite graph (each component's smallest vertex gets
/// color 0), or nullopt if the graph has an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(u)) {
        if (color[inc.neighbor] == -1) {
          color[inc.neighbor] = 1 - color[u];
          queue.push(inc.neighbor);
        } else if (color[inc.neighbor] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_independent(const Graph& g, std::span<const VertexId> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  return true;
}

/// Subgraph on all vertices of `g` keeping only the edges for which
/// `keep(e)` holds. `original` maps each new edge id to its id in `g`.
template <typename Pred>
Graph edge_subgraph(const Graph& g, Pred keep, std::vector<EdgeId>* original = nullptr) {
  std::vector<Edge> edges;
  if (original) original->clear();
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (keep(e)) {
      edges.push_back(g.edge(e));
      if (original) original->push_back(e);
    }
  }
  return Graph(g.order(), std::move(edges));
}

}  // namespace antimagic
