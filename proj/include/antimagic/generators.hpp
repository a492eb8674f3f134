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

// Deterministic graph families. Every generated graph is canonical (edge
// ids in ascending endpoint order) and is checked against its family's
// declared properties before it is returned.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/independence.hpp"
#include "antimagic/random.hpp"

namespace antimagic {

enum class Family {
  star,           // K_{1,n}: centre 0, leaves 1..n
  wheel,          // hub 0 joined to the cycle 1..n
  complete,       // K_n
  path,           // P_n on n vertices
  cycle,          // C_n
  biregular,      // bipartite, side_a vertices of degree a, side_b of degree b
  radius2_ball,   // connected, radius <= 2
  alpha_bounded,  // k cliques plus random cross edges, alpha = k, min degree >= delta_min
  two_dominator,  // vertices 0 and 1 dominate; 0 ~ 1 or they share a neighbour
};

struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  int a = 0;
  int b = 0;
  int side_a = 0;
  int side_b = 0;
  int k = 0;
  int delta_min = 0;
  /// alpha_bounded only: reject graphs with a smaller radius.
  int min_radius = 0;
  std::uint64_t seed = 0;
};

inline std::optional<Family> family_from_string(std::string_view s) {
  if (s == "star") return Family::star;
  if (s == "wheel") return Family::wheel;
  if (s == "complete") return Family::complete;
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  if (s == "biregular") return Family::biregular;
  if (s == "radius2-ball") return Family::radius2_ball;
  if (s == "alpha-bounded") return Family::alpha_bounded;
  if (s == "two-dominator") return Family::two_dominator;
  return std::nullopt;
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::biregular: return "biregular";
    case Family::radius2_ball: return "radius2-ball";
    case Family::alpha_bounded: return "alpha-bounded";
    case Family::two_dominator: return "two-dominator";
  }
  return "?";
}

namespace detail {

inline constexpr int kGeneratorRetries = 200;

class EdgeSet {
 public:
  explicit EdgeSet(int n) : n_(n) {}
  bool add(VertexId a, VertexId b) {
    if (a == b) return false;
    return edges_.insert(normalized(a, b)).second;
  }
  bool has(VertexId a, VertexId b) const { return edges_.count(normalized(a, b)) > 0; }
  bool erase(VertexId a, VertexId b) { return edges_.erase(normalized(a, b)) > 0; }
  Graph graph() const { return Graph::canonical(n_, {edges_.begin(), edges_.end()}); }
  std::vector<Edge> list() const { return {edges_.begin(), edges_.end()}; }

 private:
  int n_;
  std::set<Edge> edges_;
};

inline void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

inline Graph make_biregular(const FamilySpec& s) {
  const int na = s.side_a;
  const int nb = s.side_b;
  require(s.a >= 1 && s.b >= 1 && na >= 1 && nb >= 1, "biregular needs positive degrees and sides");
  require(s.a * na == s.b * nb, "biregular needs a*|A| = b*|B|");
  require(s.a <= nb && s.b <= na, "biregular degree exceeds the other side");
  // A = 0..na-1, B = na..na+nb-1. Consecutive stub windows give a simple
  // biregular start; seeded double-edge swaps then randomise it.
  EdgeSet es(na + nb);
  for (int i = 0; i < na; ++i)
    for (int r = 0; r < s.a; ++r) es.add(i, na + (i * s.a + r) % nb);
  Lcg64 rng(s.seed);
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    std::vector<Edge> list = es.list();
    const int swaps = 10 * static_cast<int>(list.size());
    for (int k = 0; k < swaps && list.size() >= 2; ++k) {
      const std::size_t i = rng.below(static_cast<std::uint32_t>(list.size()));
      const std::size_t j = rng.below(static_cast<std::uint32_t>(list.size()));
      if (i == j) continue;
      // u < v with u in A: swap the B endpoints.
      const Edge e = list[i];
      const Edge f = list[j];
      if (e.u == f.u || e.v == f.v || es.has(e.u, f.v) || es.has(f.u, e.v)) continue;
      es.erase(e.u, e.v);
      es.erase(f.u, f.v);
      es.add(e.u, f.v);
      es.add(f.u, e.v);
      list[i] = normalized(e.u, f.v);
      list[j] = normalized(f.u, e.v);
    }
    Graph g = es.graph();
    if (is_connected(g)) return g;
  }
  throw GenerationFailure("no connected biregular graph within the retry budget");
}

inline Graph make_radius2_ball(const FamilySpec& s) {
  require(s.n >= 3, "radius2-ball needs n >= 3");
  Lcg64 rng(s.seed);
  const int n = s.n;
  EdgeSet es(n);
  const int d = rng.between(2, n - 1);  // neighbours of the hub 0
  for (int v = 1; v <= d; ++v) es.add(0, v);
  for (int v = d + 1; v < n; ++v) es.add(v, rng.between(1, d));
  const std::uint32_t density = rng.between(0, 30);  // percent
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(density, 100)) es.add(u, v);
  Graph g = es.graph();
  if (radius(g) > 2 || !is_connected(g)) throw GenerationFailure("radius2-ball post-check failed");
  return g;
}

inline Graph make_alpha_bounded(const FamilySpec& s) {
  const int n = s.n;
  const int k = s.k;
  require(k >= 1 && k <= kMaxIndependenceCap, "alpha-bounded needs 1 <= k <= 6");
  require(n >= 2 * k, "alpha-bounded needs n >= 2k");
  require(s.delta_min < n, "alpha-bounded needs delta_min < n");
  // Cliques Q_0..Q_{k-1} of near-equal size in a chain. Neighbouring end
  // pairs get dense random cross edges; the middle links stay sparse so the
  // radius can exceed 2.
  std::vector<int> start(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; ++i) start[i + 1] = start[i] + n / k + (i < n % k ? 1 : 0);
  auto clique_of = [&](VertexId v) {
    int i = 0;
    while (start[i + 1] <= v) ++i;
    return i;
  };
  Lcg64 rng(s.seed);
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    EdgeSet es(n);
    for (int i = 0; i < k; ++i)
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = u + 1; v < start[i + 1]; ++v) es.add(u, v);
    for (int i = 0; i + 1 < k; ++i) {
      const bool middle = k >= 3 && i > 0 && i + 2 < k;
      const std::uint32_t pct = middle ? 4 : 55;
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = start[i + 1]; v < start[i + 2]; ++v)
          if (rng.chance(pct, 100)) es.add(u, v);
      if (middle) es.add(rng.between(start[i], start[i + 1] - 1), rng.between(start[i + 1], start[i + 2] - 1));
    }
    // Lift low degrees with extra edges into a neighbouring clique.
    Graph g = es.graph();
    for (VertexId v = 0; v < n; ++v) {
      const int i = clique_of(v);
      int deg = g.degree(v);
      // toward the chain's nearer end, away from the sparse middle
      const int j = i == 0 ? 1 : (i == k - 1 ? k - 2 : (i <= (k - 1) / 2 ? i - 1 : i + 1));
      for (int tries = 0; deg < s.delta_min && tries < 4 * n; ++tries)
        if (es.add(v, rng.between(start[j], start[j + 1] - 1))) ++deg;
      g = es.graph();
    }
    if (g.min_degree() < s.delta_min || !is_connected(g)) continue;
    if (s.min_radius > 0 && radius(g) < s.min_radius) continue;
    if (independence_number(g, k) != k) continue;
    return g;
  }
  throw GenerationFailure("alpha-bounded retry budget exhausted");
}

inline Graph make_two_dominator(const FamilySpec& s) {
  require(s.n >= 4, "two-dominator needs n >= 4");
  const int n = s.n;
  Lcg64 rng(s.seed);
  EdgeSet es(n);
  if (rng.chance(1, 2)) es.add(0, 1);
  else es.add(0, 2), es.add(1, 2);
  for (int v = 2; v < n; ++v) {
    const int side = rng.between(0, 2);
    if (side != 1) es.add(0, v);
    if (side != 0) es.add(1, v);
  }
  const std::uint32_t density = rng.between(5, 40);
  for (int u = 2; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(density, 100)) es.add(u, v);
  return es.graph();
}

}  // namespace detail

inline Graph generate(const FamilySpec& s) {
  using detail::require;
  std::vector<Edge> edges;
  switch (s.family) {
    case Family::star:
      require(s.n >= 1, "star needs n >= 1 leaves");
      for (int v = 1; v <= s.n; ++v) edges.push_back({0, v});
      return Graph::canonical(s.n + 1, std::move(edges));
    case Family::wheel:
      require(s.n >= 3, "wheel needs a rim of at least 3");
      for (int v = 1; v <= s.n; ++v) edges.push_back({0, v});
      for (int v = 1; v <= s.n; ++v) edges.push_back({v, v == s.n ? 1 : v + 1});
      return Graph::canonical(s.n + 1, std::move(edges));
    case Family::complete:
      require(s.n >= 1, "complete needs n >= 1");
      for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v) edges.push_back({u, v});
      return Graph::canonical(s.n, std::move(edges));
    case Family::path:
      require(s.n >= 1, "path needs n >= 1");
      for (int v = 0; v + 1 < s.n; ++v) edges.push_back({v, v + 1});
      return Graph::canonical(s.n, std::move(edges));
    case Family::cycle:
      require(s.n >= 3, "cycle needs n >= 3");
      for (int v = 0; v < s.n; ++v) edges.push_back({v, (v + 1) % s.n});
      return Graph::canonical(s.n, std::move(edges));
    case Family::biregular: return detail::make_biregular(s);
    case Family::radius2_ball: return detail::make_radius2_ball(s);
    case Family::alpha_bounded: return detail::make_alpha_bounded(s);
    case Family::two_dominator: return detail::make_two_dominator(s);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace antimagic
