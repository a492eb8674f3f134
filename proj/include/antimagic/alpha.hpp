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

// Strategy cascade for graphs of small independence number.
//
//   0  radius <= 2: one centre.
//   1  alpha = 3, n >= 13: X = S with two shared witnesses.
//   2  alpha = 4, min degree >= 11: two or three centres chosen from H_S.
//   3  exhaustive search for tiny graphs, else seeded local search.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/independence.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/random.hpp"
#include "antimagic/verify.hpp"
#include "antimagic/xconstruct.hpp"

namespace antimagic {

enum class Strategy {
  radius_two,           // one centre
  alpha3_shared,        // alpha = 3, X = S
  alpha4_two_centers,   // H_S connected, a vertex sees three of S
  alpha4_three_centers, // H_S connected, every vertex sees at most two of S
  alpha4_split,         // H_S has two components
  oracle,
  local_search,
};

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::radius_two: return "radius-two";
    case Strategy::alpha3_shared: return "alpha3-shared";
    case Strategy::alpha4_two_centers: return "alpha4-two-centers";
    case Strategy::alpha4_three_centers: return "alpha4-three-centers";
    case Strategy::alpha4_split: return "alpha4-split";
    case Strategy::oracle: return "oracle";
    case Strategy::local_search: return "local-search";
  }
  return "?";
}

/// Strategies 1 and 2 are reported as their own tags; this groups them.
inline int strategy_number(Strategy s) {
  switch (s) {
    case Strategy::radius_two: return 0;
    case Strategy::alpha3_shared: return 1;
    case Strategy::alpha4_two_centers:
    case Strategy::alpha4_three_centers:
    case Strategy::alpha4_split: return 2;
    default: return 3;
  }
}

struct AlphaResult {
  LabeledOrientation result;
  Strategy strategy = Strategy::oracle;
  std::optional<IndependenceCertificate> independent;
  std::vector<VertexId> centers;
  /// Notes on branches that were tried and abandoned.
  std::vector<std::string> log;
};

struct AlphaOptions {
  std::uint64_t seed = 1;
  long local_search_budget = 100'000;
};

/// The Turan bound for K4-free complements: C(n,2) - n^2/3 > 2n - 5.
inline bool alpha3_edge_bound_holds(std::int64_t n) {
  // 3n(n-1) - 2n^2 > 6(2n-5), all times 6
  return 3 * n * (n - 1) - 2 * n * n > 6 * (2 * n - 5);
}

namespace detail {

inline std::optional<XConstruction> try_x(const Graph& g, const WitnessConfig& w, std::vector<std::string>& log) {
  try {
    return construct_x_orientation(g, w);
  } catch (const RejectedInstance& e) {
    log.push_back(std::string("centre set rejected: ") + e.hypothesis());
  } catch (const ConstructionBug& e) {
    log.push_back(std::string("centre set failed: ") + e.what());
  }
  return std::nullopt;
}

inline std::vector<VertexId> common_neighbours(const Graph& g, VertexId a, VertexId b) {
  std::vector<VertexId> out;
  for (const auto& inc : g.incident(a))
    if (g.adjacent(inc.neighbor, b)) out.push_back(inc.neighbor);
  return out;
}

inline std::optional<AlphaResult> alpha3(const Graph& g, const IndependenceCertificate& s, AlphaResult& acc) {
  const int n = g.order();
  if (!alpha3_edge_bound_holds(n)) return std::nullopt;
  if (g.size() < 2 * n - 4) {
    acc.log.push_back("alpha3: edge count below 2n-4");
    return std::nullopt;
  }
  std::array<VertexId, 3> u{s.set[0], s.set[1], s.set[2]};
  std::sort(u.begin(), u.end());
  do {
    // X = (u0, u1, u2): y1 ~ u0,u1 and y2 ~ u1,u2.
    for (VertexId y1 : common_neighbours(g, u[0], u[1])) {
      for (VertexId y2 : common_neighbours(g, u[1], u[2])) {
        if (y1 == y2) continue;
        auto c = construct_corollary_main(g, u, y1, y2);
        if (c) {
          acc.result = std::move(c->result);
          acc.strategy = Strategy::alpha3_shared;
          acc.centers.assign(u.begin(), u.end());
          return std::move(acc);
        }
        acc.log.push_back("alpha3: shared-witness construction declined");
      }
    }
  } while (std::next_permutation(u.begin(), u.end()));
  return std::nullopt;
}

inline std::optional<AlphaResult> alpha4(const Graph& g, const IndependenceCertificate& s, AlphaResult& acc) {
  const auto& S = s.set;
  auto neighbours_in_s = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u : S)
      if (g.adjacent(u, v)) out.push_back(u);
    return out;
  };
  auto finish = [&](const WitnessConfig& w, Strategy tag) -> std::optional<AlphaResult> {
    auto c = try_x(g, w, acc.log);
    if (!c) return std::nullopt;
    acc.result = std::move(c->result);
    acc.strategy = tag;
    acc.centers = w.centers;
    return std::move(acc);
  };
  std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
  for (VertexId u : S) in_s[u] = 1;

  if (s.hs_components == 1) {
    // A vertex adjacent to three vertices of S.
    for (VertexId x1 = 0; x1 < g.order(); ++x1) {
      if (in_s[x1]) continue;
      const auto nx1 = neighbours_in_s(x1);
      if (nx1.size() != 3) continue;
      VertexId u4 = -1;
      for (VertexId u : S)
        if (!g.adjacent(u, x1)) u4 = u;
      for (VertexId shared : nx1) {
        for (VertexId x2 : common_neighbours(g, u4, shared)) {
          if (in_s[x2] || x2 == x1) continue;
          const std::array<VertexId, 2> x{x1, x2};
          if (auto w = find_witnesses(g, x, shared)) {
            if (auto r = finish(*w, Strategy::alpha4_two_centers)) return r;
          }
        }
      }
    }
    // Every vertex sees at most two of S: a path x1, x2, x3 through S.
    std::array<VertexId, 4> u{S[0], S[1], S[2], S[3]};
    do {
      for (VertexId x1 : common_neighbours(g, u[0], u[1])) {
        if (in_s[x1]) continue;
        for (VertexId x2 : common_neighbours(g, u[1], u[2])) {
          if (in_s[x2] || x2 == x1) continue;
          for (VertexId x3 : common_neighbours(g, u[2], u[3])) {
            if (in_s[x3] || x3 == x1 || x3 == x2) continue;
            const std::array<VertexId, 3> x{x1, x2, x3};
            if (auto w = find_witnesses(g, x, u[1], u[2])) {
              if (auto r = finish(*w, Strategy::alpha4_three_centers)) return r;
            }
          }
        }
      }
    } while (std::next_permutation(u.begin(), u.end()));
    return std::nullopt;
  }

  if (s.hs_components == 2) {
    // x1 complete to the S-pair of one component, x2 to the other, x1 ~ x2.
    std::vector<VertexId> first, second;
    for (VertexId u : S) (s.hs_component[u] == s.hs_component[S[0]] ? first : second).push_back(u);
    if (first.size() != 2 || second.size() != 2) return std::nullopt;
    for (VertexId x1 : common_neighbours(g, first[0], first[1])) {
      for (VertexId x2 : common_neighbours(g, second[0], second[1])) {
        if (in_s[x1] || in_s[x2] || !g.adjacent(x1, x2)) continue;
        const std::array<VertexId, 2> x{x1, x2};
        if (auto w = find_witnesses(g, x)) {
          if (auto r = finish(*w, Strategy::alpha4_split)) return r;
        }
      }
    }
    acc.log.push_back("alpha4: no adjacent pair complete to both S-pairs");
  }
  return std::nullopt;
}

/// Each non-tree edge points from the smaller BFS depth to the larger
/// (ties: lower id first); tree edges point away from the root.
inline Orientation bfs_orientation(const Graph& g) {
  Orientation d(g.size());
  const auto depth = bfs_distances(g, 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    d.orient(g, e, depth[ed.v] < depth[ed.u] ? ed.v : ed.u);
  }
  return d;
}

/// Hill climbing over label transpositions; the number of colliding vertex
/// pairs never increases. Verifier-gated.
inline std::optional<LabeledOrientation> local_search(const Graph& g, std::uint64_t seed, long budget) {
  const int m = g.size();
  const int n = g.order();
  if (m < 2) return std::nullopt;
  Lcg64 rng(seed);
  LabeledOrientation c{bfs_orientation(g), ArcLabeling(m)};
  std::vector<Label> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[i] = i + 1;
  rng.shuffle(labels);
  for (int i = 0; i < m; ++i) c.labeling[i] = labels[i];
  VertexSums s = vertex_sums(g, c.orientation, c.labeling);
  std::unordered_map<std::int64_t, int> count;
  long pairs = 0;
  for (VertexId v = 0; v < n; ++v) pairs += count[s[v]]++;

  auto move_sum = [&](VertexId v, std::int64_t delta) {
    pairs -= --count[s[v]];
    s[v] += delta;
    pairs += count[s[v]]++;
  };
  auto swap_labels = [&](EdgeId e, EdgeId f) {
    const Label le = c.labeling[e];
    const Label lf = c.labeling[f];
    move_sum(c.orientation.head(g, e), lf - le);
    move_sum(c.orientation.tail(g, e), le - lf);
    move_sum(c.orientation.head(g, f), le - lf);
    move_sum(c.orientation.tail(g, f), lf - le);
    c.labeling[e] = lf;
    c.labeling[f] = le;
  };
  for (long step = 0; step < budget && pairs > 0; ++step) {
    const EdgeId e = static_cast<EdgeId>(rng.below(static_cast<std::uint32_t>(m)));
    const EdgeId f = static_cast<EdgeId>(rng.below(static_cast<std::uint32_t>(m)));
    if (e == f) continue;
    const long before = pairs;
    swap_labels(e, f);
    if (pairs > before) swap_labels(e, f);
  }
  if (pairs > 0 || !is_antimagic(g, c)) return std::nullopt;
  return c;
}

}  // namespace detail

/// Antimagic orientation of a connected graph through the strategy
/// cascade. Throws UnsupportedInstance when every strategy declines.
inline AlphaResult antimagic_by_alpha(const Graph& g, const AlphaOptions& options = {}) {
  if (!is_connected(g)) throw RejectedInstance("G is connected");
  AlphaResult acc;

  if (g.order() >= 2 && radius(g) <= 2) {
    const VertexId c = *center_within(g, 2);
    WitnessConfig w;
    w.centers = {c};
    if (auto r = detail::try_x(g, w, acc.log)) {
      acc.result = std::move(r->result);
      acc.strategy = Strategy::radius_two;
      acc.centers = w.centers;
      return acc;
    }
  }

  if (auto s = choose_S_min_components(g)) {
    acc.independent = *s;
    if (!satisfies_claim_star(*s)) acc.log.push_back("some H_S component holds a single vertex of S");
    if (s->alpha == 3 && g.order() >= 13) {
      if (auto r = detail::alpha3(g, *s, acc)) return std::move(*r);
    }
    if (s->alpha == 4 && g.min_degree() >= 11) {
      if (auto r = detail::alpha4(g, *s, acc)) return std::move(*r);
    }
  }

  if (g.size() <= kOracleMaxEdges) {
    if (auto w = oracle_antimagic_exists(g)) {
      acc.result = std::move(*w);
      acc.strategy = Strategy::oracle;
      return acc;
    }
    throw UnsupportedInstance("no antimagic orientation exists");
  }
  if (auto w = detail::local_search(g, options.seed, options.local_search_budget)) {
    acc.result = std::move(*w);
    acc.strategy = Strategy::local_search;
    return acc;
  }
  throw UnsupportedInstance("no strategy applies and local search ran out of budget");
}

}  // namespace antimagic
