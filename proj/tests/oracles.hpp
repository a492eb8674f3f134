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

// Reference computations for tests. They only read raw edge lists and do
// not call any algorithm of the library.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

struct Arc {
  int tail;
  int head;
  std::int64_t label;
};

/// In-sum minus out-sum per vertex.
inline std::vector<std::int64_t> sums(int n, const std::vector<Arc>& arcs) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n), 0);
  for (const Arc& a : arcs) {
    s[a.head] += a.label;
    s[a.tail] -= a.label;
  }
  return s;
}

inline bool distinct(const std::vector<std::int64_t>& s) {
  return std::set<std::int64_t>(s.begin(), s.end()).size() == s.size();
}

inline bool labels_are_permutation(const std::vector<Arc>& arcs) {
  std::vector<std::int64_t> l;
  for (const Arc& a : arcs) l.push_back(a.label);
  std::sort(l.begin(), l.end());
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] != static_cast<std::int64_t>(i) + 1) return false;
  return true;
}

/// Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> all_distances(int n, const std::vector<std::pair<int, int>>& edges) {
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline int radius(int n, const std::vector<std::pair<int, int>>& edges) {
  const auto d = all_distances(n, edges);
  int best = 1 << 28;
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    for (int w = 0; w < n; ++w) ecc = d[v][w] < 0 ? 1 << 28 : std::max(ecc, d[v][w]);
    best = std::min(best, ecc);
  }
  return best;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int parts = n;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) parent[a] = b, --parts;
  }
  return parts <= 1;
}

/// Independence number by bitmask branch and bound (n <= 64).
inline int independence_number(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) adj[u] |= std::uint64_t{1} << v, adj[v] |= std::uint64_t{1} << u;
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t candidates, int size) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    self(self, candidates & ~bit & ~adj[v], size + 1);
    self(self, candidates & ~bit, size);
  };
  rec(rec, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

/// Whether some orientation and labeling is antimagic, by trying every
/// permutation of labels and every orientation (m <= 7).
inline bool antimagic_exists(int n, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<std::int64_t> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Arc> arcs;
      for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (mask >> e & 1) std::swap(u, v);
        arcs.push_back({u, v, perm[e]});
      }
      if (distinct(sums(n, arcs))) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Block sums vanish mod q and the blocks partition {1..n}.
inline bool zero_sum_blocks(int n, int q, const std::vector<std::vector<int>>& blocks,
                            const std::vector<int>& sizes) {
  if (blocks.size() != sizes.size()) return false;
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (static_cast<int>(blocks[i].size()) != sizes[i]) return false;
    long total = 0;
    for (int x : blocks[i]) {
      if (x < 1 || x > n || seen[x]++) return false;
      total += x;
    }
    if (total % q != 0) return false;
  }
  return true;
}

}  // namespace oracle
