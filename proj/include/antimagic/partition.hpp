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

// Zero-sum partitions of {1..n}: blocks of prescribed sizes (each >= 2)
// whose sums vanish modulo q, where q = n+1 for even n and q = n for odd n.
//
// Construction. The values split into complementary pairs {i, q-i}, plus
// the singleton {n} when n is odd (n = q). Even blocks take whole pairs.
// Odd blocks need an odd part: for odd n the first odd block takes the
// singleton; the remaining odd blocks (an even number) are matched two by
// two and each couple shares a "signed triple" of pair classes: values
// a, b, c from three distinct classes with a + b + c = 0 (mod q) go to one
// block and q-a, q-b, q-c to the other. Disjoint triples come from Skolem
// sequences; a plain exhaustive search is kept as a fallback.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

struct ZeroSumPartition {
  int n = 0;
  std::vector<int> sizes;
  /// blocks[i] holds sizes[i] values, ascending.
  std::vector<std::vector<int>> blocks;
  int modulus = 0;
};

inline int partition_modulus(int n) { return n % 2 == 0 ? n + 1 : n; }

inline bool check_partition(const ZeroSumPartition& p) {
  if (p.n < 2 || p.modulus != partition_modulus(p.n)) return false;
  if (p.blocks.size() != p.sizes.size()) return false;
  std::vector<char> seen(static_cast<std::size_t>(p.n) + 1, 0);
  int total = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (p.sizes[i] < 2 || static_cast<int>(p.blocks[i].size()) != p.sizes[i]) return false;
    std::int64_t sum = 0;
    for (int r : p.blocks[i]) {
      if (r < 1 || r > p.n || seen[r]) return false;
      seen[r] = 1;
      sum += r;
    }
    if (sum % p.modulus != 0) return false;
    total += p.sizes[i];
  }
  return total == p.n;
}

namespace detail {

inline void validate_sizes(int n, std::span<const int> sizes) {
  if (n < 2) throw InvalidArgument("zero-sum partition needs n >= 2");
  long total = 0;
  for (int s : sizes) {
    if (s < 2) throw InvalidArgument("every block size must be at least 2");
    total += s;
  }
  if (total != n) throw InvalidArgument("block sizes must sum to n");
}

/// Pairs (a_j, b_j), j = 1..k, with b_j - a_j = j that fill the positions
/// 1..2k (a Skolem sequence) or, when `hooked`, 1..2k+1 except 2k. Orders
/// k = 0, 1 (mod 4) from k = 8 on use the closed form; the rest is a
/// leftmost-position search.
inline std::vector<std::pair<int, int>> skolem_pairs(int k, bool hooked) {
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(k) + 1);
  if (!hooked && k >= 8 && (k % 4 == 0 || k % 4 == 1)) {
    const int s = k / 4;
    auto put = [&](int a, int b) { out[b - a] = {a, b}; };
    if (k % 4 == 0) {
      for (int r = 1; r <= 2 * s; ++r) put(4 * s + r - 1, 8 * s - r + 1);
      for (int r = 1; r <= s - 1; ++r) put(r, 4 * s - r - 1);
      for (int r = 1; r <= s - 2; ++r) put(s + r + 1, 3 * s - r);
      put(s, s + 1);
      put(2 * s, 4 * s - 1);
      put(2 * s + 1, 6 * s);
    } else {
      for (int r = 1; r <= 2 * s; ++r) put(4 * s + r + 1, 8 * s - r + 3);
      for (int r = 1; r <= s; ++r) put(r, 4 * s - r + 1);
      for (int r = 1; r <= s - 2; ++r) put(s + r + 2, 3 * s - r + 1);
      put(s + 1, s + 2);
      put(2 * s + 1, 6 * s + 2);
      put(2 * s + 2, 4 * s + 1);
    }
    return out;
  }
  const int length = hooked ? 2 * k + 1 : 2 * k;
  std::vector<int> slot(static_cast<std::size_t>(length) + 2, 0);
  if (hooked) slot[2 * k] = -1;
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  auto fill = [&](auto&& self, int p) -> bool {
    while (p <= length && slot[p] != 0) ++p;
    if (p > length) return true;
    for (int j = k; j >= 1; --j) {
      if (used[j] || p + j > length || slot[p + j] != 0) continue;
      used[j] = 1;
      slot[p] = slot[p + j] = j;
      out[j] = {p, p + j};
      if (self(self, p + 1)) return true;
      used[j] = 0;
      slot[p] = slot[p + j] = 0;
    }
    return false;
  };
  if (!fill(fill, 1)) throw ConstructionBug("no Skolem sequence found");
  return out;
}

/// k signed triples over distinct pair classes, each summing to 0 mod q,
/// for q = 2h+1 and h >= 3k. Built from a (hooked) Skolem sequence:
/// j + (a_j + k) = b_j + k.
inline std::vector<std::array<int, 3>> signed_triples(int k, int q) {
  std::vector<std::array<int, 3>> out;
  if (k == 0) return out;
  const auto pairs = skolem_pairs(k, k % 4 == 2 || k % 4 == 3);
  for (int j = 1; j <= k; ++j) out.push_back({j, pairs[j].first + k, q - pairs[j].second - k});
  return out;
}

inline std::optional<std::vector<std::vector<int>>> paired_partition(int n, std::span<const int> sizes) {
  const int q = partition_modulus(n);
  const int h = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  std::vector<std::vector<int>> blocks(sizes.size());
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] % 2 == 1) odd.push_back(i);

  std::vector<char> class_used(static_cast<std::size_t>(h) + 1, 0);
  std::size_t first_shared = 0;
  if (n % 2 == 1) {
    // odd n forces an odd number of odd blocks
    blocks[odd.front()].push_back(n);
    first_shared = 1;
  }
  const int couples = static_cast<int>((odd.size() - first_shared) / 2);
  if (couples > 0) {
    if (3 * couples > h) return std::nullopt;
    const auto triples = signed_triples(couples, q);
    for (int k = 0; k < couples; ++k) {
      auto& lhs = blocks[odd[first_shared + 2 * k]];
      auto& rhs = blocks[odd[first_shared + 2 * k + 1]];
      for (int value : triples[k]) {
        lhs.push_back(value);
        rhs.push_back(q - value);
        class_used[value <= h ? value : q - value] = 1;
      }
    }
  }
  int next_class = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    while (static_cast<int>(blocks[i].size()) < sizes[i]) {
      while (next_class <= h && class_used[next_class]) ++next_class;
      if (next_class > h) return std::nullopt;
      class_used[next_class] = 1;
      blocks[i].push_back(next_class);
      blocks[i].push_back(q - next_class);
    }
  }
  return blocks;
}

/// Exhaustive search: blocks are filled in input order, candidate values in
/// descending order, the last value of each block forced by the residue.
class ExhaustivePartition {
 public:
  ExhaustivePartition(int n, std::span<const int> sizes) : n_(n), q_(partition_modulus(n)), sizes_(sizes) {
    used_.assign(static_cast<std::size_t>(n) + 1, 0);
    blocks_.resize(sizes.size());
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (fill(0, 0, n_ + 1, 0)) return blocks_;
    return std::nullopt;
  }

 private:
  bool fill(std::size_t block, int placed, int below, long sum) {
    if (block == sizes_.size()) return true;
    auto& current = blocks_[block];
    if (placed == sizes_[block] - 1) {
      // The residue forces the last value: only r itself, or q when q <= n.
      const int r = static_cast<int>(((q_ - sum % q_) % q_));
      for (int value : {r, r == 0 ? q_ : -1}) {
        if (value < 1 || value > n_ || used_[value]) continue;
        used_[value] = 1;
        current.push_back(value);
        if (fill(block + 1, 0, n_ + 1, 0)) return true;
        current.pop_back();
        used_[value] = 0;
      }
      return false;
    }
    // Values inside a block are picked in descending order.
    const int start = std::min(below - 1, n_);
    for (int value = start; value >= 1; --value) {
      if (used_[value]) continue;
      used_[value] = 1;
      current.push_back(value);
      if (fill(block, placed + 1, value, sum + value)) return true;
      current.pop_back();
      used_[value] = 0;
    }
    return false;
  }

  int n_;
  int q_;
  std::span<const int> sizes_;
  std::vector<char> used_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace detail

/// Partition of {1..n} into blocks of the given sizes, each with sum
/// divisible by partition_modulus(n). Deterministic.
inline ZeroSumPartition zero_sum_partition(int n, std::span<const int> sizes) {
  detail::validate_sizes(n, sizes);
  ZeroSumPartition out;
  out.n = n;
  out.sizes.assign(sizes.begin(), sizes.end());
  out.modulus = partition_modulus(n);
  auto blocks = detail::paired_partition(n, sizes);
  if (!blocks) blocks = detail::ExhaustivePartition(n, sizes).run();
  if (!blocks) throw ConstructionBug("no zero-sum partition found");
  for (auto& b : *blocks) std::sort(b.begin(), b.end());
  out.blocks = std::move(*blocks);
  return out;
}

inline ZeroSumPartition zero_sum_partition(int n, std::initializer_list<int> sizes) {
  return zero_sum_partition(n, std::span<const int>(sizes.begin(), sizes.size()));
}

}  // namespace antimagic
