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

// 64-bit LCG with a fixed contract so that seeded generators reproduce the
// same graphs from any language:
//
//   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   output = state' >> 32
//
// std::uniform_int_distribution is implementation-defined, so bounded draws
// use plain rejection sampling on the 32-bit output instead.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t state() const noexcept { return state_; }

  std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform in [0, bound).
  std::uint32_t below(std::uint32_t bound) {
    if (bound == 0) throw InvalidArgument("below() needs a positive bound");
    const std::uint32_t limit = static_cast<std::uint32_t>(-bound) % bound;  // 2^32 mod bound
    for (;;) {
      const std::uint32_t r = next();
      if (r >= limit) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) {
    if (hi < lo) throw InvalidArgument("between() needs lo <= hi");
    return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo) + 1U));
  }

  /// True with probability num/den.
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

  /// Fisher-Yates, from the back.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(static_cast<std::uint32_t>(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace antimagic
