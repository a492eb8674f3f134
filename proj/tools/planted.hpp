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

// Random graphs with a planted centre set and witnesses. Centres are
// 0..t-1 and witnesses y_1.. are t, t+1, ...; everything else is random.

#pragma once

#include <vector>

#include "antimagic/generators.hpp"
#include "antimagic/xconstruct.hpp"

namespace antimagic::tools {

struct PlantedInstance {
  Graph graph;
  WitnessConfig witnesses;
};

struct PlantedOptions {
  int t = 2;
  WitnessShape shape = WitnessShape::x1_to_x2;
  int n = 16;
  /// Percent chance for each extra edge outside X.
  int density = 20;
  /// Percent chance that an outside vertex gets an extra edge to a centre.
  int centre_density = 10;
  /// Percent chance for each optional edge inside X.
  int inner_density = 50;
};

inline std::optional<PlantedInstance> planted_instance(const PlantedOptions& o, Lcg64& rng) {
  const int t = o.t;
  const int n = o.n;
  const int witnesses = t == 1 ? 0 : 4 * t - 1;
  if (n < t + witnesses + 1) return std::nullopt;
  detail::EdgeSet es(n);
  std::vector<VertexId> y;
  for (int k = 0; k < witnesses; ++k) y.push_back(t + k);
  auto join = [&](VertexId x, std::initializer_list<int> idx) {
    for (int k : idx) es.add(x, y[k - 1]);
  };
  if (t == 2) {
    join(0, {1, 2, 3});
    join(1, {4, 5, 6, 7});
    if (o.shape == WitnessShape::x1_to_y4) join(0, {4});
    else es.add(0, 1);
    if (rng.chance(o.inner_density, 100)) es.add(0, 1);
  } else if (t == 3) {
    join(0, {1, 2, 3, 4});
    join(1, {4, 5, 6, 7, 8});
    join(2, {9, 10, 11});
    join(2, {o.shape == WitnessShape::x3_to_y4 ? 4 : 8});
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
      if (rng.chance(o.inner_density, 100)) es.add(a, b);
  } else {
    es.add(0, 1);
    es.add(0, 2);
  }
  // The rest: A1 vertices touch a random centre, A2 vertices a random
  // earlier non-centre vertex.
  for (VertexId v = t + witnesses; v < n; ++v) {
    if (rng.chance(1, 2)) es.add(v, rng.between(0, t - 1));
    else es.add(v, rng.between(t, v - 1));
  }
  for (VertexId u = t; u < n; ++u) {
    if (rng.chance(o.centre_density, 100)) es.add(u, rng.between(0, t - 1));
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.chance(o.density, 100)) es.add(u, v);
  }
  Graph g = es.graph();
  const int need = t == 2 ? 2 * n - 5 : (t == 3 ? 2 * n - 4 : 0);
  for (int tries = 0; g.size() < need && tries < 10 * n * n; ++tries) {
    es.add(rng.between(t, n - 1), rng.between(t, n - 1));
    g = es.graph();
  }
  PlantedInstance out{std::move(g), {}};
  out.witnesses.centers.clear();
  for (int i = 0; i < t; ++i) out.witnesses.centers.push_back(i);
  out.witnesses.witnesses = y;
  out.witnesses.shape = t == 1 ? WitnessShape::none : o.shape;
  if (!validate_witnesses(out.graph, out.witnesses) || !is_connected(out.graph)) return std::nullopt;
  return out;
}

}  // namespace antimagic::tools
