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

#include <catch_amalgamated.hpp>

#include "antimagic/antimagic.hpp"
#include "support.hpp"

using namespace antimagic;

namespace {

Graph complement_of_matching(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u % 2 == 0 && v == u + 1)) e.push_back({u, v});
  return support::graph(n, e);
}

}  // namespace

TEST_CASE("independence numbers") {
  CHECK(independence_number(support::cycle(5), 4) == 2);
  CHECK(independence_number(support::complete(4), 4) == 1);
  CHECK(independence_number(support::petersen(), 4) == 4);
  CHECK_FALSE(max_independent_set(support::cycle(12), 4));
  CHECK_THROWS_AS(max_independent_set(support::cycle(5), 7), InvalidArgument);
}

TEST_CASE("independence number matches enumeration") {
  Lcg64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.between(1, 16);
    std::vector<Edge> e;
    const std::uint32_t density = rng.between(20, 80);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(density, 100)) e.push_back({u, v});
    const Graph g = support::graph(n, e);
    const int expected = oracle::independence_number(n, support::raw_edges(g));
    const auto cert = max_independent_set(g, 6);
    if (expected > 6) {
      CHECK_FALSE(cert);
    } else {
      REQUIRE(cert);
      CHECK(cert->alpha == expected);
      CHECK(is_independent(g, cert->set));
    }
  }
}

TEST_CASE("component-minimising choice of S") {
  const auto c6 = choose_S_min_components(support::cycle(6));
  REQUIRE(c6);
  CHECK(c6->alpha == 3);
  CHECK(c6->hs_components == 1);
  CHECK(c6->set == std::vector<VertexId>{0, 2, 4});

  const auto k33 = choose_S_min_components(support::complete_bipartite(3, 3));
  REQUIRE(k33);
  CHECK(k33->hs_components == 1);
  CHECK(k33->set == std::vector<VertexId>{0, 1, 2});

  const Graph triangles = support::graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  const auto t = choose_S_min_components(triangles);
  REQUIRE(t);
  CHECK(t->alpha == 2);
  int best = 1 << 20;
  for_each_independent_set(triangles, 2, [&](const std::vector<VertexId>& s) {
    best = std::min(best, make_certificate(triangles, s).hs_components);
    return true;
  });
  CHECK(t->hs_components == best);

  CHECK_FALSE(choose_S_min_components(support::cycle(10)));
}

TEST_CASE("cascade on small families") {
  const Graph g = complement_of_matching(10);
  CHECK(radius(g) <= 2);
  const auto r = antimagic_by_alpha(g);
  CHECK(r.strategy == Strategy::radius_two);
  CHECK(strategy_number(r.strategy) == 0);
  CHECK(support::accepts(g, r.result));

  const Graph p3 = support::path(3);
  const auto q = antimagic_by_alpha(p3);
  CHECK(support::accepts(p3, q.result));

  const Graph p6 = support::path(6);
  const auto s = antimagic_by_alpha(p6);
  CHECK(strategy_number(s.strategy) == 3);
  CHECK(support::accepts(p6, s.result));

  CHECK_THROWS_AS(antimagic_by_alpha(support::graph(4, {{0, 1}, {2, 3}})), RejectedInstance);
}

TEST_CASE("alpha = 4 through strategy 2") {
  FamilySpec spec;
  spec.family = Family::alpha_bounded;
  spec.n = 32;
  spec.k = 4;
  spec.delta_min = 11;
  spec.min_radius = 3;
  spec.seed = 7;
  const Graph g = generate(spec);
  CHECK(g.min_degree() >= 11);
  CHECK(oracle::independence_number(32, support::raw_edges(g)) == 4);
  const auto r = antimagic_by_alpha(g);
  CHECK(strategy_number(r.strategy) == 2);
  CHECK(support::accepts(g, r.result));
}

TEST_CASE("alpha = 3 edge bound") {
  CHECK_FALSE(alpha3_edge_bound_holds(12));
  CHECK(alpha3_edge_bound_holds(13));
  for (std::int64_t n = 1; n < 200; ++n) {
    const double x = static_cast<double>(n);
    CHECK(alpha3_edge_bound_holds(n) == (x * (x - 1) / 2 - x * x / 3 > 2 * x - 5));
  }
}

TEST_CASE("local search fallback is seeded") {
  const Graph g = support::graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}});
  const auto a = antimagic_by_alpha(g, {3, 100000});
  const auto b = antimagic_by_alpha(g, {3, 100000});
  CHECK(a.strategy == Strategy::local_search);
  CHECK(a.result.labeling == b.result.labeling);
  CHECK(support::accepts(g, a.result));
}
