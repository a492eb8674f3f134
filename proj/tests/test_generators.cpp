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

TEST_CASE("oracle on tiny graphs") {
  const Graph k2 = support::path(2);
  const auto a = oracle_antimagic_exists(k2);
  REQUIRE(a);
  CHECK(a->orientation.tail(k2, 0) == 0);
  CHECK(a->labeling[0] == 1);

  const Graph k3 = support::complete(3);
  const auto b = oracle_antimagic_exists(k3);
  REQUIRE(b);
  const auto s = oracle::sums(3, support::arcs(k3, *b));
  std::vector<std::int64_t> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::int64_t>{-3, -2, 5});

  const Graph p3 = support::path(3);
  const auto c = oracle_antimagic_exists(p3);
  REQUIRE(c);
  CHECK(oracle::sums(3, support::arcs(p3, *c)) == std::vector<std::int64_t>{-1, 3, -2});

  CHECK_FALSE(oracle_antimagic_exists(support::graph(4, {{0, 1}})));
  CHECK_THROWS_AS(oracle_antimagic_exists(support::complete(5)), BudgetError);
}

TEST_CASE("oracle agrees with brute force") {
  Lcg64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.between(2, 6);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(45, 100) && e.size() < 6) e.push_back({u, v});
    const Graph g = support::graph(n, e);
    const auto w = oracle_antimagic_exists(g);
    CHECK(w.has_value() == oracle::antimagic_exists(n, support::raw_edges(g)));
    if (w) CHECK(support::accepts(g, *w));
  }
}

TEST_CASE("fixed families") {
  FamilySpec star{Family::star};
  star.n = 4;
  const Graph s = generate(star);
  CHECK(to_edge_list(s) == to_edge_list(support::complete_bipartite(1, 4)));

  FamilySpec bi{Family::biregular};
  bi.a = bi.b = 3;
  bi.side_a = bi.side_b = 3;
  CHECK(to_edge_list(generate(bi)) == to_edge_list(support::complete_bipartite(3, 3)));

  FamilySpec wheel{Family::wheel};
  wheel.n = 5;
  const Graph w = generate(wheel);
  CHECK(w.order() == 6);
  CHECK(w.size() == 10);
  CHECK(w.degree(0) == 5);

  FamilySpec k{Family::complete};
  k.n = 5;
  CHECK(generate(k).size() == 10);
  FamilySpec c{Family::cycle};
  c.n = 7;
  CHECK(to_edge_list(generate(c)) == to_edge_list(support::cycle(7)));
  FamilySpec p{Family::path};
  p.n = 7;
  CHECK(to_edge_list(generate(p)) == to_edge_list(support::path(7)));
}

TEST_CASE("invalid parameters") {
  FamilySpec bi{Family::biregular};
  bi.a = 3;
  bi.b = 4;
  bi.side_a = 4;
  bi.side_b = 4;
  CHECK_THROWS_AS(generate(bi), InvalidArgument);
  FamilySpec cyc{Family::cycle};
  cyc.n = 2;
  CHECK_THROWS_AS(generate(cyc), InvalidArgument);
  FamilySpec ab{Family::alpha_bounded};
  ab.n = 20;
  ab.k = 7;
  CHECK_THROWS_AS(generate(ab), InvalidArgument);
  CHECK_FALSE(family_from_string("hypercube"));
  CHECK(family_from_string("radius2-ball") == Family::radius2_ball);
}

TEST_CASE("random families satisfy their hypotheses") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    FamilySpec r{Family::radius2_ball};
    r.n = 4 + static_cast<int>(seed);
    r.seed = seed;
    const Graph g = generate(r);
    CHECK(oracle::radius(g.order(), support::raw_edges(g)) <= 2);
    CHECK(to_edge_list(g) == to_edge_list(generate(r)));

    FamilySpec bi{Family::biregular};
    bi.a = 3;
    bi.b = 4;
    bi.side_a = 8;
    bi.side_b = 6;
    bi.seed = seed;
    const Graph h = generate(bi);
    for (VertexId v = 0; v < 8; ++v) CHECK(h.degree(v) == 3);
    for (VertexId v = 8; v < 14; ++v) CHECK(h.degree(v) == 4);
    CHECK(oracle::connected(14, support::raw_edges(h)));

    FamilySpec d{Family::two_dominator};
    d.n = 10;
    d.seed = seed;
    const Graph t = generate(d);
    const auto dist = oracle::all_distances(10, support::raw_edges(t));
    for (VertexId v = 2; v < 10; ++v) CHECK(std::min(dist[0][v], dist[1][v]) == 1);
    CHECK(dist[0][1] <= 2);
  }
}

TEST_CASE("alpha-bounded graphs") {
  FamilySpec spec{Family::alpha_bounded};
  spec.n = 32;
  spec.k = 4;
  spec.delta_min = 11;
  spec.seed = 7;
  const Graph g = generate(spec);
  CHECK(oracle::connected(32, support::raw_edges(g)));
  CHECK(oracle::independence_number(32, support::raw_edges(g)) == 4);
  CHECK(g.min_degree() >= 11);
}

TEST_CASE("lcg stream") {
  Lcg64 rng(0);
  const std::uint64_t a = 6364136223846793005ULL, c = 1442695040888963407ULL;
  std::uint64_t state = 0;
  for (int i = 0; i < 5; ++i) {
    state = state * a + c;
    CHECK(rng.next() == static_cast<std::uint32_t>(state >> 32));
  }
  Lcg64 r(3);
  for (int i = 0; i < 1000; ++i) {
    const int x = r.between(-2, 5);
    CHECK(x >= -2);
    CHECK(x <= 5);
  }
}
