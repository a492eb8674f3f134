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

#include <algorithm>

#include "antimagic/antimagic.hpp"
#include "planted.hpp"
#include "repair_suite.hpp"
#include "support.hpp"

using namespace antimagic;

namespace {

bool contains(const std::vector<VertexId>& v, VertexId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

WitnessConfig single(VertexId x) { return {{x}, {}, WitnessShape::none}; }

}  // namespace

TEST_CASE("witness validation") {
  CHECK(validate_witnesses(support::complete_bipartite(1, 4), single(0)).ok);
  CHECK(validate_witnesses(support::cycle(4), single(0)).ok);
  CHECK(validate_witnesses(support::path(6), single(1)).reason == "distance");
  CHECK(validate_witnesses(support::path(3), single(0)).reason == "neighbors");

  // Two centres on a sparse graph: 14 vertices, 2*14-6 edges.
  std::vector<Edge> edges;
  for (int k = 2; k < 14; ++k) edges.push_back({k % 2, k});
  edges.push_back({0, 1});
  while (static_cast<int>(edges.size()) < 2 * 14 - 6) {
    const int k = static_cast<int>(edges.size());
    edges.push_back({k - 11, k - 10});
  }
  const Graph g = support::graph(14, edges);
  REQUIRE(g.size() == 22);
  const WitnessConfig w{{0, 1}, {2, 4, 6, 3, 5, 7, 9}, WitnessShape::x1_to_x2};
  CHECK(validate_witnesses(g, w).reason == "edge-count");
}

TEST_CASE("forest and split") {
  const Graph star = support::complete_bipartite(1, 4);
  const auto f = build_forest(star, single(0));
  CHECK(f.a1 == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(f.a2.empty());

  const Graph c4 = support::cycle(4);
  const auto h = build_forest(c4, single(0));
  CHECK(h.a1 == std::vector<VertexId>{1, 3});
  CHECK(h.a2 == std::vector<VertexId>{2});
  CHECK(c4.edge(h.forest_edge[2]) == Edge{1, 2});
}

TEST_CASE("single-centre labelings") {
  const Graph star = support::complete_bipartite(1, 4);
  const auto r = construct_x_orientation(star, single(0));
  const auto s = oracle::sums(5, support::arcs(star, r.result));
  CHECK(s[0] == -10);
  std::vector<std::int64_t> leaves(s.begin() + 1, s.end());
  std::sort(leaves.begin(), leaves.end());
  CHECK(leaves == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(r.trace.split == XCase::a1_larger);

  const Graph c4 = support::cycle(4);
  const auto st = label_x_instance(c4, single(0));
  const auto c = construct_x_orientation(c4, single(0));
  CHECK(support::accepts(c4, c.result));
  const auto t = oracle::sums(4, support::arcs(c4, c.result));
  if (!c.trace.small_fallback) {
    CHECK(t[1] > 0);
    CHECK(t[3] > 0);
    CHECK(t[2] < 0);
  }
  const auto props = check_x_properties(c4, st.trace, vertex_sums(c4, st.labeled.orientation, st.labeled.labeling),
                                        st.labeled.labeling);
  CHECK(props.p1);
  CHECK(props.p2);
}

TEST_CASE("radius-two graphs through one centre") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FamilySpec spec;
    spec.family = Family::radius2_ball;
    spec.n = 5 + static_cast<int>(seed % 30);
    spec.seed = seed;
    const Graph g = generate(spec);
    const VertexId c = *center_within(g, 2);
    const auto r = construct_x_orientation(g, single(c));
    CHECK(support::accepts(g, r.result));
  }
}

TEST_CASE("ordering properties hold before repair") {
  Lcg64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    tools::PlantedOptions o;
    o.t = rng.between(2, 3);
    o.shape = o.t == 2 ? (rng.chance(1, 2) ? WitnessShape::x1_to_x2 : WitnessShape::x1_to_y4)
                       : (rng.chance(1, 2) ? WitnessShape::x3_to_y4 : WitnessShape::x3_to_y8);
    o.n = rng.between(4 * o.t + 2, 30);
    auto inst = tools::planted_instance(o, rng);
    if (!inst) continue;
    const Graph& g = inst->graph;
    const XState st = label_x_instance(g, inst->witnesses);
    const VertexSums s = vertex_sums(g, st.labeled.orientation, st.labeled.labeling);
    const auto props = check_x_properties(g, st.trace, s, st.labeled.labeling);
    CHECK(props.p1);
    CHECK(props.p2);
    CHECK(props.p3);
    CHECK(st.trace.e1.size() + st.trace.inner.size() + st.trace.e2.size() + st.trace.forest.e0.size() ==
          static_cast<std::size_t>(g.size()));

    const XConstruction done = repair_x_sums(g, st);
    REQUIRE(support::accepts(g, done.result));
    const VertexSums after = oracle::sums(g.order(), support::arcs(g, done.result));
    for (VertexId v = 0; v < g.order(); ++v)
      if (after[v] != s[v]) CHECK(contains(done.trace.touched, v));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("t = 2 repair moves") {
  const auto cases = support::load_repair_cases(ANTIMAGIC_TEST_DATA "/repair");
  int seen = 0;
  for (const auto& c : cases) {
    if (c.branches.size() != 1) continue;
    const XState st = label_x_instance(c.graph, c.witnesses, c.options);
    const auto& x = c.witnesses.centers;
    const auto& pre = st.trace.pre_repair_sums;
    const XConstruction r = repair_x_sums(c.graph, st);
    const auto post = oracle::sums(c.graph.order(), support::arcs(c.graph, r.result));
    if (c.branches[0] == "complete-swap-1-2" && x.size() == 2) {
      REQUIRE(pre[x[0]] == pre[x[1]]);
      const Label a = r.result.labeling[*c.graph.find_edge(x[0], c.witnesses.witnesses[3])];
      CHECK(a >= 2);
      CHECK(post[x[0]] == pre[x[0]] - (a - 1));
      CHECK(post[x[1]] == pre[x[1]] + (a - 1));
      ++seen;
    }
    if (c.branches[0] == "reverse-x1x2") {
      REQUIRE(pre[x[0]] == pre[x[1]]);
      CHECK(post[x[0]] == pre[x[0]] + 2);
      CHECK(post[x[1]] == pre[x[1]] - 2);
      ++seen;
    }
  }
  CHECK(seen == 2);
}

TEST_CASE("repair suite is accepted and deterministic") {
  for (const auto& c : support::load_repair_cases(ANTIMAGIC_TEST_DATA "/repair")) {
    INFO(c.name);
    const auto a = construct_x_orientation(c.graph, c.witnesses, c.options);
    const auto b = construct_x_orientation(c.graph, c.witnesses, c.options);
    CHECK(support::accepts(c.graph, a.result));
    CHECK(a.result.labeling == b.result.labeling);
    CHECK(a.result.orientation == b.result.orientation);
    std::vector<std::string> tags;
    for (RepairBranch br : a.trace.repairs) tags.emplace_back(to_string(br));
    CHECK(tags == c.branches);
  }
}

TEST_CASE("two dominating centres") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    FamilySpec spec;
    spec.family = Family::two_dominator;
    spec.n = 6 + static_cast<int>(seed % 20);
    spec.seed = seed;
    const Graph g = generate(spec);
    const std::vector<VertexId> x{0, 1};
    if (auto r = construct_corollary_main(g, x)) CHECK(support::accepts(g, r->result));
  }
  const Graph p5 = support::path(5);
  CHECK_THROWS_AS(construct_corollary_main(p5, std::vector<VertexId>{0, 1}), RejectedInstance);
}
