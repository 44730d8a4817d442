// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/solvers.hpp"

#include <doctest.h>

#include <vector>

#include "dslab/generators.hpp"
#include "test_support.hpp"

namespace {

using dslab::BigInt;
using dslab::Graph;
using dslab::Rat;
using dslab::SolveResult;

std::vector<int> to_ints(const dslab::Witness& w) {
  return std::vector<int>(w.vertices.begin(), w.vertices.end());
}

}  // namespace

TEST_CASE("exact densest subgraph matches the oracle and is the union of optima") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = testref::random_graph(5 + static_cast<int>(seed % 5), 45, seed);
    const SolveResult r = dslab::densest_subgraph_exact(g);
    CHECK(r.value == testref::anchored_density(g, 0));
    CHECK(dslab::density(g, to_ints(r.witness)) == r.value);
    CHECK(to_ints(r.witness) == testref::union_of_optima(g, 0));
  }
}

TEST_CASE("anchored density matches superset enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = testref::random_graph(7, 45, seed);
    for (std::uint64_t anchors : {std::uint64_t{1} << 2, std::uint64_t{0x21}, std::uint64_t{0x58}}) {
      const SolveResult r = dslab::anchored_densest(g, testref::mask_to_set(anchors, g.n));
      CHECK(r.value == testref::anchored_density(g, anchors));
      CHECK(to_ints(r.witness) == testref::union_of_optima(g, anchors));
    }
    // Empty anchors reduce to the unanchored problem.
    CHECK(dslab::anchored_densest(g, std::vector<int>{}).value ==
          dslab::densest_subgraph_exact(g).value);
  }
}

TEST_CASE("anchoring the middle of a path keeps both neighbours") {
  // Path a-b-c anchored at the endpoint a: the best superset is the whole
  // path at density 2/3.
  const Graph p3 = dslab::path_graph(3);
  const SolveResult r = dslab::anchored_densest(p3, std::vector<int>{0});
  CHECK(r.value == Rat(BigInt(2), BigInt(3)));
  CHECK(to_ints(r.witness) == std::vector<int>{0, 1, 2});
}

TEST_CASE("subset-anchored exact solver agrees with the brute oracle") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = testref::random_graph(8, 50, seed);
    for (int k = 1; k <= 3; ++k) {
      const SolveResult r = dslab::dalks_exact_xp(g, k);
      const auto expect = testref::den_atleast(g, k);
      REQUIRE(expect.has_value());
      CHECK(r.value == expect->value);
      CHECK(static_cast<int>(r.witness.size()) >= k);
      CHECK(dslab::density(g, to_ints(r.witness)) == r.value);
    }
  }
  CHECK_THROWS_AS(dslab::dalks_exact_xp(dslab::complete_graph(40), 20, 1000),
                  dslab::budget_exceeded);
}

TEST_CASE("the extraction approximation keeps its factor-2 envelope") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = testref::random_graph(9, 40, seed);
    for (int k = 1; k <= g.n; ++k) {
      const SolveResult r = dslab::dalks_2approx(g, k);
      const auto opt = testref::den_atleast(g, k);
      REQUIRE(opt.has_value());
      CHECK(static_cast<int>(r.witness.size()) >= k);
      CHECK(dslab::density(g, to_ints(r.witness)) == r.value);
      if (opt->value.is_zero()) {
        CHECK(r.value.is_zero());
      } else {
        CHECK(opt->value <= r.value * Rat(2));
        CHECK(r.value <= opt->value);
      }
    }
  }
}

TEST_CASE("when the global optimum is already large the extraction is exact") {
  // K_5 plus a pendant vertex: the unconstrained densest subgraph is K_5
  // itself, so for k = 5 the approximation returns it exactly.
  Graph g = dslab::complete_graph(5);
  g = dslab::make_graph(6, [&] {
    auto edges = g.edges;
    edges.emplace_back(0, 5);
    return edges;
  }());
  const SolveResult r = dslab::dalks_2approx(g, 5);
  CHECK(r.value == Rat(2));
  CHECK(to_ints(r.witness) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("two disjoint triangles cover k = 6 at density 1") {
  const Graph g = dslab::disjoint_union(dslab::disjoint_union(dslab::complete_graph(3),
                                                              dslab::complete_graph(3)),
                                        dslab::make_graph(1, {}));
  const SolveResult r = dslab::dalks_2approx(g, 6);
  CHECK(r.value == Rat(1));
  CHECK(r.witness.size() == 6);
}

TEST_CASE("the peeling approximation keeps its factor-3 envelope") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = testref::random_graph(9, 40, seed + 100);
    for (int k = 1; k <= g.n; ++k) {
      const SolveResult r = dslab::dalks_3approx_peel(g, k);
      const auto opt = testref::den_atleast(g, k);
      REQUIRE(opt.has_value());
      CHECK(static_cast<int>(r.witness.size()) >= k);
      CHECK(dslab::density(g, to_ints(r.witness)) == r.value);
      if (opt->value.is_zero()) {
        CHECK(r.value.is_zero());
      } else {
        CHECK(opt->value <= r.value * Rat(3));
        CHECK(r.value <= opt->value);
      }
    }
  }
}

TEST_CASE("the structured solver matches brute force on expanded shapes") {
  const std::vector<dslab::GadgetShape> shapes{
      dslab::make_gadget(3, {2, 1}, {{2, {0, 1}}, {1, {1}}}),
      dslab::make_gadget(2, {1, 1, 1}, {{1, {0, 1, 2}}, {2, {0, 2}}}),
      dslab::make_gadget(0, {2, 2}, {{3, {0, 1}}}),
      dslab::make_gadget(4, {3}, {{2, {0}}}),
  };
  for (const dslab::GadgetShape& s : shapes) {
    const Graph expanded = dslab::expand_gadget(s, dslab::default_budget());
    REQUIRE(expanded.n <= 14);
    for (int k = 1; k <= expanded.n; ++k) {
      const auto expect = testref::den_atleast(expanded, k);
      REQUIRE(expect.has_value());
      CHECK(dslab::dalks_exact_structured(s, k) == expect->value);
    }
  }
}

TEST_CASE("the structured solver refuses profile spaces beyond the budget") {
  const dslab::GadgetShape s = dslab::make_gadget(1, {100, 100, 100, 100, 100}, {});
  CHECK_THROWS_AS(dslab::dalks_exact_structured(s, 1, 1000), dslab::budget_exceeded);
}

TEST_CASE("method and guarantee names are stable") {
  CHECK(dslab::method_name(dslab::Method::Flow) == "flow");
  CHECK(dslab::guarantee_name(dslab::Guarantee::Exact) == "exact");
}
