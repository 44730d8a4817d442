// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/graph.hpp"

#include <doctest.h>

#include <stdexcept>

#include "test_support.hpp"

namespace {

using dslab::Graph;
using dslab::Rat;

}  // namespace

TEST_CASE("make_graph canonicalizes endpoint order and edge order") {
  const Graph g = dslab::make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
  CHECK(g.n == 4);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.m() == 3);
}

TEST_CASE("make_graph rejects malformed input") {
  CHECK_THROWS_AS(dslab::make_graph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_graph(3, {{0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("named families have the expected sizes") {
  CHECK(dslab::complete_graph(5).m() == 10);
  CHECK(dslab::complete_graph(1).m() == 0);
  CHECK(dslab::cycle_graph(5).m() == 5);
  CHECK(dslab::path_graph(4).m() == 3);
  CHECK(dslab::path_graph(1).m() == 0);
  CHECK_THROWS_AS(dslab::cycle_graph(2), std::invalid_argument);
}

TEST_CASE("degrees match a direct edge scan") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = testref::random_graph(9, 40, seed);
    const auto deg = dslab::degrees(g);
    REQUIRE(deg.size() == 9);
    for (int v = 0; v < g.n; ++v) {
      std::int64_t expect = 0;
      for (const auto& [a, b] : g.edges) expect += (a == v) + (b == v);
      CHECK(deg[v] == expect);
    }
  }
}

TEST_CASE("adjacency bits agree with the edge list") {
  const Graph g = testref::random_graph(10, 50, 7);
  const dslab::AdjacencyBits adj(g);
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      const bool listed =
          std::find(g.edges.begin(), g.edges.end(),
                    std::make_pair(std::min(u, v), std::max(u, v))) != g.edges.end() &&
          u != v;
      CHECK(adj.test(u, v) == listed);
    }
  }
}

TEST_CASE("edges_within matches the mask oracle on random sets") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = testref::random_graph(8, 45, seed);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const auto set = testref::mask_to_set(mask, g.n);
      CHECK(dslab::edges_within(g, set) == testref::edges_in_mask(g, mask));
    }
  }
  CHECK_THROWS_AS(dslab::edges_within(dslab::complete_graph(3), std::vector<int>{0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dslab::edges_within(dslab::complete_graph(3), std::vector<int>{3}),
                  std::invalid_argument);
}

TEST_CASE("induced subgraphs preserve incidence under relabelling") {
  const Graph g = testref::random_graph(9, 50, 3);
  const std::vector<int> set{1, 3, 4, 7, 8};
  const Graph sub = dslab::induced_subgraph(g, set);
  CHECK(sub.n == 5);
  std::int64_t expect = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto edge = std::make_pair(set[i], set[j]);
      if (std::find(g.edges.begin(), g.edges.end(), edge) != g.edges.end()) {
        ++expect;
        CHECK(std::find(sub.edges.begin(), sub.edges.end(),
                        std::make_pair(static_cast<int>(i), static_cast<int>(j))) !=
              sub.edges.end());
      }
    }
  }
  CHECK(sub.m() == expect);
}

TEST_CASE("disjoint_union shifts the second operand") {
  const Graph a = dslab::path_graph(3);
  const Graph b = dslab::complete_graph(3);
  const Graph u = dslab::disjoint_union(a, b);
  CHECK(u.n == 6);
  CHECK(u.m() == a.m() + b.m());
  CHECK(std::find(u.edges.begin(), u.edges.end(), std::make_pair(3, 4)) != u.edges.end());
  CHECK(std::find(u.edges.begin(), u.edges.end(), std::make_pair(2, 3)) == u.edges.end());
}

TEST_CASE("density is the exact edge-to-vertex ratio") {
  const Graph k4 = dslab::complete_graph(4);
  CHECK(dslab::density(k4, std::vector<int>{0, 1, 2, 3}) == Rat(dslab::BigInt(3), dslab::BigInt(2)));
  CHECK(dslab::density(k4, std::vector<int>{0}) == Rat(0));
  CHECK_THROWS_AS(dslab::density(k4, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("graph serialization round-trips byte for byte") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = testref::random_graph(7, 50, seed);
    const std::string text = dslab::serialize_graph(g);
    const Graph back = dslab::parse_graph(text);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
    CHECK(dslab::serialize_graph(back) == text);
  }
}

TEST_CASE("the graph parser accepts comments and rejects malformed text") {
  const Graph g = dslab::parse_graph("# a triangle\n3 3\n\n0 1\n0 2\n# middle\n1 2\n");
  CHECK(g.n == 3);
  CHECK(g.m() == 3);
  CHECK_THROWS_AS(dslab::parse_graph("3\n"), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_graph("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_graph("3 1\n0 1\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_graph("3 1\n0 1 9\n"), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_graph("2 1\n1 1\n"), std::invalid_argument);
}
