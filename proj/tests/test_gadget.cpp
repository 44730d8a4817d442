// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/gadget.hpp"

#include <doctest.h>

#include "dslab/oracles.hpp"

#include <stdexcept>
#include <vector>

#include "test_support.hpp"

namespace {

using dslab::BigInt;
using dslab::GadgetShape;
using dslab::Graph;

GadgetShape sample_shape() {
  // K_3 plus two element classes (x2, x1) and two subset classes:
  // one double copy of {0, 1} and one single copy of {1}.
  return dslab::make_gadget(3, {2, 1}, {{2, {0, 1}}, {1, {1}}});
}

std::vector<GadgetShape> small_shapes() {
  std::vector<GadgetShape> shapes;
  shapes.push_back(sample_shape());
  shapes.push_back(dslab::make_gadget(0, {1, 1, 1}, {{1, {0, 1, 2}}}));
  shapes.push_back(dslab::make_gadget(4, {}, {}));
  shapes.push_back(dslab::make_gadget(2, {3, 2}, {{2, {0}}, {2, {0, 1}}, {1, {1}}}));
  shapes.push_back(dslab::make_gadget(1, {2, 2, 2}, {{1, {0, 2}}, {3, {1, 2}}}));
  return shapes;
}

}  // namespace

TEST_CASE("make_gadget validates and sorts members") {
  const GadgetShape s = dslab::make_gadget(2, {1, 1, 1}, {{1, {2, 0}}});
  CHECK(s.subsets[0].members == std::vector<int>{0, 2});
  CHECK_THROWS_AS(dslab::make_gadget(-1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_gadget(1, {-1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_gadget(1, {1}, {{-1, {0}}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_gadget(1, {1}, {{1, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(dslab::make_gadget(1, {1}, {{1, {1}}}), std::invalid_argument);
}

TEST_CASE("vertex and edge totals match the explicit expansion") {
  for (const GadgetShape& s : small_shapes()) {
    const Graph expanded = testref::expand_reference(s);
    CHECK(dslab::gadget_vertex_total(s) == expanded.n);
    CHECK(dslab::gadget_edge_total(s) == expanded.m());
  }
}

TEST_CASE("layout offsets match the reference layout") {
  const GadgetShape s = sample_shape();
  // Layout: 3 clique vertices, then 2 + 1 element copies, then 2 + 1 subset
  // copies.
  CHECK(dslab::gadget_element_offset(s, 0) == 3);
  CHECK(dslab::gadget_element_offset(s, 1) == 5);
  CHECK(dslab::gadget_subset_offset(s, 0) == 6);
  CHECK(dslab::gadget_subset_offset(s, 1) == 8);
  CHECK_THROWS_AS(dslab::gadget_element_offset(s, 2), std::invalid_argument);
  CHECK_THROWS_AS(dslab::gadget_subset_offset(s, 2), std::invalid_argument);
}

TEST_CASE("expansion and streaming produce the same canonical edge list") {
  for (const GadgetShape& s : small_shapes()) {
    const Graph expanded = dslab::expand_gadget(s, dslab::default_budget());
    const Graph reference = testref::expand_reference(s);
    CHECK(expanded.n == reference.n);
    CHECK(expanded.edges == reference.edges);

    std::vector<std::pair<int, int>> streamed;
    dslab::gadget_for_each_edge(s, [&](std::int64_t u, std::int64_t v) {
      streamed.emplace_back(static_cast<int>(u), static_cast<int>(v));
    });
    CHECK(streamed == reference.edges);
  }
}

TEST_CASE("expansion refuses shapes beyond the budget") {
  const GadgetShape s = dslab::make_gadget(100000, {}, {});
  CHECK_THROWS_AS(dslab::expand_gadget(s, 1000), dslab::budget_exceeded);
}

TEST_CASE("gadget serialization round-trips byte for byte") {
  for (const GadgetShape& s : small_shapes()) {
    const std::string text = dslab::serialize_gadget(s);
    const GadgetShape back = dslab::parse_gadget(text);
    CHECK(back.clique_size == s.clique_size);
    CHECK(back.elements.size() == s.elements.size());
    CHECK(back.subsets.size() == s.subsets.size());
    CHECK(dslab::serialize_gadget(back) == text);
  }
}

TEST_CASE("the gadget parser rejects malformed text") {
  CHECK_THROWS_AS(dslab::parse_gadget("3\n"), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_gadget("3 -1 0\n"), std::invalid_argument);
  // Ids must be sequential from zero.
  CHECK_THROWS_AS(dslab::parse_gadget("1 1 0\n1 2\n"), std::invalid_argument);
  const GadgetShape ok = dslab::parse_gadget("1 1 1\n0 2\n0 3 0\n");
  CHECK(ok.clique_size == 1);
  CHECK(ok.elements[0].multiplicity == 2);
  CHECK(ok.subsets[0].multiplicity == 3);
  CHECK(ok.subsets[0].members == std::vector<int>{0});
}
