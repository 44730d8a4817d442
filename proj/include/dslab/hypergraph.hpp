// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

// t-uniform hypergraph in canonical form: every subset is a strictly
// increasing t-tuple over [0, n), the subset list is sorted
// lexicographically, and there are no duplicates.
struct UniformHypergraph {
  int n = 0;
  int t = 0;
  std::vector<std::vector<int>> subsets;

  std::int64_t size() const { return static_cast<std::int64_t>(subsets.size()); }
};

// Validates and canonicalizes (elements within a subset may arrive in any
// order; repeated elements or repeated subsets are rejected).
UniformHypergraph make_hypergraph(int n, int t, std::vector<std::vector<int>> subsets);

// Number of subsets fully contained in the vertex set.
std::int64_t subsets_within(const UniformHypergraph& h, std::span<const int> vertices);

// Exact density: contained subsets / |W|.  Throws on an empty set.
Rat hypergraph_density(const UniformHypergraph& h, std::span<const int> vertices);

// Serialization: first line "n s t", then one line of t ascending elements
// per subset in canonical order.  The parser accepts '#' comments.
std::string serialize_hypergraph(const UniformHypergraph& h);
UniformHypergraph parse_hypergraph(std::string_view text);
UniformHypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const UniformHypergraph& h, const std::string& path);

}  // namespace dslab
