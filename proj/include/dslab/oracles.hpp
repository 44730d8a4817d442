// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslab/graph.hpp"
#include "dslab/rational.hpp"
#include "dslab/witness.hpp"

namespace dslab {

// Thrown when an exhaustive routine would exceed its work budget.  Callers
// that surface this to the CLI map it to a dedicated exit code.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Work budget for exhaustive routines, measured in elementary enumeration
// steps (subsets visited, recursion nodes).  Defaults to 2^26 and can be
// overridden through the DSLAB_BUDGET environment variable.
std::uint64_t default_budget();

enum class SizeMode { Exact, AtMost, AtLeast };

// Maximum number of edges over induced subgraphs whose size matches `k`
// under the given mode.  Exhaustive; throws budget_exceeded when 2^n exceeds
// the budget.  Returns 0 when no subset qualifies under AtMost (k >= 0
// always admits the empty set); throws std::invalid_argument when Exact or
// AtLeast is unsatisfiable (k > n) or k < 0.
std::int64_t brute_edge_max(const Graph& g, int k, SizeMode mode,
                            std::uint64_t budget = default_budget());

struct DensityOptimum {
  Rat value;
  Witness witness;  // tie-break: smallest size, then lexicographically least
};

// Exact max density over subsets of size >= k (1 <= k <= n).  Exhaustive.
DensityOptimum brute_den_atleast(const Graph& g, int k, std::uint64_t budget = default_budget());

// All t-cliques, each ascending, listed in lexicographic order.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int t,
                                                std::uint64_t budget = default_budget());

// Number of t-cliques of G contained in the given vertex set (big-integer
// count; the enumeration work is budgeted, the count itself is not).
BigInt count_cliques_in(const Graph& g, std::span<const int> vertices, int t,
                        std::uint64_t budget = default_budget());

}  // namespace dslab
