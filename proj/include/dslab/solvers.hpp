// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "dslab/gadget.hpp"
#include "dslab/graph.hpp"
#include "dslab/oracles.hpp"
#include "dslab/rational.hpp"
#include "dslab/witness.hpp"

namespace dslab {

enum class Method { Flow, AnchoredFlow, SubsetSearch, Extraction, Peeling, Structured };
enum class Guarantee { Exact, Factor2, Factor3 };

struct SolveResult {
  Witness witness;
  Rat value;  // always equals the density recomputed from the witness
  Method method;
  Guarantee guarantee;
};

// Exact densest subgraph via binary search over edge-weighted cut networks.
// Returns the inclusion-maximal optimum (the union of all optima).
SolveResult densest_subgraph_exact(const Graph& g);

// Exact max density over supersets of the anchor set (which may be empty,
// reducing to the global problem).  Returns the maximal optimum.
SolveResult anchored_densest(const Graph& g, std::span<const int> anchors);

// Exact density with at least k vertices, by anchoring every k-subset.
// Work is C(n, k) flow computations; throws budget_exceeded when C(n, k)
// exceeds the budget.
SolveResult dalks_exact_xp(const Graph& g, int k, std::uint64_t budget = default_budget());

// Factor-2 approximation: repeatedly extract the maximal densest subgraph
// from what remains until at least k vertices are collected.
SolveResult dalks_2approx(const Graph& g, int k);

// Factor-3 approximation: peel minimum-degree vertices (ties: smallest
// index) and keep the densest suffix of size at least k.
SolveResult dalks_3approx_peel(const Graph& g, int k);

// Exact max density over vertex sets of size >= k in a gadget expansion,
// computed on the compressed shape without materializing it.  Work is the
// product of (multiplicity + 1) over element classes; throws
// budget_exceeded when that product exceeds the budget.
Rat dalks_exact_structured(const GadgetShape& s, std::int64_t k,
                           std::uint64_t budget = default_budget());

std::string method_name(Method m);
std::string guarantee_name(Guarantee g);

}  // namespace dslab
