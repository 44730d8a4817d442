// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dslab/instance.hpp"
#include "dslab/oracles.hpp"
#include "dslab/rational.hpp"
#include "dslab/witness.hpp"

namespace dslab {

// Outcome of checking a witness against an instance's completeness
// condition.  `valid` holds exactly when the size constraint is met and
// objective >= threshold (compared exactly); violations set `reason`.
struct Verdict {
  bool valid = false;
  Rat objective;
  Rat threshold;
  Rat margin;  // objective - threshold
  std::string reason;
};

std::string serialize_verdict(const Verdict& v);

// Evaluates the witness objective per problem kind: induced edge count
// (|w| = k for GapDkS, <= k for the gamma variant), contained-subset count
// (|w| <= k), t-clique count (|w| = k) against ceil(k^(t-delta)), or density
// (|w| >= k).  GadgetShape carriers are evaluated analytically from class
// counts, cross-validated against the expansion when it fits the budget.
// Out-of-range indices are a precondition violation (throws); size/threshold
// violations yield an invalid verdict with a reason.
Verdict check_witness(const GapInstance& inst, const Witness& w,
                      std::uint64_t budget = default_budget());

enum class ReductionRule { Relax, Shrink, DksToDksh, PolyToDksh, DkshToDalks, CliqueToDalks };

ReductionRule rule_from_name(const std::string& name);
std::string rule_name(ReductionRule rule);

// Completeness-direction witness transport: given a witness valid for the
// source instance, produce one for the target instance.
//  relax        identity
//  shrink       seeded best-of-draws subset selection (the constructive
//               analogue of the proof's random subset; fixed seed 0)
//  dks2dksh     identity (universe = vertex ids)
//  poly2dksh    all (t-1)-cliques of G[S], as universe indices
//  dksh2dalks   clique vertices + all copies of T (padded to size k) + all
//               copies of the lexicographically first ell contained subsets
//  clique2dalks clique vertices + T + the edges inside T
// An invalid source witness is refused with a diagnostic (throws
// std::invalid_argument).
Witness map_witness(ReductionRule rule, const GapInstance& source, const Witness& w,
                    const GapInstance& target, std::uint64_t budget = default_budget());

// Soundness direction of the k-Clique reduction: from a witness of density
// >= alpha on a clique_to_dalks instance, recover the k source vertices
// (witness restricted to the element side) and verify they induce a clique
// in the source graph; returns nothing when the verification fails (which
// the underlying argument only rules out for k >= 10).
std::optional<std::vector<int>> extract_clique(const GapInstance& inst, const Witness& w);

// Constructive shrink: peel minimum-degree vertices of G[S] (ties: smallest
// index) down to size k.  The result keeps at least
// |E(G[S])| * k(k-1) / (r(r-1)) edges (r = |S|); violating that bound is an
// internal error.
std::vector<int> shrink_witness_peel(const Graph& g, const std::vector<int>& s, int k);

// Randomized shrink for clique counting: `draws` seeded uniform k'-subsets
// of S, returning the one with the most t-cliques (ties: earliest draw).
std::vector<int> shrink_clique_witness_sample(const Graph& g, const std::vector<int>& s, int k_prime,
                                              int t, std::uint64_t seed, int draws = 64,
                                              std::uint64_t budget = default_budget());

// Exhaustive verification of the soundness promise of an instance (the
// "no" side of the gap), used to qualify test instances.  Budgeted.
bool brute_check_soundness(const GapInstance& inst, std::uint64_t budget = default_budget());

}  // namespace dslab
