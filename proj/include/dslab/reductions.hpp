// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dslab/instance.hpp"
#include "dslab/oracles.hpp"
#include "dslab/rational.hpp"

namespace dslab {

// Audit trail of one reduction application: the rule, its inputs, every
// derived constant, whether the rule's largeness/parameter threshold holds,
// and the canonical vertex layout of the output.  The record is a pure
// function of the inputs, so identical runs serialize identically.
struct ReductionRecord {
  std::string rule;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> derived;
  bool guarantee_threshold_met = true;
  std::string layout;
};

std::string serialize_record(const ReductionRecord& record);

struct ReductionOutput {
  GapInstance instance;
  ReductionRecord record;
};

// Re-tags a GapDkS(lambda_src) instance as GapDkS(lambda, gamma); the
// carrier and (k, ell) are untouched.  The source parameter must dominate
// the required 2 * lambda * gamma^2 for the guarantee flag to hold.
ReductionOutput relax_gapdks(const GapInstance& inst, const Rat& lambda, const Rat& gamma);

// PolyGapDkS(0.5 * delta / t, t) -> PolyGapDkS(delta, t, gamma): the graph
// is unchanged and k shrinks to floor((k / gamma)^(1/t)).  The guarantee
// flag records the largeness premise k >= 2 * gamma * (2^(t+1) * gamma)^(2t/delta).
ReductionOutput shrink_polydks(const GapInstance& inst, const Rat& delta, int t, const Rat& gamma);

// GapDkS(lambda, gamma) -> 2-uniform StrongGapDkSH: universe = vertices,
// one 2-subset per edge; all numeric parameters carry over.
ReductionOutput dks_to_dksh(const GapInstance& inst);

// PolyGapDkS(1/3, t, gamma) -> t-uniform StrongGapDkSH(lambda, gamma):
// universe = (t-1)-cliques, one subset (the t facets) per t-clique,
// k' = C(k, t-1), ell' = ceil(k^(t - 1/3)).  Clique enumeration is budgeted.
ReductionOutput polydks_to_dksh(const GapInstance& inst, const Rat& lambda,
                                std::uint64_t budget = default_budget());

// Replacement constants for dksh_to_dalks; any override marks the output
// instance non-faithful.
struct ScaleOverride {
  std::optional<std::int64_t> c1;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> x;

  bool any() const { return c1 || c2 || x; }
};

// t-uniform StrongGapDkSH -> GapDALkS(2 - 1/t - eps) as a GadgetShape:
// clique K_x disjoint from the incidence graph with c1 element copies and
// c2 subset copies, where c1 = ell, c2 = ceil(10^4 t^3 k / eps^2),
// x = ceil(sqrt(2 (t-1) ell c1 c2)), k' = x + c1 k + c2 ell and
// alpha = (2t - 1) c1 (1 - eps / (10 t)).
ReductionOutput dksh_to_dalks(const GapInstance& inst, const Rat& eps,
                              const ScaleOverride& scale = {});

// k-Clique -> exact DALkS: K_k disjoint from one copy of G's incidence
// graph; k' = 2k + C(k,2), alpha = 3 C(k,2) / k'.  The soundness guarantee
// needs k >= 10 (flagged, not refused).
ReductionOutput clique_to_dalks(const Graph& g, int k);

// Four-stage hardness pipelines with exact parameter bookkeeping.
struct PipelineStage {
  std::string problem;
  std::vector<std::pair<std::string, std::string>> params;
};

struct PipelinePlan {
  int theorem = 0;
  Rat eps;
  std::vector<PipelineStage> stages;
  std::vector<std::pair<std::string, bool>> checks;  // stage-compatibility results

  bool all_ok() const {
    for (const auto& [name, ok] : checks) {
      if (!ok) return false;
    }
    return true;
  }
};

PipelinePlan plan_pipeline(int theorem, const Rat& eps);
std::string render_plan(const PipelinePlan& plan);

}  // namespace dslab
