// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/selftest.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dslab/gadget.hpp"
#include "dslab/generators.hpp"
#include "dslab/graph.hpp"
#include "dslab/hypergraph.hpp"
#include "dslab/instance.hpp"
#include "dslab/io_util.hpp"
#include "dslab/rational.hpp"
#include "dslab/reductions.hpp"
#include "dslab/solvers.hpp"
#include "dslab/witness.hpp"
#include "dslab/witnesses.hpp"

namespace dslab {
namespace {

struct Ctx {
  std::uint64_t budget;
  SelfTestResult res;

  Ctx(std::string name, std::uint64_t b) : budget(b) { res.name = std::move(name); }

  void expect(bool cond, const std::string& what) {
    ++res.checks;
    if (!cond) res.failures.push_back(what);
  }

  void audit(bool match, const std::string& what) {
    ++res.checks;
    ++res.audited_artifacts;
    if (!match) {
      ++res.audit_failures;
      res.failures.push_back(what);
    }
  }
};

void audit_graph(Ctx& c, const Graph& g) {
  const std::string s1 = serialize_graph(g);
  c.audit(serialize_graph(parse_graph(s1)) == s1, "graph round trip changed bytes");
}

void audit_hypergraph(Ctx& c, const UniformHypergraph& h) {
  const std::string s1 = serialize_hypergraph(h);
  c.audit(serialize_hypergraph(parse_hypergraph(s1)) == s1, "hypergraph round trip changed bytes");
}

void audit_gadget(Ctx& c, const GadgetShape& s) {
  const std::string s1 = serialize_gadget(s);
  c.audit(serialize_gadget(parse_gadget(s1)) == s1, "gadget round trip changed bytes");
}

void audit_witness(Ctx& c, const Witness& w) {
  const std::string s1 = serialize_witness(w);
  c.audit(serialize_witness(parse_witness(s1)) == s1, "witness round trip changed bytes");
}

// Manifest bytes and carrier bytes both survive serialize -> parse ->
// serialize.  parse_manifest leaves a placeholder carrier, so the original
// carrier is re-attached (after checking its declared type) before the
// second serialization.
void audit_instance(Ctx& c, const GapInstance& inst) {
  const std::string m1 = serialize_manifest(inst, "carrier.dat");
  std::string path;
  GapInstance parsed = parse_manifest(m1, path);
  const bool type_ok = parsed.carrier.index() == inst.carrier.index() && path == "carrier.dat";
  parsed.carrier = inst.carrier;
  c.audit(type_ok && serialize_manifest(parsed, path) == m1,
          "instance manifest round trip changed bytes");
  if (const auto* g = std::get_if<Graph>(&inst.carrier)) {
    audit_graph(c, *g);
  } else if (const auto* h = std::get_if<UniformHypergraph>(&inst.carrier)) {
    audit_hypergraph(c, *h);
  } else {
    audit_gadget(c, carrier_gadget(inst));
  }
}

std::vector<int> all_vertices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::int64_t> iota64(std::int64_t n) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), std::int64_t{0});
  return v;
}

std::string find_param(const PipelineStage& stage, const std::string& key) {
  for (const auto& [k, v] : stage.params) {
    if (k == key) return v;
  }
  return "";
}

std::int64_t to_int_or_throw(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::invalid_argument("value does not fit 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

std::filesystem::path scratch_dir() {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("dslab-selftest-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(dir);
  return dir;
}

// --- criterion 1: the exact solvers agree with brute force -----------------

void crit_oracle_equivalence(Ctx& c) {
  const Rat ps[] = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  const std::vector<int> no_anchors;
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < 210; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);  // 4..12
    const Graph g = gen_gnp(n, ps[seed % 3], seed);
    audit_graph(c, g);
    ++graphs;
    const std::string tag = " (seed " + std::to_string(seed) + ", n=" + std::to_string(n) + ")";

    const SolveResult flow = densest_subgraph_exact(g);
    const SolveResult anchored = anchored_densest(g, no_anchors);
    const DensityOptimum brute = brute_den_atleast(g, 1, c.budget);
    c.expect(flow.value == brute.value, "flow optimum diverges from brute force" + tag);
    c.expect(anchored.value == brute.value,
             "anchored optimum with empty anchors diverges from brute force" + tag);
    audit_witness(c, flow.witness);
    audit_witness(c, brute.witness);

    for (int k = 1; k <= std::min(3, n); ++k) {
      const SolveResult xp = dalks_exact_xp(g, k, c.budget);
      const DensityOptimum ref = brute_den_atleast(g, k, c.budget);
      c.expect(xp.value == ref.value,
               "subset-search optimum diverges from brute force at k=" + std::to_string(k) + tag);
    }
  }
  c.expect(graphs >= 200, "fewer than 200 graphs were exercised");
}

// --- criterion 2: approximation ratio envelopes -----------------------------

void crit_ratio_envelopes(Ctx& c) {
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);  // 6..14
    Graph g;
    switch (seed % 3) {
      case 0: g = gen_gnp(n, Rat(3, 10), seed); break;
      case 1: g = gen_planted_clique(n, Rat(2, 5), std::min(n, 5), seed); break;
      default: g = gen_planted_dense(n, Rat(1, 2), std::min(n, 6), seed); break;
    }
    audit_graph(c, g);
    ++instances;
    for (int k = 1; k <= n; ++k) {
      const std::string tag = " (seed " + std::to_string(seed) + ", k=" + std::to_string(k) + ")";
      const Rat opt = brute_den_atleast(g, k, c.budget).value;
      const SolveResult two = dalks_2approx(g, k);
      const SolveResult three = dalks_3approx_peel(g, k);
      c.expect(two.witness.size() >= k, "extraction witness smaller than k" + tag);
      c.expect(three.witness.size() >= k, "peeling witness smaller than k" + tag);
      if (opt.is_zero()) {
        c.expect(two.value.is_zero() && three.value.is_zero(),
                 "edgeless optimum but nonzero approximation" + tag);
        continue;
      }
      c.expect(!two.value.is_zero() && !three.value.is_zero(),
               "approximation returned zero density on a non-edgeless optimum" + tag);
      if (two.value.is_zero() || three.value.is_zero()) continue;
      const Rat r2 = opt / two.value;
      const Rat r3 = opt / three.value;
      c.expect(r2 >= Rat(1) && r2 <= Rat(2), "extraction ratio outside [1, 2]" + tag);
      c.expect(r3 >= Rat(1) && r3 <= Rat(3), "peeling ratio outside [1, 3]" + tag);
    }
  }
  c.expect(instances >= 100, "fewer than 100 graphs were exercised");
}

// --- criterion 3: clique <-> gadget density biconditional -------------------

void crit_clique_biconditional(Ctx& c) {
  const Rat alpha(27, 13);
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 10 + static_cast<int>(seed % 5);  // 10..14
    const bool planted = (seed % 2 == 0);
    const Graph g = planted ? gen_planted_clique(n, Rat(1, 2), 10, seed)
                            : gen_gnp(n, Rat(9, 10), seed);
    audit_graph(c, g);
    ++tested;
    const std::string tag = " (seed " + std::to_string(seed) + ", n=" + std::to_string(n) + ")";

    const bool has_clique = count_cliques_in(g, all_vertices(n), 10, c.budget) > 0;
    if (planted) c.expect(has_clique, "planted clique is missing" + tag);

    // The expansion has k + n + m vertices; when that is below the query
    // size 65 the density question has no feasible subgraph, so the
    // threshold side of the biconditional is vacuously unmet.  Such graphs
    // also lack the 45 edges a 10-clique needs, so both sides are false.
    const std::int64_t expansion_vertices =
        10 + g.n + static_cast<std::int64_t>(g.edges.size());
    if (expansion_vertices < 65) {
      c.expect(!has_clique, "a graph too sparse for the query held a clique" + tag);
      bool refused = false;
      try {
        clique_to_dalks(g, 10);
      } catch (const std::invalid_argument&) {
        refused = true;
      }
      c.expect(refused, "the reduction should refuse an expansion smaller than the query" + tag);
      continue;
    }

    const ReductionOutput out = clique_to_dalks(g, 10);
    audit_instance(c, out.instance);
    c.expect(out.instance.k == 65, "expansion size threshold is not 65" + tag);
    c.expect(out.instance.alpha && *out.instance.alpha == alpha,
             "density threshold is not 27/13" + tag);
    c.expect(out.record.guarantee_threshold_met, "k=10 guarantee flag should hold" + tag);

    const Rat den = dalks_exact_structured(carrier_gadget(out.instance), out.instance.k, c.budget);
    c.expect((den >= alpha) == has_clique,
             "clique existence and density threshold disagree" + tag);

    if (planted) {
      GapInstance source;
      source.kind = ProblemKind::GapDks;
      source.carrier = g;
      source.k = 10;
      source.ell = binomial(BigInt(10), 2);
      source.params.lambda = Rat(1);
      validate_instance(source);
      audit_instance(c, source);

      const Witness w = make_witness(iota64(10));
      const Witness mapped =
          map_witness(ReductionRule::CliqueToDalks, source, w, out.instance, c.budget);
      audit_witness(c, mapped);
      c.expect(mapped.size() == 65, "mapped witness size is not 65" + tag);
      const Verdict v = check_witness(out.instance, mapped, c.budget);
      c.expect(v.valid, "mapped witness rejected" + tag);
      c.expect(v.objective == alpha, "mapped witness density is not exactly 27/13" + tag);
      const auto extracted = extract_clique(out.instance, mapped);
      c.expect(extracted.has_value() && *extracted == all_vertices(10),
               "clique extraction failed to roundtrip" + tag);
    }
  }
  c.expect(tested >= 50, "fewer than 50 graphs were exercised");

  // k=3 counterexample: the 4-cycle has no triangle, yet the threshold is
  // met, demonstrating why the guarantee needs k >= 10.
  const Graph c4 = cycle_graph(4);
  const ReductionOutput small = clique_to_dalks(c4, 3);
  audit_instance(c, small.instance);
  c.expect(!small.record.guarantee_threshold_met, "k=3 guarantee flag should not hold");
  c.expect(small.instance.k == 9, "4-cycle expansion threshold is not 9");
  c.expect(small.instance.alpha && *small.instance.alpha == Rat(1),
           "4-cycle density threshold is not 1");
  const Rat den4 = dalks_exact_structured(carrier_gadget(small.instance), 9, c.budget);
  c.expect(den4 == Rat(1), "4-cycle gadget optimum is not exactly 1");
  c.expect(count_cliques_in(c4, all_vertices(4), 3, c.budget) == 0,
           "the 4-cycle unexpectedly contains a triangle");
  const Witness all11 = make_witness(iota64(11));
  const Verdict v4 = check_witness(small.instance, all11, c.budget);
  c.expect(v4.valid && v4.objective == Rat(1), "full 11-vertex witness should meet threshold 1");
  c.expect(!extract_clique(small.instance, all11).has_value(),
           "extraction should fail on the triangle-free counterexample");
}

// --- criterion 4: gadget completeness arithmetic ----------------------------

void crit_gadget_completeness(Ctx& c) {
  {  // 2-uniform, eps = 1, k = 2, ell = 1: every derived constant is frozen.
    GapInstance src;
    src.kind = ProblemKind::StrongGapDksh;
    src.carrier = make_hypergraph(2, 2, {{0, 1}});
    src.k = 2;
    src.ell = BigInt(1);
    src.params.lambda = Rat(80);
    src.params.gamma = Rat(320000000);
    src.params.t = 2;
    validate_instance(src);
    audit_instance(c, src);

    const ReductionOutput out = dksh_to_dalks(src, Rat(1));
    audit_instance(c, out.instance);
    c.expect(out.record.guarantee_threshold_met,
             "2-uniform source parameters should meet the rule requirements");
    c.expect(out.instance.faithful, "unscaled output should be faithful");
    c.expect(out.instance.k == 160568, "2-uniform size threshold is not 160568");
    c.expect(out.instance.alpha && *out.instance.alpha == Rat(57, 20),
             "2-uniform density threshold is not 57/20");
    const GadgetShape& shape = carrier_gadget(out.instance);
    c.expect(shape.clique_size == 566, "2-uniform clique block is not 566");
    c.expect(!shape.subsets.empty() && shape.subsets[0].multiplicity == 160000,
             "2-uniform subset multiplicity is not 160000");

    const Witness w = make_witness({0, 1});
    const Witness mapped = map_witness(ReductionRule::DkshToDalks, src, w, out.instance, c.budget);
    audit_witness(c, mapped);
    c.expect(mapped.size() == 160568, "mapped witness does not cover the full expansion");
    // check_witness cross-validates the analytic density against the
    // materialized expansion (it fits the budget here).
    const Verdict v = check_witness(out.instance, mapped, c.budget);
    c.expect(v.valid, "2-uniform mapped witness rejected");
    c.expect(v.objective == Rat(BigInt(479895), BigInt(160568)),
             "2-uniform witness density is not 479895/160568");
    c.expect(mapped.claimed_value && *mapped.claimed_value == v.objective,
             "claimed density disagrees with the checker");

    const Graph expanded = expand_gadget(shape, c.budget);
    c.expect(expanded.n == 160568, "materialized expansion vertex count mismatch");
    c.expect(expanded.m() == 479895, "materialized expansion edge count is not 479895");
    c.expect(density(expanded, all_vertices(expanded.n)) == v.objective,
             "materialized density disagrees with the analytic value");
  }

  {  // 3-uniform, eps = 1/2, k = 3, ell = 1: analytic value plus a streamed
    // edge count; the expansion is never materialized.
    GapInstance src;
    src.kind = ProblemKind::StrongGapDksh;
    src.carrier = make_hypergraph(3, 3, {{0, 1, 2}});
    src.k = 3;
    src.ell = BigInt(1);
    src.params.lambda = Rat(360);
    src.params.gamma = Rat(BigInt(38880000000LL));
    src.params.t = 3;
    validate_instance(src);
    audit_instance(c, src);

    const ReductionOutput out = dksh_to_dalks(src, Rat(1, 2));
    audit_instance(c, out.instance);
    c.expect(out.record.guarantee_threshold_met,
             "3-uniform source parameters should meet the rule requirements");
    c.expect(out.instance.k == 3243603, "3-uniform size threshold is not 3243603");
    c.expect(out.instance.alpha && *out.instance.alpha == Rat(59, 12),
             "3-uniform density threshold is not 59/12");
    const GadgetShape& shape = carrier_gadget(out.instance);
    c.expect(shape.clique_size == 3600, "3-uniform clique block is not 3600");
    c.expect(!shape.subsets.empty() && shape.subsets[0].multiplicity == 3240000,
             "3-uniform subset multiplicity is not 3240000");

    const Witness w = make_witness({0, 1, 2});
    const Witness mapped = map_witness(ReductionRule::DkshToDalks, src, w, out.instance, c.budget);
    c.expect(mapped.size() == 3243603, "3-uniform mapped witness size mismatch");
    const Verdict v = check_witness(out.instance, mapped, c.budget);
    c.expect(v.valid, "3-uniform mapped witness rejected");
    c.expect(v.objective == Rat(BigInt(16198200), BigInt(3243603)),
             "3-uniform witness density is not 16198200/3243603");
    c.expect(v.objective >= Rat(59, 12), "3-uniform witness falls below 59/12");

    std::int64_t streamed = 0;
    gadget_for_each_edge(shape, [&](std::int64_t, std::int64_t) { ++streamed; });
    c.expect(BigInt(streamed) == gadget_edge_total(shape),
             "streamed edge count disagrees with the closed-form total");
    c.expect(Rat(BigInt(streamed), BigInt(out.instance.k)) == v.objective,
             "streamed density disagrees with the analytic value");
  }
}

// --- criterion 5: facet-universe completeness at scale ----------------------

void crit_facet_completeness(Ctx& c) {
  {  // t = 2, k = 11, planted K_11: the full reduction plus witness map.
    const Graph g = gen_planted_clique(14, Rat(1, 3), 11, 7);
    audit_graph(c, g);
    GapInstance src;
    src.kind = ProblemKind::PolyGapDksGamma;
    src.carrier = g;
    src.k = 11;
    src.ell = polydks_threshold(11, 2, Rat(1, 3));
    src.params.delta = Rat(1, 3);
    src.params.t = 2;
    src.params.gamma = Rat(1);
    validate_instance(src);
    audit_instance(c, src);

    c.expect(*src.ell == 55, "threshold ceil(11^(5/3)) is not 55");
    c.expect(big_pow(BigInt(54), 3) < big_pow(BigInt(11), 5) &&
                 big_pow(BigInt(11), 5) <= big_pow(BigInt(55), 3),
             "integer-root inequality for 11^(5/3) fails");

    const ReductionOutput out = polydks_to_dksh(src, Rat(1), c.budget);
    audit_instance(c, out.instance);
    c.expect(out.record.guarantee_threshold_met, "largeness premise 11 >= (1*1*2)^3 should hold");
    c.expect(out.instance.k == 11, "universe size threshold is not C(11,1) = 11");
    c.expect(*out.instance.ell == 55, "subset threshold is not 55");

    const Witness w = make_witness(iota64(11));
    const Witness mapped = map_witness(ReductionRule::PolyToDksh, src, w, out.instance, c.budget);
    audit_witness(c, mapped);
    c.expect(mapped.size() == 11, "mapped witness should cover the 11 planted facets");
    const Verdict v = check_witness(out.instance, mapped, c.budget);
    c.expect(v.valid, "mapped facet witness rejected");
    c.expect(v.objective == Rat(55), "contained-subset count is not exactly 55");
  }

  {  // Stress: complete graph on 230 vertices, t = 3; both sides of the
    // completeness inequality in exact integers, then the real reduction.
    const BigInt lhs = binomial(BigInt(230), 3);
    const BigInt rhs = ceil_rational_power(BigInt(230), 8, 3);
    c.expect(lhs == 2001460, "C(230,3) is not 2001460");
    c.expect(big_pow(rhs, 3) >= big_pow(BigInt(230), 8) &&
                 big_pow(rhs - 1, 3) < big_pow(BigInt(230), 8),
             "integer-root inequality for 230^(8/3) fails");
    c.expect(lhs >= rhs, "C(230,3) falls below ceil(230^(8/3))");

    const Graph big = complete_graph(230);
    GapInstance src;
    src.kind = ProblemKind::PolyGapDksGamma;
    src.carrier = big;
    src.k = 230;
    src.ell = polydks_threshold(230, 3, Rat(1, 3));
    src.params.delta = Rat(1, 3);
    src.params.t = 3;
    src.params.gamma = Rat(1);
    validate_instance(src);
    c.expect(*src.ell == rhs, "stress threshold disagrees with the integer root");

    const ReductionOutput out = polydks_to_dksh(src, Rat(1), c.budget);
    c.expect(out.instance.k == 26335, "stress universe threshold is not C(230,2) = 26335");
    c.expect(*out.instance.ell == rhs, "stress subset threshold mismatch");
    const UniformHypergraph& h = carrier_hypergraph(out.instance);
    c.expect(h.n == 26335 && h.size() == 2001460, "stress hypergraph shape mismatch");
    audit_instance(c, out.instance);

    const Witness w = make_witness(iota64(230));
    const Witness mapped = map_witness(ReductionRule::PolyToDksh, src, w, out.instance, c.budget);
    c.expect(mapped.size() == 26335, "stress mapped witness should cover the whole universe");
    const Verdict v = check_witness(out.instance, mapped, c.budget);
    c.expect(v.valid, "stress mapped witness rejected");
    c.expect(v.objective == Rat(lhs), "stress contained-subset count is not C(230,3)");
  }
}

// --- criterion 6: peeling retention bound -----------------------------------

void crit_peeling_bound(Ctx& c) {
  int trials = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Graph g = gen_gnp(12, Rat(2, 5), seed);
    DetRng rng(seed * 2654435761ULL + 17);
    const int r = 2 + static_cast<int>(rng.next_below(11));  // 2..12
    std::vector<int> perm = all_vertices(12);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.next_below(12 - i));
      std::swap(perm[i], perm[j]);
    }
    std::vector<int> s(perm.begin(), perm.begin() + r);
    const int k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(r) + 1));  // 0..r

    const std::vector<int> kept = shrink_witness_peel(g, s, k);
    ++trials;
    std::sort(s.begin(), s.end());
    const BigInt lhs = BigInt(edges_within(g, kept)) * BigInt(r) * BigInt(r - 1);
    const BigInt rhs = BigInt(edges_within(g, s)) * BigInt(k) * BigInt(k - 1);
    c.expect(static_cast<int>(kept.size()) == k,
             "peeled set has the wrong size (seed " + std::to_string(seed) + ")");
    c.expect(lhs >= rhs, "edge-retention bound violated (seed " + std::to_string(seed) + ")");
  }
  c.expect(trials >= 1000, "fewer than 1000 trials were exercised");

  // Frozen endpoints: complete graphs meet the bound with equality; the
  // 5-cycle peels endpoint-first down to 2 edges.
  const std::vector<int> k4 = shrink_witness_peel(complete_graph(4), all_vertices(4), 2);
  c.expect(edges_within(complete_graph(4), k4) == 1, "K_4 to k=2 should keep exactly 1 edge");
  const std::vector<int> c5 = shrink_witness_peel(cycle_graph(5), all_vertices(5), 3);
  c.expect(edges_within(cycle_graph(5), c5) == 2, "C_5 to k=3 should keep 2 edges");
}

// --- criterion 7: pipeline parameter bookkeeping -----------------------------

void crit_pipeline_bookkeeping(Ctx& c) {
  const PipelinePlan p1 = plan_pipeline(1, Rat(1));
  c.expect(p1.stages.size() == 4, "first pipeline should have four stages");
  c.expect(p1.stages[0].problem == "gapdks" && p1.stages[3].problem == "gapdalks",
           "first pipeline endpoints are wrong");
  c.expect(find_param(p1.stages[0], "lambda") == Rat(big_pow(BigInt(20), 16)).str(),
           "source gap factor is not 20^16");
  c.expect(find_param(p1.stages[1], "lambda") == "80", "relaxed gap factor is not 80");
  c.expect(find_param(p1.stages[1], "gamma") == Rat(big_pow(BigInt(20), 7)).str(),
           "relaxed size slack is not 20^7");
  c.expect(find_param(p1.stages[3], "lambda") == "1/2", "final gap is not 1/2");
  c.expect(p1.all_ok(), "first pipeline compatibility checks failed");
  c.expect(render_plan(p1) == render_plan(plan_pipeline(1, Rat(1))),
           "plan rendering is not deterministic");

  for (const Rat& eps : {Rat(1, 2), Rat(1, 4), Rat(2, 3)}) {
    c.expect(plan_pipeline(1, eps).all_ok(),
             "first pipeline checks failed at eps " + eps.str());
  }

  for (const Rat& eps : {Rat(1), Rat(1, 2), Rat(1, 3), Rat(2, 3)}) {
    const PipelinePlan p3 = plan_pipeline(3, eps);
    const BigInt t_expect = (Rat(2) / eps).ceil();
    const Rat t_rat(t_expect);
    const Rat gamma_expect = Rat(big_pow(BigInt(20), 7)) * rat_pow(t_rat, 5) / rat_pow(eps, 4);
    c.expect(find_param(p3.stages[2], "t") == Rat(t_expect).str(),
             "uniformity is not ceil(2/eps) at eps " + eps.str());
    c.expect(find_param(p3.stages[2], "gamma") == gamma_expect.str(),
             "size slack is not 20^7 t^5 / eps^4 at eps " + eps.str());
    c.expect(find_param(p3.stages[3], "lambda") == (Rat(2) - eps).str(),
             "final gap is not 2 - eps at eps " + eps.str());
    c.expect(p3.all_ok(), "second pipeline checks failed at eps " + eps.str());
  }
}

// --- criterion 8: scaled soundness density sweep ----------------------------

struct ScaledCase {
  std::string label;
  UniformHypergraph h;
  std::int64_t k;
  int t;
  ScaleOverride scale;
  Rat lambda;
};

void crit_scaled_density_sweep(Ctx& c) {
  std::vector<ScaledCase> cases;
  cases.push_back({"pairs c2=1", make_hypergraph(6, 2, {{0, 1}, {2, 3}, {4, 5}}), 4, 2,
                   ScaleOverride{1, 1, 2}, Rat(2)});
  // The query size x + c1*k + c2*ell may not exceed the expansion size
  // x + c1*n + c2*s, so doubling c2 (ell > s here) needs c1 doubled too.
  cases.push_back({"pairs c2=2", make_hypergraph(6, 2, {{0, 1}, {2, 3}, {4, 5}}), 4, 2,
                   ScaleOverride{2, 2, 2}, Rat(2)});
  // A 6-subset can touch all three triples in two elements each, so the
  // soundness bound ell/lambda must sit above 3: use lambda = 3/2.
  cases.push_back({"triples c2=1", make_hypergraph(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}), 6, 3,
                   ScaleOverride{1, 1, 2}, Rat(3, 2)});

  const Rat eps(1);
  for (const ScaledCase& sc : cases) {
    GapInstance src;
    src.kind = ProblemKind::StrongGapDksh;
    src.carrier = sc.h;
    src.k = sc.k;
    src.ell = BigInt(5);
    src.params.lambda = sc.lambda;
    src.params.gamma = Rat(1);
    src.params.t = sc.t;
    validate_instance(src);
    audit_instance(c, src);
    c.expect(brute_check_soundness(src, c.budget),
             sc.label + ": source must satisfy its promised soundness");

    const ReductionOutput out = dksh_to_dalks(src, eps, sc.scale);
    audit_instance(c, out.instance);
    c.expect(!out.instance.faithful, sc.label + ": scaled output must be non-faithful");
    const GadgetShape& shape = carrier_gadget(out.instance);
    const BigInt vt_big = gadget_vertex_total(shape);
    c.expect(vt_big <= 20, sc.label + ": expansion exceeds 20 vertices");
    const int vt = static_cast<int>(vt_big);
    const Graph hg = expand_gadget(shape, c.budget);

    const std::int64_t kp = out.instance.k;
    const std::int64_t c1 = shape.elements.empty() ? 0 : shape.elements[0].multiplicity;
    const Rat bound = (Rat(1) + Rat(1, 10) * eps) * Rat(c1);
    const std::int64_t low = to_int_or_throw(Rat(BigInt(kp), BigInt(2)).ceil());
    const std::int64_t high =
        std::min<std::int64_t>(vt, to_int_or_throw((Rat(10) * Rat(sc.t) * Rat(kp) / eps).floor()));

    int in_range = 0;
    int violations = 0;
    const std::uint32_t total = std::uint32_t{1} << vt;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      const int size = std::popcount(mask);
      if (size < low || size > high) continue;
      ++in_range;
      std::int64_t edges = 0;
      for (const auto& [u, v] : hg.edges) {
        if (((mask >> u) & 1u) != 0 && ((mask >> v) & 1u) != 0) ++edges;
      }
      if (!(Rat(edges) / Rat(size) < bound)) ++violations;
    }
    c.expect(in_range > 0, sc.label + ": the size window is vacuous");
    c.expect(violations == 0,
             sc.label + ": " + std::to_string(violations) + " sets reach the density bound");
  }
}

// --- extra reduction properties for the reductions suite --------------------

void extra_reduction_properties(Ctx& c) {
  // Chain: re-tag, edges-to-subsets, then the gadget rule with an x-heavy
  // scale override chosen so the mapped witness stays above the threshold.
  const Graph g = gen_planted_clique(10, Rat(1, 3), 6, 21);
  audit_graph(c, g);
  GapInstance src;
  src.kind = ProblemKind::GapDks;
  src.carrier = g;
  src.k = 6;
  src.ell = BigInt(15);
  src.params.lambda = Rat(8);
  validate_instance(src);
  audit_instance(c, src);

  const ReductionOutput relaxed = relax_gapdks(src, Rat(2), Rat(1));
  c.expect(relaxed.record.guarantee_threshold_met, "8 >= 2*2*1^2 should hold");
  c.expect(serialize_record(relaxed.record) ==
               serialize_record(relax_gapdks(src, Rat(2), Rat(1)).record),
           "re-tag record is not deterministic");
  audit_instance(c, relaxed.instance);

  const Witness w = make_witness(iota64(6));
  const Witness w1 = map_witness(ReductionRule::Relax, src, w, relaxed.instance, c.budget);
  c.expect(check_witness(relaxed.instance, w1, c.budget).valid, "re-tagged witness rejected");

  const ReductionOutput dksh = dks_to_dksh(relaxed.instance);
  audit_instance(c, dksh.instance);
  const Witness w2 =
      map_witness(ReductionRule::DksToDksh, relaxed.instance, w1, dksh.instance, c.budget);
  c.expect(check_witness(dksh.instance, w2, c.budget).valid, "edge-subset witness rejected");

  const ReductionOutput dalks = dksh_to_dalks(dksh.instance, Rat(1), ScaleOverride{1, 1, 14});
  audit_instance(c, dalks.instance);
  c.expect(!dalks.instance.faithful, "scaled gadget output must be non-faithful");
  const Witness w3 =
      map_witness(ReductionRule::DkshToDalks, dksh.instance, w2, dalks.instance, c.budget);
  audit_witness(c, w3);
  const Verdict v3 = check_witness(dalks.instance, w3, c.budget);
  c.expect(v3.valid, "scaled gadget witness rejected");
  c.expect(v3.objective == Rat(121, 35), "scaled gadget witness density is not 121/35");

  // Shrink rule: exact k' and threshold on a complete source, witness map
  // via the seeded sampler.
  const Graph k32 = complete_graph(32);
  GapInstance poly;
  poly.kind = ProblemKind::PolyGapDks;
  poly.carrier = k32;
  poly.k = 32;
  poly.ell = polydks_threshold(32, 2, Rat(1, 4));
  poly.params.delta = Rat(1, 4);
  poly.params.t = 2;
  validate_instance(poly);
  audit_instance(c, poly);
  c.expect(*poly.ell == 431, "ceil(32^(7/4)) is not 431");

  const ReductionOutput shrunk = shrink_polydks(poly, Rat(1), 2, Rat(1));
  audit_instance(c, shrunk.instance);
  c.expect(shrunk.instance.k == 5, "shrunken size is not floor(32^(1/2)) = 5");
  c.expect(!shrunk.record.guarantee_threshold_met,
           "largeness premise should fail below 8192 vertices");
  c.expect(*shrunk.instance.ell == 5, "shrunken threshold is not ceil(5^1) = 5");
  const Witness wall = make_witness(iota64(32));
  const Witness w5 = map_witness(ReductionRule::Shrink, poly, wall, shrunk.instance, c.budget);
  audit_witness(c, w5);
  c.expect(w5.size() == 5, "sampled witness size is not 5");
  c.expect(check_witness(shrunk.instance, w5, c.budget).valid, "sampled witness rejected");

  // Sampling quality: the best of 64 draws beats the expectation bound in
  // at least 95 of 100 seeded experiments.
  const Graph gp = gen_gnp(20, Rat(1, 2), 99);
  const std::vector<int> s20 = all_vertices(20);
  const std::int64_t m_s = edges_within(gp, s20);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::vector<int> pick = shrink_clique_witness_sample(gp, s20, 10, 2, seed, 64, c.budget);
    if (Rat(edges_within(gp, pick)) >= Rat(BigInt(m_s) * 10 * 9, BigInt(20) * 19)) ++hits;
  }
  c.expect(hits >= 95, "sampled subsets beat the expectation bound only " + std::to_string(hits) +
                           "/100 times");

  // Filesystem round trip: manifest plus carrier, byte-exact both ways.
  const std::filesystem::path dir = scratch_dir();
  const std::string manifest_path = (dir / "instance.json").string();
  write_instance(dalks.instance, manifest_path, "carrier.txt");
  const GapInstance loaded = read_instance(manifest_path);
  c.audit(serialize_manifest(loaded, "carrier.txt") ==
                  serialize_manifest(dalks.instance, "carrier.txt") &&
              serialize_carrier(loaded) == serialize_carrier(dalks.instance),
          "file round trip changed instance bytes");
  std::filesystem::remove_all(dir);
}

void run_criterion_into(int id, Ctx& c) {
  switch (id) {
    case 1: crit_oracle_equivalence(c); break;
    case 2: crit_ratio_envelopes(c); break;
    case 3: crit_clique_biconditional(c); break;
    case 4: crit_gadget_completeness(c); break;
    case 5: crit_facet_completeness(c); break;
    case 6: crit_peeling_bound(c); break;
    case 7: crit_pipeline_bookkeeping(c); break;
    case 8: crit_scaled_density_sweep(c); break;
    default: throw std::invalid_argument("criterion id must lie in [1, 9]");
  }
}

}  // namespace

std::string criterion_label(int id) {
  switch (id) {
    case 1: return "oracle equivalence";
    case 2: return "approximation ratio envelopes";
    case 3: return "clique-to-density biconditional";
    case 4: return "gadget completeness arithmetic";
    case 5: return "facet-universe completeness at scale";
    case 6: return "peeling retention bound";
    case 7: return "pipeline parameter bookkeeping";
    case 8: return "scaled soundness density sweep";
    case 9: return "serialization round-trip determinism";
  }
  throw std::invalid_argument("criterion id must lie in [1, 9]");
}

SelfTestResult summarize_roundtrips(const std::vector<SelfTestResult>& prior) {
  SelfTestResult r;
  r.name = criterion_label(9);
  for (const SelfTestResult& p : prior) {
    r.audited_artifacts += p.audited_artifacts;
    r.audit_failures += p.audit_failures;
  }
  ++r.checks;
  if (r.audited_artifacts == 0) r.failures.push_back("no artifacts were audited");
  ++r.checks;
  if (r.audit_failures > 0) {
    r.failures.push_back(std::to_string(r.audit_failures) + " round-trip audits changed bytes");
  }
  return r;
}

SelfTestResult run_criterion(int id, std::uint64_t budget) {
  if (id == 9) {
    std::vector<SelfTestResult> prior;
    for (int i = 1; i <= 8; ++i) prior.push_back(run_criterion(i, budget));
    return summarize_roundtrips(prior);
  }
  Ctx c(criterion_label(id), budget);
  run_criterion_into(id, c);
  return c.res;
}

std::vector<std::string> suite_names() {
  return {"oracles", "reductions", "clique-iff", "lemma8", "peeling"};
}

SelfTestResult run_suite(const std::string& name, std::uint64_t budget) {
  Ctx c(name, budget);
  if (name == "oracles") {
    crit_oracle_equivalence(c);
    crit_ratio_envelopes(c);
  } else if (name == "reductions") {
    crit_facet_completeness(c);
    crit_pipeline_bookkeeping(c);
    extra_reduction_properties(c);
  } else if (name == "clique-iff") {
    crit_clique_biconditional(c);
  } else if (name == "lemma8") {
    crit_gadget_completeness(c);
    crit_scaled_density_sweep(c);
  } else if (name == "peeling") {
    crit_peeling_bound(c);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return c.res;
}

}  // namespace dslab
