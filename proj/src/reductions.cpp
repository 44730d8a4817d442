// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/reductions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dslab {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::int64_t to_int64(const BigInt& v, const std::string& what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw budget_exceeded(what + " does not fit 64-bit arithmetic");
  }
  return v.convert_to<std::int64_t>();
}

void push(std::vector<std::pair<std::string, std::string>>& kv, const std::string& key,
          const std::string& value) {
  kv.emplace_back(key, value);
}

}  // namespace

std::string serialize_record(const ReductionRecord& record) {
  OrderedJson doc;
  doc["rule"] = record.rule;
  OrderedJson inputs = OrderedJson::object();
  for (const auto& [key, value] : record.inputs) inputs[key] = value;
  doc["inputs"] = std::move(inputs);
  OrderedJson derived = OrderedJson::object();
  for (const auto& [key, value] : record.derived) derived[key] = value;
  doc["derived"] = std::move(derived);
  doc["guarantee_threshold_met"] = record.guarantee_threshold_met;
  doc["layout"] = record.layout;
  return doc.dump(2) + "\n";
}

ReductionOutput relax_gapdks(const GapInstance& inst, const Rat& lambda, const Rat& gamma) {
  validate_instance(inst);
  if (inst.kind != ProblemKind::GapDks) {
    throw std::invalid_argument("relax expects a plain GapDkS instance");
  }
  if (lambda < Rat(1) || gamma < Rat(1)) {
    throw std::invalid_argument("lambda and gamma must be at least 1");
  }
  Rat required = Rat(2) * lambda * gamma * gamma;
  GapInstance out = inst;
  out.kind = ProblemKind::GapDksGamma;
  out.params.lambda = lambda;
  out.params.gamma = gamma;
  validate_instance(out);

  ReductionRecord record;
  record.rule = "relax";
  push(record.inputs, "lambda", lambda.str());
  push(record.inputs, "gamma", gamma.str());
  push(record.inputs, "source_lambda", inst.params.lambda->str());
  push(record.derived, "required_source_lambda", required.str());
  record.guarantee_threshold_met = *inst.params.lambda >= required;
  record.layout = "identity";
  return ReductionOutput{std::move(out), std::move(record)};
}

ReductionOutput shrink_polydks(const GapInstance& inst, const Rat& delta, int t, const Rat& gamma) {
  validate_instance(inst);
  if (inst.kind != ProblemKind::PolyGapDks) {
    throw std::invalid_argument("shrink expects a plain PolyGapDkS instance");
  }
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (delta <= Rat(0) || delta > Rat(1)) throw std::invalid_argument("delta must lie in (0, 1]");
  if (gamma < Rat(1)) throw std::invalid_argument("gamma must be at least 1");
  if (*inst.params.t != t) throw std::invalid_argument("t differs from the source instance");
  Rat source_delta = delta / Rat(2 * t);
  if (*inst.params.delta != source_delta) {
    throw std::invalid_argument("source instance delta must equal delta / (2t)");
  }
  // k' = floor((k / gamma)^(1/t)).
  BigInt k_prime_big = floor_rational_root(Rat(inst.k) / gamma, static_cast<unsigned>(t));
  if (k_prime_big < 1) throw std::invalid_argument("shrunken k is degenerate (below 1)");
  std::int64_t k_prime = to_int64(k_prime_big, "shrunken k");

  // Largeness premise: k >= 2 * gamma * (2^(t+1) * gamma)^(2t/delta), i.e.
  // (k / (2 gamma))^p >= (2^(t+1) gamma)^(2tq) for delta = p/q.
  BigInt dp = delta.num();
  BigInt dq = delta.den();
  Rat base = Rat(inst.k) / (Rat(2) * gamma);
  Rat beta = Rat(big_pow(BigInt(2), static_cast<unsigned>(t + 1))) * gamma;
  bool threshold_met =
      base > Rat(0) &&
      rat_pow(base, static_cast<unsigned>(dp.convert_to<std::int64_t>())) >=
          rat_pow(beta, static_cast<unsigned>((BigInt(2) * t * dq).convert_to<std::int64_t>()));
  if (threshold_met) {
    // Inequality (1): k^(0.5 delta / t) <= 2^(-t) * (k')^delta, verified as
    // k^p * 2^(2 t^2 q) <= (k')^(2tp) after raising both sides to 2tq.
    BigInt lhs = big_pow(BigInt(inst.k), static_cast<unsigned>(dp.convert_to<std::int64_t>())) *
                 big_pow(BigInt(2), static_cast<unsigned>((BigInt(2) * t * t * dq).convert_to<std::int64_t>()));
    BigInt rhs = big_pow(k_prime_big, static_cast<unsigned>((BigInt(2) * t * dp).convert_to<std::int64_t>()));
    if (lhs > rhs) {
      throw std::logic_error("largeness premise holds but the shrink inequality fails");
    }
  }

  GapInstance out = inst;
  out.kind = ProblemKind::PolyGapDksGamma;
  out.k = k_prime;
  out.params.delta = delta;
  out.params.gamma = gamma;
  out.ell = polydks_threshold(k_prime, t, delta);
  validate_instance(out);

  ReductionRecord record;
  record.rule = "shrink";
  push(record.inputs, "delta", delta.str());
  push(record.inputs, "t", std::to_string(t));
  push(record.inputs, "gamma", gamma.str());
  push(record.inputs, "source_delta", source_delta.str());
  push(record.inputs, "k", std::to_string(inst.k));
  push(record.derived, "k_prime", std::to_string(k_prime));
  push(record.derived, "threshold", Rat(*out.ell).str());
  record.guarantee_threshold_met = threshold_met;
  record.layout = "identity";
  return ReductionOutput{std::move(out), std::move(record)};
}

ReductionOutput dks_to_dksh(const GapInstance& inst) {
  validate_instance(inst);
  if (inst.kind != ProblemKind::GapDksGamma) {
    throw std::invalid_argument("edge-to-subset reduction expects GapDkS(lambda, gamma)");
  }
  const Graph& g = carrier_graph(inst);
  std::vector<std::vector<int>> subsets;
  subsets.reserve(g.edges.size());
  for (auto [u, v] : g.edges) subsets.push_back({u, v});
  GapInstance out;
  out.kind = ProblemKind::StrongGapDksh;
  out.carrier = make_hypergraph(g.n, 2, std::move(subsets));
  out.k = inst.k;
  out.ell = inst.ell;
  out.params.lambda = inst.params.lambda;
  out.params.gamma = inst.params.gamma;
  out.params.t = 2;
  out.faithful = inst.faithful;
  validate_instance(out);

  ReductionRecord record;
  record.rule = "dks2dksh";
  push(record.inputs, "lambda", inst.params.lambda->str());
  push(record.inputs, "gamma", inst.params.gamma->str());
  push(record.inputs, "k", std::to_string(inst.k));
  push(record.derived, "universe", std::to_string(g.n));
  push(record.derived, "subsets", std::to_string(g.edges.size()));
  record.layout = "universe = source vertex ids; subsets follow the canonical edge order";
  return ReductionOutput{std::move(out), std::move(record)};
}

ReductionOutput polydks_to_dksh(const GapInstance& inst, const Rat& lambda, std::uint64_t budget) {
  validate_instance(inst);
  if (inst.kind != ProblemKind::PolyGapDksGamma) {
    throw std::invalid_argument("clique-to-subset reduction expects PolyGapDkS(1/3, t, gamma)");
  }
  if (*inst.params.delta != Rat(1, 3)) {
    throw std::invalid_argument("source delta must be exactly 1/3");
  }
  if (lambda < Rat(1)) throw std::invalid_argument("lambda must be at least 1");
  const Graph& g = carrier_graph(inst);
  const int t = *inst.params.t;
  const Rat gamma = *inst.params.gamma;

  auto universe = enumerate_cliques(g, t - 1, budget);
  auto t_cliques = enumerate_cliques(g, t, budget);
  std::vector<std::vector<int>> subsets;
  subsets.reserve(t_cliques.size());
  for (const auto& clique : t_cliques) {
    std::vector<int> facets;
    facets.reserve(static_cast<std::size_t>(t));
    std::vector<int> facet;
    facet.reserve(static_cast<std::size_t>(t) - 1);
    for (int skip = t - 1; skip >= 0; --skip) {
      // Facet omitting position `skip` (clique is ascending, so each facet
      // is ascending too).
      facet.clear();
      for (int i = 0; i < t; ++i) {
        if (i != skip) facet.push_back(clique[static_cast<std::size_t>(i)]);
      }
      auto it = std::lower_bound(universe.begin(), universe.end(), facet);
      if (it == universe.end() || *it != facet) {
        throw std::logic_error("facet of a clique is missing from the universe");
      }
      facets.push_back(static_cast<int>(it - universe.begin()));
    }
    subsets.push_back(std::move(facets));
  }
  BigInt k_prime_big = binomial(BigInt(inst.k), static_cast<unsigned>(t - 1));
  std::int64_t k_prime = to_int64(k_prime_big, "k'");
  BigInt ell_prime = ceil_rational_power(BigInt(inst.k), static_cast<unsigned>(3 * t - 1), 3);

  GapInstance out;
  out.kind = ProblemKind::StrongGapDksh;
  out.carrier = make_hypergraph(static_cast<int>(universe.size()), t, std::move(subsets));
  out.k = k_prime;
  out.ell = ell_prime;
  out.params.lambda = lambda;
  out.params.gamma = gamma;
  out.params.t = t;
  out.faithful = inst.faithful;
  validate_instance(out);

  // Largeness premise: k >= (lambda * gamma * t)^3.
  bool threshold_met = Rat(inst.k) >= rat_pow(lambda * gamma * Rat(t), 3);

  ReductionRecord record;
  record.rule = "poly2dksh";
  push(record.inputs, "lambda", lambda.str());
  push(record.inputs, "gamma", gamma.str());
  push(record.inputs, "t", std::to_string(t));
  push(record.inputs, "k", std::to_string(inst.k));
  push(record.derived, "universe", std::to_string(universe.size()));
  push(record.derived, "subsets", std::to_string(t_cliques.size()));
  push(record.derived, "k_prime", std::to_string(k_prime));
  push(record.derived, "ell_prime", Rat(ell_prime).str());
  record.guarantee_threshold_met = threshold_met;
  record.layout = "universe = (t-1)-cliques in lexicographic order; one subset (its t facets) per t-clique";
  return ReductionOutput{std::move(out), std::move(record)};
}

ReductionOutput dksh_to_dalks(const GapInstance& inst, const Rat& eps, const ScaleOverride& scale) {
  validate_instance(inst);
  if (inst.kind != ProblemKind::StrongGapDksh) {
    throw std::invalid_argument("gadget reduction expects a StrongGapDkSH instance");
  }
  if (eps <= Rat(0) || eps > Rat(1)) throw std::invalid_argument("eps must lie in (0, 1]");
  const UniformHypergraph& h = carrier_hypergraph(inst);
  const int t = *inst.params.t;
  const BigInt ell = *inst.ell;
  if (ell < 1) throw std::invalid_argument("subset threshold must be at least 1");
  std::int64_t ell64 = to_int64(ell, "ell");

  std::int64_t c1 = scale.c1.value_or(ell64);
  Rat c2_exact = Rat(10000) * Rat(t) * Rat(t) * Rat(t) * Rat(inst.k) / (eps * eps);
  std::int64_t c2 = scale.c2 ? *scale.c2 : to_int64(c2_exact.ceil(), "c2");
  BigInt x_big = scale.x ? BigInt(*scale.x)
                         : isqrt_ceil(BigInt(2) * (t - 1) * ell * c1 * c2);
  std::int64_t x = to_int64(x_big, "x");
  if (c1 < 1 || c2 < 1 || x < 0) throw std::invalid_argument("scale overrides must be positive");

  BigInt k_prime_big = BigInt(x) + BigInt(c1) * inst.k + BigInt(c2) * ell;
  std::int64_t k_prime = to_int64(k_prime_big, "k'");
  // alpha = (2t - 1) * c1 * (1 - eps / (10 t)), exact.
  Rat alpha = Rat(2 * t - 1) * Rat(c1) * (Rat(1) - eps / Rat(10 * t));
  Rat gap = Rat(2) - Rat(1, t) - eps;

  std::vector<std::int64_t> element_mults(static_cast<std::size_t>(h.n), c1);
  std::vector<GadgetShape::SubsetClass> subset_classes;
  subset_classes.reserve(h.subsets.size());
  for (const auto& subset : h.subsets) {
    subset_classes.push_back(GadgetShape::SubsetClass{c2, subset});
  }
  GadgetShape shape = make_gadget(x, std::move(element_mults), std::move(subset_classes));
  BigInt vertex_total = gadget_vertex_total(shape);
  BigInt edge_total = gadget_edge_total(shape);

  // The soundness guarantee needs source parameters at least (20 t^2 / eps,
  // 10^7 t^5 / eps^4).
  Rat lambda_required = Rat(20) * Rat(t) * Rat(t) / eps;
  Rat gamma_required = Rat(10000000) * rat_pow(Rat(t), 5) / rat_pow(eps, 4);
  bool threshold_met =
      *inst.params.lambda >= lambda_required && *inst.params.gamma >= gamma_required;

  GapInstance out;
  out.kind = ProblemKind::GapDalks;
  out.carrier = std::move(shape);
  out.k = k_prime;
  out.alpha = alpha;
  out.params.lambda = gap;
  out.params.eps = eps;
  out.params.t = t;
  out.faithful = inst.faithful && !scale.any();
  validate_instance(out);

  ReductionRecord record;
  record.rule = "dksh2dalks";
  push(record.inputs, "eps", eps.str());
  push(record.inputs, "t", std::to_string(t));
  push(record.inputs, "k", std::to_string(inst.k));
  push(record.inputs, "ell", Rat(ell).str());
  push(record.inputs, "source_lambda", inst.params.lambda->str());
  push(record.inputs, "source_gamma", inst.params.gamma->str());
  if (scale.any()) {
    push(record.inputs, "scaled", "true");
  }
  push(record.derived, "c1", std::to_string(c1));
  push(record.derived, "c2", std::to_string(c2));
  push(record.derived, "x", std::to_string(x));
  push(record.derived, "k_prime", std::to_string(k_prime));
  push(record.derived, "alpha", alpha.str());
  push(record.derived, "gap", gap.str());
  push(record.derived, "required_lambda", lambda_required.str());
  push(record.derived, "required_gamma", gamma_required.str());
  push(record.derived, "vertex_total", vertex_total.str());
  push(record.derived, "edge_total", edge_total.str());
  record.guarantee_threshold_met = threshold_met;
  {
    std::ostringstream layout;
    layout << "clique [0," << x << "); element copies [" << x << "," << x + BigInt(c1) * h.n
           << ") class-major with multiplicity " << c1 << "; subset copies from "
           << x + BigInt(c1) * h.n << " class-major with multiplicity " << c2;
    record.layout = layout.str();
  }
  return ReductionOutput{std::move(out), std::move(record)};
}

ReductionOutput clique_to_dalks(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<std::int64_t> element_mults(static_cast<std::size_t>(g.n), 1);
  std::vector<GadgetShape::SubsetClass> subset_classes;
  subset_classes.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    subset_classes.push_back(GadgetShape::SubsetClass{1, {u, v}});
  }
  GadgetShape shape = make_gadget(k, std::move(element_mults), std::move(subset_classes));
  BigInt choose2 = binomial(BigInt(k), 2);
  std::int64_t k_prime = to_int64(BigInt(2) * k + choose2, "k'");
  Rat alpha = Rat(3 * choose2, BigInt(k_prime));

  GapInstance out;
  out.kind = ProblemKind::GapDalks;
  out.carrier = std::move(shape);
  out.k = k_prime;
  out.alpha = alpha;
  out.params.lambda = Rat(1);  // exact decision problem: no gap
  out.faithful = true;
  validate_instance(out);
  if (k >= 10 && alpha <= Rat(2)) {
    throw std::logic_error("alpha must exceed 2 once k reaches 10");
  }

  ReductionRecord record;
  record.rule = "clique2dalks";
  push(record.inputs, "k", std::to_string(k));
  push(record.inputs, "n", std::to_string(g.n));
  push(record.inputs, "m", std::to_string(g.edges.size()));
  push(record.derived, "x", std::to_string(k));
  push(record.derived, "k_prime", std::to_string(k_prime));
  push(record.derived, "alpha", alpha.str());
  record.guarantee_threshold_met = k >= 10;
  {
    std::ostringstream layout;
    layout << "clique [0," << k << "); source vertices [" << k << "," << k + g.n
           << "); source edges [" << k + g.n << "," << k + g.n + g.m() << ") in canonical order";
    record.layout = layout.str();
  }
  return ReductionOutput{std::move(out), std::move(record)};
}

namespace {

void add_check(PipelinePlan& plan, const std::string& name, bool ok) {
  plan.checks.emplace_back(name, ok);
}

}  // namespace

PipelinePlan plan_pipeline(int theorem, const Rat& eps) {
  if (eps <= Rat(0) || eps > Rat(1)) throw std::invalid_argument("eps must lie in (0, 1]");
  PipelinePlan plan;
  plan.theorem = theorem;
  plan.eps = eps;
  if (theorem == 1) {
    Rat lambda = Rat(big_pow(BigInt(20), 16)) / rat_pow(eps, 9);
    Rat stage_lambda = Rat(80) / eps;
    Rat stage_gamma = Rat(big_pow(BigInt(20), 7)) / rat_pow(eps, 4);
    Rat gap = Rat(3, 2) - eps;
    plan.stages.push_back({"gapdks", {{"lambda", lambda.str()}}});
    plan.stages.push_back(
        {"gapdks-gamma", {{"lambda", stage_lambda.str()}, {"gamma", stage_gamma.str()}}});
    plan.stages.push_back({"strong-gapdksh",
                           {{"lambda", stage_lambda.str()}, {"gamma", stage_gamma.str()}, {"t", "2"}}});
    plan.stages.push_back({"gapdalks", {{"lambda", gap.str()}}});
    // Stage compatibility, all exact: the source lambda must dominate the
    // trivial-reduction requirement, and the gadget stage's (lambda, gamma)
    // requirements at t=2 and this eps must be dominated by stage 3's.
    Rat relax_required = Rat(2) * stage_lambda * stage_gamma * stage_gamma;
    add_check(plan, "relax source lambda >= 2*lambda*gamma^2", lambda >= relax_required);
    Rat required_lambda = Rat(20) * 4 / eps;
    Rat required_gamma = Rat(10000000) * 32 / rat_pow(eps, 4);
    add_check(plan, "gadget stage lambda requirement", stage_lambda >= required_lambda);
    add_check(plan, "gadget stage gamma requirement", stage_gamma >= required_gamma);
    add_check(plan, "final gap equals 2 - 1/t - eps at t=2", gap == Rat(2) - Rat(1, 2) - eps);
  } else if (theorem == 3) {
    BigInt t_big = (Rat(2) / eps).ceil();
    int t = static_cast<int>(t_big.convert_to<std::int64_t>());
    Rat t_rat(t);
    Rat gamma = Rat(big_pow(BigInt(20), 7)) * rat_pow(t_rat, 5) / rat_pow(eps, 4);
    Rat source_delta = Rat(1, 6 * t);
    Rat stage_lambda = Rat(40) * t_rat * t_rat / eps;
    Rat gap = Rat(2) - eps;
    plan.stages.push_back(
        {"polygapdks", {{"delta", source_delta.str()}, {"t", std::to_string(t)}}});
    plan.stages.push_back({"polygapdks-gamma",
                           {{"delta", Rat(1, 3).str()}, {"t", std::to_string(t)}, {"gamma", gamma.str()}}});
    plan.stages.push_back({"strong-gapdksh",
                           {{"lambda", stage_lambda.str()}, {"gamma", gamma.str()}, {"t", std::to_string(t)}}});
    plan.stages.push_back({"gapdalks", {{"lambda", gap.str()}}});
    add_check(plan, "shrink source delta equals (1/3)/(2t)", source_delta == Rat(1, 3) / Rat(2 * t));
    Rat half_eps = eps / Rat(2);
    Rat required_lambda = Rat(20) * t_rat * t_rat / half_eps;
    Rat required_gamma = Rat(10000000) * rat_pow(t_rat, 5) / rat_pow(half_eps, 4);
    add_check(plan, "gadget stage lambda requirement at eps/2", stage_lambda >= required_lambda);
    add_check(plan, "gadget stage gamma requirement at eps/2", gamma >= required_gamma);
    Rat achieved = Rat(2) - Rat(1, t) - half_eps;
    add_check(plan, "achieved gap 2 - 1/t - eps/2 covers 2 - eps", achieved >= gap);
  } else {
    throw std::invalid_argument("theorem must be 1 or 3");
  }
  return plan;
}

std::string render_plan(const PipelinePlan& plan) {
  std::ostringstream out;
  out << "theorem " << plan.theorem << " chain at eps = " << plan.eps.str() << "\n";
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    out << "  stage " << i + 1 << ": " << plan.stages[i].problem << " (";
    for (std::size_t j = 0; j < plan.stages[i].params.size(); ++j) {
      if (j > 0) out << ", ";
      out << plan.stages[i].params[j].first << " = " << plan.stages[i].params[j].second;
    }
    out << ")\n";
  }
  for (const auto& [name, ok] : plan.checks) {
    out << "  check: " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
  }
  return out.str();
}

}  // namespace dslab
