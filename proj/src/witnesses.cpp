// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dslab/gadget.hpp"
#include "dslab/generators.hpp"
#include "dslab/graph.hpp"
#include "dslab/hypergraph.hpp"

namespace dslab {
namespace {

// Largest expansion we are willing to materialize just to cross-check the
// analytic gadget density.
constexpr std::int64_t kMaxCrossCheckVertices = 200000;

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::invalid_argument(std::string(what) + " does not fit 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<int> to_int_vertices(const Witness& w, std::int64_t index_count, const char* what) {
  std::vector<int> out;
  out.reserve(w.vertices.size());
  for (std::int64_t v : w.vertices) {
    if (v < 0 || v >= index_count) {
      throw std::invalid_argument(std::string(what) + ": witness index " + std::to_string(v) +
                                  " outside [0, " + std::to_string(index_count) + ")");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void check_index_range(const Witness& w, std::int64_t index_count) {
  for (std::int64_t v : w.vertices) {
    if (v < 0 || v >= index_count) {
      throw std::invalid_argument("witness index " + std::to_string(v) + " outside [0, " +
                                  std::to_string(index_count) + ")");
    }
  }
}

// Per-class membership counts of a witness inside a gadget expansion.
struct GadgetCounts {
  std::int64_t clique = 0;
  std::vector<std::int64_t> elements;
  std::vector<std::int64_t> subsets;
};

GadgetCounts split_gadget_witness(const GadgetShape& s, const Witness& w) {
  GadgetCounts counts;
  counts.elements.assign(s.elements.size(), 0);
  counts.subsets.assign(s.subsets.size(), 0);

  // Region boundaries in canonical layout order: clique, element classes,
  // subset classes.  boundaries[r+1] is the first index past region r.
  std::vector<std::int64_t> boundaries;
  boundaries.reserve(s.elements.size() + s.subsets.size() + 2);
  boundaries.push_back(0);
  boundaries.push_back(s.clique_size);
  std::int64_t cursor = s.clique_size;
  for (const auto& e : s.elements) {
    cursor += e.multiplicity;
    boundaries.push_back(cursor);
  }
  for (const auto& sub : s.subsets) {
    cursor += sub.multiplicity;
    boundaries.push_back(cursor);
  }

  std::size_t region = 0;
  for (std::int64_t v : w.vertices) {
    while (region + 1 < boundaries.size() && v >= boundaries[region + 1]) ++region;
    if (region + 1 >= boundaries.size()) {
      throw std::invalid_argument("witness index " + std::to_string(v) +
                                  " outside the gadget expansion");
    }
    if (region == 0) {
      ++counts.clique;
    } else if (region <= s.elements.size()) {
      ++counts.elements[region - 1];
    } else {
      ++counts.subsets[region - 1 - s.elements.size()];
    }
  }
  return counts;
}

// Exact density of the witness inside the expansion, computed from class
// counts: the clique contributes C(y,2) edges, and each selected copy of a
// subset class is adjacent to every selected copy of its member classes.
Rat analytic_gadget_density(const GadgetShape& s, const Witness& w) {
  const GadgetCounts counts = split_gadget_witness(s, w);
  BigInt edges = binomial(BigInt(counts.clique), 2);
  for (std::size_t j = 0; j < s.subsets.size(); ++j) {
    if (counts.subsets[j] == 0) continue;
    BigInt gain = 0;
    for (int u : s.subsets[j].members) {
      gain += counts.elements[static_cast<std::size_t>(u)];
    }
    edges += BigInt(counts.subsets[j]) * gain;
  }
  return Rat(edges, BigInt(w.size()));
}

Rat gadget_witness_density(const GadgetShape& s, const Witness& w, std::uint64_t budget) {
  const Rat analytic = analytic_gadget_density(s, w);
  const BigInt vt = gadget_vertex_total(s);
  const BigInt et = gadget_edge_total(s);
  if (vt <= kMaxCrossCheckVertices && et <= BigInt(budget)) {
    const Graph expanded = expand_gadget(s, budget);
    std::vector<int> verts;
    verts.reserve(w.vertices.size());
    for (std::int64_t v : w.vertices) verts.push_back(static_cast<int>(v));
    if (density(expanded, verts) != analytic) {
      throw std::logic_error("analytic gadget density disagrees with the expansion");
    }
  }
  return analytic;
}

std::string size_reason(const char* relation, std::int64_t got, std::int64_t want) {
  return std::string("size: need |w| ") + relation + " " + std::to_string(want) + ", got " +
         std::to_string(got);
}

Verdict finish(Rat objective, Rat threshold, std::string size_violation) {
  Verdict v;
  v.objective = std::move(objective);
  v.threshold = std::move(threshold);
  v.margin = v.objective - v.threshold;
  if (!size_violation.empty()) {
    v.valid = false;
    v.reason = std::move(size_violation);
  } else if (v.objective >= v.threshold) {
    v.valid = true;
  } else {
    v.valid = false;
    v.reason = "objective below threshold";
  }
  return v;
}

int required_t(const GapInstance& inst) {
  if (!inst.params.t) throw std::invalid_argument("instance is missing t");
  return *inst.params.t;
}

// Padded completeness set: the witness elements, extended with the
// smallest-index absent universe elements until it has exactly k members.
std::vector<char> padded_member_flags(int universe, const Witness& w, std::int64_t k) {
  std::vector<char> in_set(static_cast<std::size_t>(universe), 0);
  for (std::int64_t v : w.vertices) in_set[static_cast<std::size_t>(v)] = 1;
  std::int64_t have = w.size();
  for (int u = 0; u < universe && have < k; ++u) {
    if (!in_set[static_cast<std::size_t>(u)]) {
      in_set[static_cast<std::size_t>(u)] = 1;
      ++have;
    }
  }
  if (have != k) {
    throw std::invalid_argument("universe too small to pad the witness to size k");
  }
  return in_set;
}

void require_kind(const GapInstance& inst, ProblemKind kind, const char* role) {
  if (inst.kind != kind) {
    throw std::invalid_argument(std::string("rule expects ") + kind_name(kind) + " as " + role +
                                ", got " + kind_name(inst.kind));
  }
}

Witness map_relax(const Witness& w, const Rat& objective) {
  Witness out = make_witness(w.vertices);
  out.claimed_value = objective;
  return out;
}

Witness map_shrink(const GapInstance& source, const Witness& w, const GapInstance& target,
                   std::uint64_t budget) {
  const Graph& g = carrier_graph(source);
  const int t = required_t(target);
  if (target.k > w.size()) {
    throw std::invalid_argument("target k exceeds the source witness size");
  }
  std::vector<int> s = to_int_vertices(w, g.n, "shrink");
  std::vector<int> picked = shrink_clique_witness_sample(g, s, static_cast<int>(target.k), t,
                                                         /*seed=*/0, /*draws=*/64, budget);
  Witness out = make_witness(std::vector<std::int64_t>(picked.begin(), picked.end()));
  out.claimed_value = Rat(count_cliques_in(g, picked, t, budget));
  return out;
}

Witness map_poly_to_dksh(const GapInstance& source, const Witness& w, const GapInstance& target,
                         std::uint64_t budget) {
  const Graph& g = carrier_graph(source);
  const UniformHypergraph& h = carrier_hypergraph(target);
  const int t = required_t(target);
  const auto universe = enumerate_cliques(g, t - 1, budget);
  if (static_cast<std::int64_t>(universe.size()) != h.n) {
    throw std::invalid_argument("target universe does not match the source graph's cliques");
  }
  std::vector<char> in_set(static_cast<std::size_t>(g.n), 0);
  for (std::int64_t v : w.vertices) in_set[static_cast<std::size_t>(v)] = 1;

  std::vector<std::int64_t> mapped;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    bool inside = true;
    for (int v : universe[i]) {
      if (!in_set[static_cast<std::size_t>(v)]) {
        inside = false;
        break;
      }
    }
    if (inside) mapped.push_back(static_cast<std::int64_t>(i));
  }
  Witness out = make_witness(std::move(mapped));
  std::vector<int> verts = to_int_vertices(out, h.n, "poly2dksh");
  out.claimed_value = Rat(subsets_within(h, verts));
  return out;
}

Witness map_dksh_to_dalks(const GapInstance& source, const Witness& w, const GapInstance& target) {
  const UniformHypergraph& h = carrier_hypergraph(source);
  const GadgetShape& shape = carrier_gadget(target);
  if (static_cast<std::int64_t>(shape.elements.size()) != h.n ||
      static_cast<std::int64_t>(shape.subsets.size()) != h.size()) {
    throw std::invalid_argument("target gadget does not match the source hypergraph");
  }
  if (!source.ell) throw std::invalid_argument("source instance is missing ell");
  const std::int64_t ell = to_i64(*source.ell, "ell");
  const std::int64_t x = shape.clique_size;
  const int t = h.t;

  const std::vector<char> in_set = padded_member_flags(h.n, w, source.k);

  // Lexicographically first ell subsets fully contained in the padded set.
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(ell));
  for (std::size_t i = 0; i < h.subsets.size() &&
                          static_cast<std::int64_t>(chosen.size()) < ell; ++i) {
    bool inside = true;
    for (int u : h.subsets[i]) {
      if (!in_set[static_cast<std::size_t>(u)]) {
        inside = false;
        break;
      }
    }
    if (inside) chosen.push_back(static_cast<int>(i));
  }
  if (static_cast<std::int64_t>(chosen.size()) < ell) {
    throw std::logic_error("valid source witness contains fewer than ell subsets");
  }

  const std::int64_t c1 = shape.elements.empty() ? 0 : shape.elements[0].multiplicity;
  const std::int64_t c2 = shape.subsets.empty() ? 0 : shape.subsets[0].multiplicity;
  std::vector<std::int64_t> verts;
  for (std::int64_t v = 0; v < x; ++v) verts.push_back(v);
  for (int u = 0; u < h.n; ++u) {
    if (!in_set[static_cast<std::size_t>(u)]) continue;
    const std::int64_t off = to_i64(gadget_element_offset(shape, u), "element offset");
    const std::int64_t mult = shape.elements[static_cast<std::size_t>(u)].multiplicity;
    for (std::int64_t j = 0; j < mult; ++j) verts.push_back(off + j);
  }
  for (int i : chosen) {
    const std::int64_t off = to_i64(gadget_subset_offset(shape, i), "subset offset");
    const std::int64_t mult = shape.subsets[static_cast<std::size_t>(i)].multiplicity;
    for (std::int64_t j = 0; j < mult; ++j) verts.push_back(off + j);
  }

  Witness out = make_witness(std::move(verts));
  // Every chosen subset sits inside the padded set, so each of its copies is
  // adjacent to all t * c1 selected element copies.
  const BigInt edges = binomial(BigInt(x), 2) + BigInt(ell) * BigInt(c2) * BigInt(t) * BigInt(c1);
  out.claimed_value = Rat(edges, BigInt(out.size()));
  return out;
}

Witness map_clique_to_dalks(const GapInstance& source, const Witness& w,
                            const GapInstance& target) {
  const Graph& g = carrier_graph(source);
  const GadgetShape& shape = carrier_gadget(target);
  if (static_cast<std::int64_t>(shape.elements.size()) != g.n ||
      static_cast<std::int64_t>(shape.subsets.size()) != g.m() ||
      shape.clique_size != source.k) {
    throw std::invalid_argument("target gadget does not match the source graph");
  }
  std::vector<char> in_set(static_cast<std::size_t>(g.n), 0);
  for (std::int64_t v : w.vertices) in_set[static_cast<std::size_t>(v)] = 1;

  std::vector<std::int64_t> verts;
  for (std::int64_t v = 0; v < shape.clique_size; ++v) verts.push_back(v);
  for (std::int64_t v : w.vertices) {
    verts.push_back(to_i64(gadget_element_offset(shape, static_cast<int>(v)), "element offset"));
  }
  std::int64_t inner_edges = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [u, v] = g.edges[i];
    if (in_set[static_cast<std::size_t>(u)] && in_set[static_cast<std::size_t>(v)]) {
      verts.push_back(to_i64(gadget_subset_offset(shape, static_cast<int>(i)), "subset offset"));
      ++inner_edges;
    }
  }
  Witness out = make_witness(std::move(verts));
  // Clique block plus, per selected edge copy, its two endpoints.
  const BigInt edges = binomial(BigInt(shape.clique_size), 2) + BigInt(2) * BigInt(inner_edges);
  out.claimed_value = Rat(edges, BigInt(out.size()));
  return out;
}

// den_{<=limit}(G) = max over sizes 1..limit of edge_{=j}(G) / j: for a
// fixed size the densest set is the one with the most edges.
Rat brute_den_atmost(const Graph& g, int limit, std::uint64_t budget) {
  if (g.n == 0) throw std::invalid_argument("density of the empty graph is undefined");
  Rat best(0);
  const int top = std::min(limit, g.n);
  if (top < 1) throw std::invalid_argument("size bound must be at least 1");
  for (int j = 1; j <= top; ++j) {
    const Rat cand = Rat(brute_edge_max(g, j, SizeMode::Exact, budget)) / Rat(j);
    if (cand > best) best = cand;
  }
  return best;
}

// Exact comparison value < k^(p/q) for value >= 0: value^q < k^p.
bool below_rational_power(const Rat& value, std::int64_t k, const Rat& exponent) {
  const BigInt p_big = exponent.num();
  const BigInt q_big = exponent.den();
  if (p_big < 0 || p_big > 64 || q_big > 64) {
    throw std::invalid_argument("exponent outside the supported range");
  }
  const unsigned p = static_cast<unsigned>(p_big);
  const unsigned q = static_cast<unsigned>(q_big);
  return rat_pow(value, q) < Rat(big_pow(BigInt(k), p));
}

std::int64_t gamma_size_limit(const GapInstance& inst) {
  if (!inst.params.gamma) throw std::invalid_argument("instance is missing gamma");
  return to_i64((*inst.params.gamma * Rat(inst.k)).floor(), "gamma * k");
}

bool soundness_dksh(const GapInstance& inst, std::uint64_t budget) {
  const UniformHypergraph& h = carrier_hypergraph(inst);
  if (!inst.params.lambda || !inst.ell) {
    throw std::invalid_argument("instance is missing lambda or ell");
  }
  const Rat bound = Rat(*inst.ell) / *inst.params.lambda;
  const int limit =
      static_cast<int>(std::min<std::int64_t>(gamma_size_limit(inst), h.n));
  if (h.n > 63) throw budget_exceeded("universe too large for exhaustive soundness check");

  std::vector<std::uint64_t> subset_masks;
  subset_masks.reserve(h.subsets.size());
  for (const auto& subset : h.subsets) {
    std::uint64_t mask = 0;
    for (int u : subset) mask |= std::uint64_t{1} << u;
    subset_masks.push_back(mask);
  }

  const std::uint64_t total = std::uint64_t{1} << h.n;
  std::uint64_t steps = 0;
  for (std::uint64_t t_mask = 0; t_mask < total; ++t_mask) {
    if (++steps > budget) throw budget_exceeded("soundness sweep exceeded the budget");
    if (std::popcount(t_mask) > limit) continue;
    std::int64_t touched = 0;
    for (std::uint64_t mask : subset_masks) {
      if (std::popcount(mask & t_mask) > 1) ++touched;
    }
    if (!(Rat(touched) < bound)) return false;
  }
  return true;
}

}  // namespace

std::string serialize_verdict(const Verdict& v) {
  nlohmann::ordered_json j;
  j["valid"] = v.valid;
  j["objective"] = v.objective.str();
  j["threshold"] = v.threshold.str();
  j["margin"] = v.margin.str();
  j["reason"] = v.reason;
  return j.dump(2) + "\n";
}

Verdict check_witness(const GapInstance& inst, const Witness& w, std::uint64_t budget) {
  validate_instance(inst);
  switch (inst.kind) {
    case ProblemKind::GapDks:
    case ProblemKind::GapDksGamma: {
      const Graph& g = carrier_graph(inst);
      std::vector<int> verts = to_int_vertices(w, g.n, "check_witness");
      const Rat objective(edges_within(g, verts));
      std::string violation;
      if (w.size() != inst.k) violation = size_reason("=", w.size(), inst.k);
      return finish(objective, Rat(*inst.ell), std::move(violation));
    }
    case ProblemKind::PolyGapDks:
    case ProblemKind::PolyGapDksGamma: {
      const Graph& g = carrier_graph(inst);
      std::vector<int> verts = to_int_vertices(w, g.n, "check_witness");
      const Rat objective(count_cliques_in(g, verts, required_t(inst), budget));
      std::string violation;
      if (w.size() != inst.k) violation = size_reason("=", w.size(), inst.k);
      return finish(objective, Rat(*inst.ell), std::move(violation));
    }
    case ProblemKind::StrongGapDksh: {
      const UniformHypergraph& h = carrier_hypergraph(inst);
      std::vector<int> verts = to_int_vertices(w, h.n, "check_witness");
      const Rat objective(subsets_within(h, verts));
      std::string violation;
      if (w.size() > inst.k) violation = size_reason("<=", w.size(), inst.k);
      return finish(objective, Rat(*inst.ell), std::move(violation));
    }
    case ProblemKind::GapDalks: {
      std::string violation;
      if (w.size() < inst.k) violation = size_reason(">=", w.size(), inst.k);
      Rat objective(0);
      if (const auto* g = std::get_if<Graph>(&inst.carrier)) {
        std::vector<int> verts = to_int_vertices(w, g->n, "check_witness");
        if (!verts.empty()) objective = density(*g, verts);
      } else {
        const GadgetShape& shape = carrier_gadget(inst);
        check_index_range(w, carrier_index_count(inst));
        if (w.size() > 0) objective = gadget_witness_density(shape, w, budget);
      }
      return finish(objective, *inst.alpha, std::move(violation));
    }
  }
  throw std::logic_error("unreachable problem kind");
}

ReductionRule rule_from_name(const std::string& name) {
  if (name == "relax") return ReductionRule::Relax;
  if (name == "shrink") return ReductionRule::Shrink;
  if (name == "dks2dksh") return ReductionRule::DksToDksh;
  if (name == "poly2dksh") return ReductionRule::PolyToDksh;
  if (name == "dksh2dalks") return ReductionRule::DkshToDalks;
  if (name == "clique2dalks") return ReductionRule::CliqueToDalks;
  throw std::invalid_argument("unknown reduction rule: " + name);
}

std::string rule_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::Relax: return "relax";
    case ReductionRule::Shrink: return "shrink";
    case ReductionRule::DksToDksh: return "dks2dksh";
    case ReductionRule::PolyToDksh: return "poly2dksh";
    case ReductionRule::DkshToDalks: return "dksh2dalks";
    case ReductionRule::CliqueToDalks: return "clique2dalks";
  }
  throw std::logic_error("unreachable reduction rule");
}

Witness map_witness(ReductionRule rule, const GapInstance& source, const Witness& w,
                    const GapInstance& target, std::uint64_t budget) {
  const Verdict source_verdict = check_witness(source, w, budget);
  if (!source_verdict.valid) {
    throw std::invalid_argument("source witness is invalid (" + source_verdict.reason +
                                (source_verdict.reason.empty() ? "" : "; ") + "objective " +
                                source_verdict.objective.str() + " vs threshold " +
                                source_verdict.threshold.str() + ")");
  }
  switch (rule) {
    case ReductionRule::Relax:
      require_kind(source, ProblemKind::GapDks, "source");
      require_kind(target, ProblemKind::GapDksGamma, "target");
      return map_relax(w, source_verdict.objective);
    case ReductionRule::Shrink:
      require_kind(source, ProblemKind::PolyGapDks, "source");
      require_kind(target, ProblemKind::PolyGapDksGamma, "target");
      return map_shrink(source, w, target, budget);
    case ReductionRule::DksToDksh:
      require_kind(source, ProblemKind::GapDksGamma, "source");
      require_kind(target, ProblemKind::StrongGapDksh, "target");
      return map_relax(w, source_verdict.objective);
    case ReductionRule::PolyToDksh:
      require_kind(source, ProblemKind::PolyGapDksGamma, "source");
      require_kind(target, ProblemKind::StrongGapDksh, "target");
      return map_poly_to_dksh(source, w, target, budget);
    case ReductionRule::DkshToDalks:
      require_kind(source, ProblemKind::StrongGapDksh, "source");
      require_kind(target, ProblemKind::GapDalks, "target");
      return map_dksh_to_dalks(source, w, target);
    case ReductionRule::CliqueToDalks:
      require_kind(source, ProblemKind::GapDks, "source");
      require_kind(target, ProblemKind::GapDalks, "target");
      return map_clique_to_dalks(source, w, target);
  }
  throw std::logic_error("unreachable reduction rule");
}

std::optional<std::vector<int>> extract_clique(const GapInstance& inst, const Witness& w) {
  require_kind(inst, ProblemKind::GapDalks, "instance");
  const GadgetShape& shape = carrier_gadget(inst);
  for (const auto& e : shape.elements) {
    if (e.multiplicity != 1) throw std::invalid_argument("element multiplicities must be 1");
  }
  std::vector<std::pair<int, int>> source_edges;
  source_edges.reserve(shape.subsets.size());
  for (const auto& sub : shape.subsets) {
    if (sub.multiplicity != 1 || sub.members.size() != 2) {
      throw std::invalid_argument("subset classes must be single copies of vertex pairs");
    }
    source_edges.emplace_back(sub.members[0], sub.members[1]);
  }
  const Graph source = make_graph(static_cast<int>(shape.elements.size()), source_edges);
  const std::int64_t k = shape.clique_size;

  check_index_range(w, carrier_index_count(inst));
  std::vector<int> candidate;
  for (std::int64_t v : w.vertices) {
    if (v >= k && v < k + source.n) candidate.push_back(static_cast<int>(v - k));
  }
  if (static_cast<std::int64_t>(candidate.size()) != k) return std::nullopt;
  if (BigInt(edges_within(source, candidate)) != binomial(BigInt(k), 2)) return std::nullopt;
  return candidate;
}

std::vector<int> shrink_witness_peel(const Graph& g, const std::vector<int>& s, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > s.size()) {
    throw std::invalid_argument("target size must lie in [0, |S|]");
  }
  std::vector<int> cur(s);
  std::sort(cur.begin(), cur.end());
  const std::int64_t start_edges = edges_within(g, cur);  // also validates s
  const std::int64_t r = static_cast<std::int64_t>(cur.size());

  AdjacencyBits adj(g);
  while (static_cast<int>(cur.size()) > k) {
    std::size_t victim = 0;
    int best_deg = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      int deg = 0;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (i != j && adj.test(cur[i], cur[j])) ++deg;
      }
      if (deg < best_deg) {
        best_deg = deg;
        victim = i;
      }
    }
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(victim));
  }

  // Each deletion keeps at least an (s-2)/s fraction of the edges, which
  // telescopes to e(S') * r(r-1) >= e(S) * k(k-1).
  const BigInt lhs = BigInt(edges_within(g, cur)) * BigInt(r) * BigInt(r - 1);
  const BigInt rhs = BigInt(start_edges) * BigInt(k) * BigInt(k - 1);
  if (lhs < rhs) throw std::logic_error("peeling fell below the telescoping edge bound");
  return cur;
}

std::vector<int> shrink_clique_witness_sample(const Graph& g, const std::vector<int>& s,
                                              int k_prime, int t, std::uint64_t seed, int draws,
                                              std::uint64_t budget) {
  if (k_prime < 0 || static_cast<std::size_t>(k_prime) > s.size()) {
    throw std::invalid_argument("sample size must lie in [0, |S|]");
  }
  if (draws < 1) throw std::invalid_argument("at least one draw is required");
  std::vector<int> pool(s);
  std::sort(pool.begin(), pool.end());

  DetRng rng(seed);
  std::vector<int> best;
  BigInt best_count(-1);
  for (int d = 0; d < draws; ++d) {
    std::vector<int> shuffled(pool);
    for (std::size_t i = 0; i < static_cast<std::size_t>(k_prime); ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(shuffled.size() - i)));
      std::swap(shuffled[i], shuffled[j]);
    }
    std::vector<int> pick(shuffled.begin(), shuffled.begin() + k_prime);
    std::sort(pick.begin(), pick.end());
    const BigInt count = count_cliques_in(g, pick, t, budget);
    if (count > best_count) {
      best_count = count;
      best = std::move(pick);
    }
  }
  return best;
}

bool brute_check_soundness(const GapInstance& inst, std::uint64_t budget) {
  validate_instance(inst);
  switch (inst.kind) {
    case ProblemKind::GapDks: {
      const Graph& g = carrier_graph(inst);
      const Rat bound = Rat(*inst.ell) / *inst.params.lambda;
      return Rat(brute_edge_max(g, static_cast<int>(inst.k), SizeMode::Exact, budget)) < bound;
    }
    case ProblemKind::GapDksGamma: {
      const Graph& g = carrier_graph(inst);
      const Rat bound = Rat(*inst.ell) / *inst.params.lambda;
      const int limit = static_cast<int>(std::min<std::int64_t>(gamma_size_limit(inst), g.n));
      return Rat(brute_edge_max(g, limit, SizeMode::AtMost, budget)) < bound;
    }
    case ProblemKind::PolyGapDks: {
      const Graph& g = carrier_graph(inst);
      const Rat best = brute_den_atmost(g, static_cast<int>(inst.k), budget);
      return below_rational_power(best, inst.k, *inst.params.delta);
    }
    case ProblemKind::PolyGapDksGamma: {
      const Graph& g = carrier_graph(inst);
      const int limit = static_cast<int>(std::min<std::int64_t>(gamma_size_limit(inst), g.n));
      const Rat best = brute_den_atmost(g, limit, budget);
      return below_rational_power(best, inst.k, *inst.params.delta);
    }
    case ProblemKind::StrongGapDksh:
      return soundness_dksh(inst, budget);
    case ProblemKind::GapDalks: {
      const Rat bound = *inst.alpha / *inst.params.lambda;
      if (const auto* g = std::get_if<Graph>(&inst.carrier)) {
        return brute_den_atleast(*g, static_cast<int>(inst.k), budget).value < bound;
      }
      const Graph expanded = expand_gadget(carrier_gadget(inst), budget);
      return brute_den_atleast(expanded, static_cast<int>(inst.k), budget).value < bound;
    }
  }
  throw std::logic_error("unreachable problem kind");
}

}  // namespace dslab
