// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dslab/maxflow.hpp"

namespace dslab {

namespace {

std::vector<std::int64_t> widen(const std::vector<int>& vertices) {
  return {vertices.begin(), vertices.end()};
}

struct CutOutcome {
  bool improvable;         // some superset of the anchors beats the guess
  std::vector<int> side;   // maximal minimum-cut source side (graph vertices only)
};

// Density decision network for a guess p/q: source -> v with capacity
// deg(v) * q (effectively infinite for anchors), v -> sink with capacity
// 2p, and both orientations of every edge with capacity q.  A cut keeping
// W on the source side costs 2mq - 2q * edges(W) + 2p * |W|, so the minimum
// cut drops below 2mq exactly when some W (containing all anchors) has
// density above the guess.
CutOutcome density_cut(const Graph& g, const std::vector<char>& anchored, const Rat& guess) {
  const int n = g.n;
  const int source = n;
  const int sink = n + 1;
  const BigInt p = guess.num();
  const BigInt q = guess.den();
  auto deg = degrees(g);
  BigInt infinite = 1 + 2 * p * n;
  for (int v = 0; v < n; ++v) infinite += deg[static_cast<std::size_t>(v)] * q;
  MaxFlow flow(n + 2);
  for (int v = 0; v < n; ++v) {
    flow.add_arc(source, v, anchored[static_cast<std::size_t>(v)] ? infinite
                                                                  : deg[static_cast<std::size_t>(v)] * q);
    flow.add_arc(v, sink, 2 * p);
  }
  for (auto [u, v] : g.edges) {
    flow.add_arc(u, v, q);
    flow.add_arc(v, u, q);
  }
  BigInt value = flow.run(source, sink);
  BigInt bound = BigInt(2) * g.m() * q;
  auto side = flow.max_cut_source_side(sink);
  std::vector<int> vertices;
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<std::size_t>(v)]) vertices.push_back(v);
  }
  return CutOutcome{value < bound, std::move(vertices)};
}

std::vector<char> anchor_flags(const Graph& g, std::span<const int> anchors) {
  std::vector<char> flags(static_cast<std::size_t>(g.n), 0);
  for (int a : anchors) {
    if (a < 0 || a >= g.n) throw std::invalid_argument("anchor out of range");
    if (flags[static_cast<std::size_t>(a)]) throw std::invalid_argument("duplicate anchor");
    flags[static_cast<std::size_t>(a)] = 1;
  }
  return flags;
}

std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Exact binary search over density guesses.  The invariant is that `low` is
// always a density achieved by some anchored superset and `high` never
// falls below the optimum; distinct subgraph densities differ by at least
// 1 / (n * (n - 1)), so once the interval is narrower the achieved value is
// the optimum.  A final cut at the optimum recovers the inclusion-maximal
// optimal set (minimum cuts are closed under union).
SolveResult densest_core(const Graph& g, std::span<const int> anchors, Method method) {
  if (g.n <= 0) throw std::invalid_argument("graph has no vertices");
  auto anchored = anchor_flags(g, anchors);
  if (g.m() == 0) {
    Witness w = make_witness(widen(all_vertices(g)));
    w.claimed_value = Rat(0);
    return SolveResult{std::move(w), Rat(0), method, Guarantee::Exact};
  }
  std::vector<int> low_set;
  if (anchors.empty()) {
    low_set = all_vertices(g);
  } else {
    low_set.assign(anchors.begin(), anchors.end());
    std::sort(low_set.begin(), low_set.end());
  }
  Rat low = density(g, low_set);
  Rat high(BigInt(g.n - 1), BigInt(2));
  const Rat gap(BigInt(1), BigInt(g.n) * (g.n - 1));
  while (high - low >= gap) {
    Rat guess = (low + high) / Rat(2);
    CutOutcome cut = density_cut(g, anchored, guess);
    if (cut.improvable) {
      low_set = std::move(cut.side);
      low = density(g, low_set);
    } else {
      high = guess;
    }
  }
  CutOutcome final_cut = density_cut(g, anchored, low);
  if (final_cut.improvable || final_cut.side.empty()) {
    throw std::logic_error("density search closed on a non-optimal value");
  }
  Rat value = density(g, final_cut.side);
  if (value != low) throw std::logic_error("maximal optimum density mismatch");
  Witness w = make_witness(widen(final_cut.side));
  w.claimed_value = value;
  return SolveResult{std::move(w), value, method, Guarantee::Exact};
}

}  // namespace

SolveResult densest_subgraph_exact(const Graph& g) {
  return densest_core(g, {}, Method::Flow);
}

SolveResult anchored_densest(const Graph& g, std::span<const int> anchors) {
  return densest_core(g, anchors, Method::AnchoredFlow);
}

SolveResult dalks_exact_xp(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1 || k > g.n) throw std::invalid_argument("size threshold out of range");
  if (binomial(BigInt(g.n), static_cast<unsigned>(k)) > BigInt(budget)) {
    throw budget_exceeded("anchored subset search exceeds the work budget");
  }
  // Every optimal set of size >= k contains some k-subset, so anchoring all
  // k-subsets and taking the best anchored optimum is exact.  The incumbent
  // bound lets most subsets be dismissed with a single cut computation.
  std::vector<int> all = all_vertices(g);
  Rat best_value = density(g, all);
  Witness best = make_witness(widen(all));
  auto anchored = std::vector<char>();
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    anchored = anchor_flags(g, comb);
    if (g.m() > 0 && density_cut(g, anchored, best_value).improvable) {
      SolveResult improved = densest_core(g, comb, Method::SubsetSearch);
      if (improved.value > best_value) {
        best_value = improved.value;
        best = std::move(improved.witness);
      }
    }
    // Advance to the next k-combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == g.n - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  best.claimed_value = best_value;
  return SolveResult{std::move(best), best_value, Method::SubsetSearch, Guarantee::Exact};
}

SolveResult dalks_2approx(const Graph& g, int k) {
  if (k < 1 || k > g.n) throw std::invalid_argument("size threshold out of range");
  std::vector<char> taken(static_cast<std::size_t>(g.n), 0);
  std::vector<int> collected;
  while (static_cast<int>(collected.size()) < k) {
    std::vector<int> alive;
    for (int v = 0; v < g.n; ++v) {
      if (!taken[static_cast<std::size_t>(v)]) alive.push_back(v);
    }
    Graph sub = induced_subgraph(g, alive);
    SolveResult round = densest_subgraph_exact(sub);
    for (std::int64_t local : round.witness.vertices) {
      int original = alive[static_cast<std::size_t>(local)];
      taken[static_cast<std::size_t>(original)] = 1;
      collected.push_back(original);
    }
  }
  std::sort(collected.begin(), collected.end());
  Rat value = density(g, collected);
  Witness w = make_witness(widen(collected));
  w.claimed_value = value;
  return SolveResult{std::move(w), value, Method::Extraction, Guarantee::Factor2};
}

SolveResult dalks_3approx_peel(const Graph& g, int k) {
  if (k < 1 || k > g.n) throw std::invalid_argument("size threshold out of range");
  // Peel minimum-degree vertices (ties: smallest index) and remember every
  // suffix's edge count; the densest suffix of size >= k is the answer.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<std::int64_t> deg = degrees(g);
  std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
  std::vector<int> order;
  std::int64_t edges_left = g.m();
  std::vector<std::int64_t> suffix_edges(static_cast<std::size_t>(g.n));
  for (int step = 0; step < g.n; ++step) {
    suffix_edges[static_cast<std::size_t>(step)] = edges_left;
    int pick = -1;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    }
    order.push_back(pick);
    alive[static_cast<std::size_t>(pick)] = 0;
    edges_left -= deg[static_cast<std::size_t>(pick)];
    for (int u : adj[static_cast<std::size_t>(pick)]) {
      if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
  }
  int best_start = -1;
  Rat best_value(0);
  for (int start = 0; start + k <= g.n; ++start) {
    Rat value(BigInt(suffix_edges[static_cast<std::size_t>(start)]), BigInt(g.n - start));
    if (best_start < 0 || value > best_value) {
      best_start = start;
      best_value = value;
    }
  }
  std::vector<int> suffix(order.begin() + best_start, order.end());
  std::sort(suffix.begin(), suffix.end());
  Witness w = make_witness(widen(suffix));
  w.claimed_value = best_value;
  return SolveResult{std::move(w), best_value, Method::Peeling, Guarantee::Factor3};
}

namespace {

// Greedy gain prefix: with subset classes sorted by decreasing per-copy
// gain, the best total gain of r right-side copies is a prefix sum.
struct GainPrefix {
  std::vector<std::int64_t> copies;  // cumulative copy counts
  std::vector<std::int64_t> gain;    // cumulative gains

  std::int64_t total_copies() const { return copies.back(); }

  std::int64_t best(std::int64_t r, const std::vector<std::int64_t>& class_gain,
                    const std::vector<std::size_t>& order) const {
    auto it = std::upper_bound(copies.begin(), copies.end(), r);
    std::size_t idx = static_cast<std::size_t>(it - copies.begin()) - 1;
    std::int64_t partial = 0;
    if (idx < order.size()) partial = (r - copies[idx]) * class_gain[order[idx]];
    return gain[idx] + partial;
  }
};

bool ratio_improves(std::int64_t edges, std::int64_t size, std::int64_t best_edges,
                    std::int64_t best_size) {
  if (best_size == 0) return true;
  return static_cast<__int128>(edges) * best_size > static_cast<__int128>(best_edges) * size;
}

}  // namespace

Rat dalks_exact_structured(const GadgetShape& s, std::int64_t k, std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("size threshold must be positive");
  BigInt vertex_total = gadget_vertex_total(s);
  if (BigInt(k) > vertex_total) throw std::invalid_argument("size threshold exceeds vertex count");
  if (vertex_total > std::numeric_limits<std::int64_t>::max() ||
      gadget_edge_total(s) > std::numeric_limits<std::int64_t>::max()) {
    throw budget_exceeded("gadget expansion too large for exact structured search");
  }
  BigInt left_space = 1;
  for (const auto& e : s.elements) {
    left_space *= BigInt(e.multiplicity) + 1;
    if (left_space > BigInt(budget)) {
      throw budget_exceeded("left-side enumeration exceeds the work budget");
    }
  }
  const std::int64_t x = s.clique_size;
  const std::size_t elem_count = s.elements.size();
  const std::size_t subset_count = s.subsets.size();
  std::int64_t right_total = 0;
  for (const auto& sub : s.subsets) right_total += sub.multiplicity;

  std::int64_t best_edges = 0;
  std::int64_t best_size = 0;
  std::vector<std::int64_t> counts(elem_count, 0);
  std::vector<std::int64_t> class_gain(subset_count, 0);
  std::vector<std::size_t> order(subset_count);
  GainPrefix prefix;
  prefix.copies.resize(subset_count + 1);
  prefix.gain.resize(subset_count + 1);

  for (;;) {
    std::int64_t left = 0;
    for (std::int64_t c : counts) left += c;
    for (std::size_t j = 0; j < subset_count; ++j) {
      std::int64_t gain = 0;
      for (int id : s.subsets[j].members) gain += counts[static_cast<std::size_t>(id)];
      class_gain[j] = gain;
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (class_gain[a] != class_gain[b]) return class_gain[a] > class_gain[b];
      return a < b;
    });
    prefix.copies[0] = 0;
    prefix.gain[0] = 0;
    for (std::size_t i = 0; i < subset_count; ++i) {
      prefix.copies[i + 1] = prefix.copies[i] + s.subsets[order[i]].multiplicity;
      prefix.gain[i + 1] = prefix.gain[i] + s.subsets[order[i]].multiplicity * class_gain[order[i]];
    }

    auto consider = [&](std::int64_t y, std::int64_t r) {
      if (y < 0 || y > x || r < 0 || r > right_total) return;
      std::int64_t size = y + left + r;
      if (size < k || size == 0) return;
      std::int64_t edges = y * (y - 1) / 2 + prefix.best(r, class_gain, order);
      if (ratio_improves(edges, size, best_edges, best_size)) {
        best_edges = edges;
        best_size = size;
      }
    };

    // With the right-side total fixed, the clique share is optimal at an
    // endpoint; with the clique share fixed, the gain prefix is piecewise
    // linear in the right-side total, so class boundaries suffice.  The
    // remaining regime is exact-size solutions, swept directly.
    for (std::size_t i = 0; i <= subset_count; ++i) {
      std::int64_t r = prefix.copies[i];
      consider(std::max<std::int64_t>(0, k - left - r), r);
      consider(x, r);
    }
    if (k - left >= 0) {
      std::int64_t y_min = std::max<std::int64_t>(0, k - left - right_total);
      std::int64_t y_max = std::min<std::int64_t>(x, k - left);
      for (std::int64_t y = y_min; y <= y_max; ++y) consider(y, k - left - y);
    }

    // Odometer step over element-class counts.
    std::size_t pos = 0;
    while (pos < elem_count) {
      if (counts[pos] < s.elements[pos].multiplicity) {
        ++counts[pos];
        break;
      }
      counts[pos] = 0;
      ++pos;
    }
    if (pos == elem_count) break;
  }
  if (best_size == 0) throw std::logic_error("structured search found no feasible set");
  return Rat(BigInt(best_edges), BigInt(best_size));
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Flow: return "flow";
    case Method::AnchoredFlow: return "anchored-flow";
    case Method::SubsetSearch: return "subset-search";
    case Method::Extraction: return "extraction";
    case Method::Peeling: return "peeling";
    case Method::Structured: return "structured";
  }
  return "unknown";
}

std::string guarantee_name(Guarantee g) {
  switch (g) {
    case Guarantee::Exact: return "exact";
    case Guarantee::Factor2: return "factor-2";
    case Guarantee::Factor3: return "factor-3";
  }
  return "unknown";
}

}  // namespace dslab
