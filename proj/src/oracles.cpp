// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>

namespace dslab {

std::uint64_t default_budget() {
  static const std::uint64_t cached = [] {
    if (const char* env = std::getenv("DSLAB_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && parsed > 0) return static_cast<std::uint64_t>(parsed);
    }
    return std::uint64_t{1} << 26;
  }();
  return cached;
}

namespace {

// Visits every subset of [0, n) by Gray code, maintaining the induced edge
// count incrementally.  The visitor receives (mask, edge_count, size).
template <typename Visit>
void sweep_subsets(const Graph& g, std::uint64_t budget, Visit&& visit) {
  const int n = g.n;
  if (n > 63 || (std::uint64_t{1} << n) > budget) {
    throw budget_exceeded("subset sweep over " + std::to_string(n) +
                          " vertices exceeds the work budget");
  }
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  std::uint64_t mask = 0;
  std::int64_t e = 0;
  int size = 0;
  visit(mask, e, size);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int v = std::countr_zero(i);
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t rest = mask & ~bit;
    auto delta = static_cast<std::int64_t>(std::popcount(adj[static_cast<std::size_t>(v)] & rest));
    if (mask & bit) {
      e -= delta;
      --size;
    } else {
      e += delta;
      ++size;
    }
    mask ^= bit;
    visit(mask, e, size);
  }
}

// True when the ascending vertex list of `a` precedes that of `b`
// lexicographically.  The owner of the lowest differing bit has the smaller
// leading element at the first difference.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<std::int64_t> mask_to_vertices(std::uint64_t mask) {
  std::vector<std::int64_t> out;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::int64_t brute_edge_max(const Graph& g, int k, SizeMode mode, std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("negative size bound");
  if ((mode == SizeMode::Exact || mode == SizeMode::AtLeast) && k > g.n) {
    throw std::invalid_argument("no subset of the required size exists");
  }
  std::vector<std::int64_t> best(static_cast<std::size_t>(g.n) + 1, -1);
  sweep_subsets(g, budget, [&](std::uint64_t, std::int64_t e, int size) {
    best[static_cast<std::size_t>(size)] = std::max(best[static_cast<std::size_t>(size)], e);
  });
  std::int64_t result = -1;
  switch (mode) {
    case SizeMode::Exact:
      result = best[static_cast<std::size_t>(k)];
      break;
    case SizeMode::AtMost:
      for (int s = 0; s <= std::min(k, g.n); ++s) {
        result = std::max(result, best[static_cast<std::size_t>(s)]);
      }
      break;
    case SizeMode::AtLeast:
      for (int s = k; s <= g.n; ++s) {
        result = std::max(result, best[static_cast<std::size_t>(s)]);
      }
      break;
  }
  return result;
}

DensityOptimum brute_den_atleast(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1 || k > g.n) throw std::invalid_argument("size threshold out of range");
  bool found = false;
  std::int64_t best_e = 0;
  int best_size = 0;
  std::uint64_t best_mask = 0;
  sweep_subsets(g, budget, [&](std::uint64_t mask, std::int64_t e, int size) {
    if (size < k) return;
    if (!found) {
      found = true;
      best_e = e;
      best_size = size;
      best_mask = mask;
      return;
    }
    // Compare e/size against best_e/best_size by cross-multiplication.
    std::int64_t lhs = e * best_size;
    std::int64_t rhs = best_e * size;
    bool better = lhs > rhs;
    if (lhs == rhs) {
      if (size < best_size) {
        better = true;
      } else if (size == best_size && lex_less(mask, best_mask)) {
        better = true;
      }
    }
    if (better) {
      best_e = e;
      best_size = size;
      best_mask = mask;
    }
  });
  DensityOptimum out{Rat(BigInt(best_e), BigInt(best_size)), make_witness(mask_to_vertices(best_mask))};
  out.witness.claimed_value = out.value;
  return out;
}

namespace {

class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, int t, std::uint64_t budget)
      : adj_(g), n_(g.n), t_(t), budget_(budget) {
    stride_ = adj_.stride();
    cand_stack_.assign(static_cast<std::size_t>(t) * stride_, 0);
    cur_.reserve(static_cast<std::size_t>(t));
  }

  template <typename Emit>
  void run(Emit&& emit) {
    if (t_ < 1) throw std::invalid_argument("clique size must be at least 1");
    if (n_ == 0) return;
    // Level 0 candidates: every vertex.
    std::vector<std::uint64_t> all(stride_, 0);
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    descend(all.data(), 0, emit);
  }

 private:
  template <typename Emit>
  void descend(const std::uint64_t* cand, int depth, Emit& emit) {
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t word = cand[w];
      while (word != 0) {
        int v = static_cast<int>(w * 64) + std::countr_zero(word);
        word &= word - 1;
        if (++steps_ > budget_) {
          throw budget_exceeded("clique enumeration exceeds the work budget");
        }
        cur_.push_back(v);
        if (depth + 1 == t_) {
          emit(cur_);
        } else {
          std::uint64_t* next = cand_stack_.data() + static_cast<std::size_t>(depth) * stride_;
          auto row = adj_.row(v);
          bool nonempty = false;
          for (std::size_t i = 0; i < stride_; ++i) {
            std::uint64_t masked = cand[i] & row[i];
            // Keep only vertices greater than v so each clique appears once,
            // ascending.
            if (i * 64 < static_cast<std::size_t>(v) + 1) {
              std::size_t cut = static_cast<std::size_t>(v) + 1 - i * 64;
              masked = cut >= 64 ? 0 : masked & (~std::uint64_t{0} << cut);
            }
            next[i] = masked;
            nonempty |= masked != 0;
          }
          if (nonempty) descend(next, depth + 1, emit);
        }
        cur_.pop_back();
      }
    }
  }

  AdjacencyBits adj_;
  int n_;
  int t_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::size_t stride_;
  std::vector<std::uint64_t> cand_stack_;
  std::vector<int> cur_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int t, std::uint64_t budget) {
  std::vector<std::vector<int>> out;
  CliqueWalker walker(g, t, budget);
  walker.run([&](const std::vector<int>& clique) { out.push_back(clique); });
  return out;
}

BigInt count_cliques_in(const Graph& g, std::span<const int> vertices, int t,
                        std::uint64_t budget) {
  Graph sub = induced_subgraph(g, vertices);
  std::uint64_t count = 0;
  CliqueWalker walker(sub, t, budget);
  walker.run([&](const std::vector<int>&) { ++count; });
  return BigInt(count);
}

}  // namespace dslab
