// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "dslab/graph.hpp"
#include "dslab/rational.hpp"

namespace dslab {

// Deterministic random source: a fixed engine plus draw helpers whose
// results are platform-independent (raw 64-bit draws only; no distribution
// classes, whose outputs vary across standard libraries).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform value in [0, bound) via rejection sampling; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // True with probability exactly p (0 <= p <= 1), using a 64-bit threshold.
  bool bernoulli(const Rat& p);

 private:
  std::mt19937_64 engine_;
};

// Erdos–Renyi G(n, p): each pair, visited in lexicographic order, is kept
// independently with probability p.
Graph gen_gnp(int n, const Rat& p, std::uint64_t seed);

// G(n, p) with a clique forced on vertices 0..k-1.
Graph gen_planted_clique(int n, const Rat& p, int k, std::uint64_t seed);

// G(n, p) with pairs inside 0..k-1 upgraded to probability (1 + p) / 2.
Graph gen_planted_dense(int n, const Rat& p, int k, std::uint64_t seed);

}  // namespace dslab
