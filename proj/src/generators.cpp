// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/generators.hpp"

#include <stdexcept>

namespace dslab {

std::uint64_t DetRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  // Rejection sampling over the largest multiple of bound below 2^64 keeps
  // the draw exactly uniform.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t raw = next_u64();
    if (raw < limit || limit == 0) return raw % bound;
  }
}

bool DetRng::bernoulli(const Rat& p) {
  if (p < Rat(0) || p > Rat(1)) throw std::invalid_argument("probability out of range");
  if (p == Rat(1)) {
    next_u64();  // consume a draw so the stream does not depend on p
    return true;
  }
  // Accept when the draw falls below floor(p * 2^64); exact for any p whose
  // denominator divides 2^64 and within 2^-64 otherwise.
  BigInt threshold = (p.num() << 64) / p.den();
  std::uint64_t raw = next_u64();
  return BigInt(raw) < threshold;
}

namespace {

Graph gen_two_level(int n, const Rat& p_out, const Rat& p_in, int k, bool force_clique,
                    std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (k < 0 || k > n) throw std::invalid_argument("planted block size out of range");
  DetRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool inside = v < k;
      bool keep;
      if (inside && force_clique) {
        rng.next_u64();  // keep the stream aligned with the plain G(n, p) draw
        keep = true;
      } else {
        keep = rng.bernoulli(inside ? p_in : p_out);
      }
      if (keep) edges.emplace_back(u, v);
    }
  }
  return make_graph(n, std::move(edges));
}

}  // namespace

Graph gen_gnp(int n, const Rat& p, std::uint64_t seed) {
  return gen_two_level(n, p, p, 0, false, seed);
}

Graph gen_planted_clique(int n, const Rat& p, int k, std::uint64_t seed) {
  return gen_two_level(n, p, p, k, true, seed);
}

Graph gen_planted_dense(int n, const Rat& p, int k, std::uint64_t seed) {
  Rat boosted = (Rat(1) + p) / Rat(2);
  return gen_two_level(n, p, boosted, k, false, seed);
}

}  // namespace dslab
