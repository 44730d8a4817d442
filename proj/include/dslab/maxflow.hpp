// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

// Dinic maximum flow with exact big-integer capacities.  Exactness matters:
// the density decision networks carry capacities scaled by rational
// denominators, and verdicts compare the flow value against an exact bound.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Adds a directed arc u -> v with the given capacity.
  void add_arc(int u, int v, BigInt capacity);

  BigInt run(int source, int sink);

  // After run(): vertices reachable from the source in the residual graph
  // (the canonical minimum cut's source side).
  std::vector<char> min_cut_source_side(int source) const;

  // After run(): complement of the vertices that can still reach the sink in
  // the residual graph.  This is the unique inclusion-maximal minimum cut's
  // source side.
  std::vector<char> max_cut_source_side(int sink) const;

 private:
  struct Arc {
    int to;
    int rev;
    BigInt cap;
  };

  bool bfs(int source, int sink);
  BigInt dfs(int v, int sink, const BigInt& limit);

  int n_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace dslab
