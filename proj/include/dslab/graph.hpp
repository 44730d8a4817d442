// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

// Simple undirected graph in canonical form: every edge is stored once as
// (u, v) with u < v, the edge list is sorted lexicographically, and there
// are no self-loops or duplicates.  Construct through make_graph so the
// invariants always hold.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::int64_t m() const { return static_cast<std::int64_t>(edges.size()); }
};

// Validates and canonicalizes.  Endpoint order within an edge is free, but
// self-loops, duplicate edges, and out-of-range endpoints are rejected.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Degree of every vertex.
std::vector<std::int64_t> degrees(const Graph& g);

// Adjacency sets as bit rows, for fast membership tests.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(const Graph& g);
  bool test(int u, int v) const {
    return (words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(int u) const {
    return {words_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }
  std::size_t stride() const { return stride_; }

 private:
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

// Number of edges with both endpoints in the set.  The set must contain
// valid, distinct vertices.
std::int64_t edges_within(const Graph& g, std::span<const int> vertices);

// Induced subgraph on the given vertices, relabelled 0..|vertices|-1 in the
// order obtained after sorting the input ascending.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Disjoint union; vertices of b are shifted by a.n.
Graph disjoint_union(const Graph& a, const Graph& b);

// Exact density |E(G[W])| / |W|.  Throws on an empty or invalid W.
Rat density(const Graph& g, std::span<const int> vertices);

// Serialization: first line "n m", then one line "u v" per edge in canonical
// order.  The parser additionally accepts blank lines and '#' comments.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Small named families used throughout the test rigs and the generator CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace dslab
