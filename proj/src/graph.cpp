// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dslab/io_util.hpp"

namespace dslab {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  return Graph{n, std::move(edges)};
}

std::vector<std::int64_t> degrees(const Graph& g) {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

AdjacencyBits::AdjacencyBits(const Graph& g)
    : stride_(static_cast<std::size_t>(g.n + 63) / 64),
      words_(static_cast<std::size_t>(g.n) * stride_, 0) {
  for (auto [u, v] : g.edges) {
    words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
    words_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
  }
}

namespace {

std::vector<int> checked_sorted_set(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate vertex in set");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.n)) {
    throw std::invalid_argument("vertex out of range in set");
  }
  return sorted;
}

}  // namespace

std::int64_t edges_within(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted = checked_sorted_set(g, vertices);
  std::vector<char> in_set(static_cast<std::size_t>(g.n), 0);
  for (int v : sorted) in_set[static_cast<std::size_t>(v)] = 1;
  std::int64_t count = 0;
  for (auto [u, v] : g.edges) {
    if (in_set[static_cast<std::size_t>(u)] && in_set[static_cast<std::size_t>(v)]) ++count;
  }
  return count;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted = checked_sorted_set(g, vertices);
  std::vector<int> label(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    label[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    int lu = label[static_cast<std::size_t>(u)];
    int lv = label[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
  }
  return make_graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges;
  edges.reserve(a.edges.size() + b.edges.size());
  for (auto [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
  return make_graph(a.n + b.n, std::move(edges));
}

Rat density(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("density of empty vertex set");
  std::int64_t e = edges_within(g, vertices);
  return Rat(BigInt(e), BigInt(vertices.size()));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::istringstream header(reader.next_line("graph header"));
  long long n = 0;
  long long m = 0;
  if (!(header >> n >> m) || !at_line_end(header)) {
    throw std::invalid_argument("malformed graph header; expected \"n m\"");
  }
  if (n < 0 || m < 0) throw std::invalid_argument("negative graph header field");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::istringstream line(reader.next_line("edge"));
    long long u = 0;
    long long v = 0;
    if (!(line >> u >> v) || !at_line_end(line)) {
      throw std::invalid_argument("malformed edge line");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  reader.expect_end("graph");
  return make_graph(static_cast<int>(n), std::move(edges));
}

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

void save_graph(const Graph& g, const std::string& path) {
  write_text_file(path, serialize_graph(g));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return make_graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return make_graph(n, std::move(edges));
}

}  // namespace dslab
