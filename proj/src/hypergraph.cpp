// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dslab/io_util.hpp"

namespace dslab {

UniformHypergraph make_hypergraph(int n, int t, std::vector<std::vector<int>> subsets) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (t < 1) throw std::invalid_argument("uniformity must be at least 1");
  for (auto& subset : subsets) {
    if (static_cast<int>(subset.size()) != t) {
      throw std::invalid_argument("subset size differs from uniformity");
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
      throw std::invalid_argument("repeated element within a subset");
    }
    if (subset.front() < 0 || subset.back() >= n) {
      throw std::invalid_argument("subset element out of range");
    }
  }
  std::sort(subsets.begin(), subsets.end());
  if (std::adjacent_find(subsets.begin(), subsets.end()) != subsets.end()) {
    throw std::invalid_argument("duplicate subset");
  }
  return UniformHypergraph{n, t, std::move(subsets)};
}

std::int64_t subsets_within(const UniformHypergraph& h, std::span<const int> vertices) {
  std::vector<char> in_set(static_cast<std::size_t>(h.n), 0);
  for (int v : vertices) {
    if (v < 0 || v >= h.n) throw std::invalid_argument("vertex out of range in set");
    if (in_set[static_cast<std::size_t>(v)]) throw std::invalid_argument("duplicate vertex in set");
    in_set[static_cast<std::size_t>(v)] = 1;
  }
  std::int64_t count = 0;
  for (const auto& subset : h.subsets) {
    bool inside = true;
    for (int v : subset) {
      if (!in_set[static_cast<std::size_t>(v)]) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
  }
  return count;
}

Rat hypergraph_density(const UniformHypergraph& h, std::span<const int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("density of empty vertex set");
  return Rat(BigInt(subsets_within(h, vertices)), BigInt(vertices.size()));
}

std::string serialize_hypergraph(const UniformHypergraph& h) {
  std::ostringstream out;
  out << h.n << ' ' << h.subsets.size() << ' ' << h.t << '\n';
  for (const auto& subset : h.subsets) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i > 0) out << ' ';
      out << subset[i];
    }
    out << '\n';
  }
  return out.str();
}

UniformHypergraph parse_hypergraph(std::string_view text) {
  LineReader reader(text);
  std::istringstream header(reader.next_line("hypergraph header"));
  long long n = 0;
  long long s = 0;
  long long t = 0;
  if (!(header >> n >> s >> t) || !at_line_end(header)) {
    throw std::invalid_argument("malformed hypergraph header; expected \"n s t\"");
  }
  if (n < 0 || s < 0 || t < 1) throw std::invalid_argument("bad hypergraph header field");
  std::vector<std::vector<int>> subsets;
  subsets.reserve(static_cast<std::size_t>(s));
  for (long long i = 0; i < s; ++i) {
    std::istringstream line(reader.next_line("subset"));
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(t));
    long long v = 0;
    for (long long j = 0; j < t; ++j) {
      if (!(line >> v)) throw std::invalid_argument("malformed subset line");
      subset.push_back(static_cast<int>(v));
    }
    if (!at_line_end(line)) throw std::invalid_argument("trailing tokens on subset line");
    subsets.push_back(std::move(subset));
  }
  reader.expect_end("hypergraph");
  return make_hypergraph(static_cast<int>(n), static_cast<int>(t), std::move(subsets));
}

UniformHypergraph load_hypergraph(const std::string& path) {
  return parse_hypergraph(read_text_file(path));
}

void save_hypergraph(const UniformHypergraph& h, const std::string& path) {
  write_text_file(path, serialize_hypergraph(h));
}

}  // namespace dslab
