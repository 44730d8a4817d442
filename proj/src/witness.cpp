// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dslab/io_util.hpp"

namespace dslab {

Witness make_witness(std::vector<std::int64_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("duplicate vertex in witness");
  }
  if (!vertices.empty() && vertices.front() < 0) {
    throw std::invalid_argument("negative vertex in witness");
  }
  return Witness{std::move(vertices), std::nullopt};
}

std::string serialize_witness(const Witness& w) {
  std::ostringstream out;
  out << w.vertices.size() << '\n';
  if (!w.vertices.empty()) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      if (i > 0) out << ' ';
      out << w.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

Witness parse_witness(std::string_view text) {
  LineReader reader(text);
  std::istringstream header(reader.next_line("witness size"));
  long long size = 0;
  if (!(header >> size) || !at_line_end(header) || size < 0) {
    throw std::invalid_argument("malformed witness size line");
  }
  std::vector<std::int64_t> vertices;
  vertices.reserve(static_cast<std::size_t>(size));
  if (size > 0) {
    std::istringstream line(reader.next_line("witness vertices"));
    long long v = 0;
    for (long long i = 0; i < size; ++i) {
      if (!(line >> v)) throw std::invalid_argument("witness vertex list too short");
      vertices.push_back(v);
    }
    if (!at_line_end(line)) throw std::invalid_argument("witness vertex list too long");
  }
  reader.expect_end("witness");
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] >= vertices[i]) {
      throw std::invalid_argument("witness vertices must be strictly ascending");
    }
  }
  return make_witness(std::move(vertices));
}

Witness load_witness(const std::string& path) { return parse_witness(read_text_file(path)); }

void save_witness(const Witness& w, const std::string& path) {
  write_text_file(path, serialize_witness(w));
}

}  // namespace dslab
