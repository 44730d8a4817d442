// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

// A candidate solution: a set of vertex indices into whatever carrier the
// instance uses, plus the objective value the producer claims for it.
struct Witness {
  std::vector<std::int64_t> vertices;  // strictly increasing
  std::optional<Rat> claimed_value;

  std::int64_t size() const { return static_cast<std::int64_t>(vertices.size()); }
};

// Validates ordering and uniqueness (claimed value stays unset).
Witness make_witness(std::vector<std::int64_t> vertices);

// Serialization: first line is the size; when nonzero, a second line holds
// the ascending indices separated by single spaces.
std::string serialize_witness(const Witness& w);
Witness parse_witness(std::string_view text);
Witness load_witness(const std::string& path);
void save_witness(const Witness& w, const std::string& path);

}  // namespace dslab
