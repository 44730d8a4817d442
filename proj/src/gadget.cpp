// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/gadget.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dslab/io_util.hpp"
#include "dslab/oracles.hpp"

namespace dslab {

GadgetShape make_gadget(std::int64_t clique_size, std::vector<std::int64_t> element_mults,
                        std::vector<GadgetShape::SubsetClass> subsets) {
  if (clique_size < 0) throw std::invalid_argument("negative clique size");
  GadgetShape s;
  s.clique_size = clique_size;
  s.elements.reserve(element_mults.size());
  for (std::int64_t mult : element_mults) {
    if (mult < 0) throw std::invalid_argument("negative element multiplicity");
    s.elements.push_back(GadgetShape::ElementClass{mult});
  }
  for (auto& subset : subsets) {
    if (subset.multiplicity < 0) throw std::invalid_argument("negative subset multiplicity");
    std::sort(subset.members.begin(), subset.members.end());
    if (std::adjacent_find(subset.members.begin(), subset.members.end()) != subset.members.end()) {
      throw std::invalid_argument("repeated member in subset class");
    }
    for (int id : subset.members) {
      if (id < 0 || static_cast<std::size_t>(id) >= s.elements.size()) {
        throw std::invalid_argument("subset member out of range");
      }
    }
  }
  s.subsets = std::move(subsets);
  return s;
}

BigInt gadget_vertex_total(const GadgetShape& s) {
  BigInt total = s.clique_size;
  for (const auto& e : s.elements) total += e.multiplicity;
  for (const auto& sub : s.subsets) total += sub.multiplicity;
  return total;
}

BigInt gadget_edge_total(const GadgetShape& s) {
  BigInt total = BigInt(s.clique_size) * (s.clique_size - 1) / 2;
  for (const auto& sub : s.subsets) {
    BigInt reach = 0;
    for (int id : sub.members) reach += s.elements[static_cast<std::size_t>(id)].multiplicity;
    total += BigInt(sub.multiplicity) * reach;
  }
  return total;
}

BigInt gadget_element_offset(const GadgetShape& s, int element_class) {
  if (element_class < 0 || static_cast<std::size_t>(element_class) >= s.elements.size()) {
    throw std::invalid_argument("element class out of range");
  }
  BigInt offset = s.clique_size;
  for (int i = 0; i < element_class; ++i) offset += s.elements[static_cast<std::size_t>(i)].multiplicity;
  return offset;
}

BigInt gadget_subset_offset(const GadgetShape& s, int subset_class) {
  if (subset_class < 0 || static_cast<std::size_t>(subset_class) >= s.subsets.size()) {
    throw std::invalid_argument("subset class out of range");
  }
  BigInt offset = s.clique_size;
  for (const auto& e : s.elements) offset += e.multiplicity;
  for (int i = 0; i < subset_class; ++i) offset += s.subsets[static_cast<std::size_t>(i)].multiplicity;
  return offset;
}

void gadget_for_each_edge(const GadgetShape& s,
                          const std::function<void(std::int64_t, std::int64_t)>& visit) {
  BigInt vertex_total = gadget_vertex_total(s);
  if (vertex_total > std::numeric_limits<std::int64_t>::max()) {
    throw budget_exceeded("gadget expansion does not fit 64-bit vertex ids");
  }
  const std::int64_t x = s.clique_size;
  for (std::int64_t i = 0; i < x; ++i) {
    for (std::int64_t j = i + 1; j < x; ++j) visit(i, j);
  }
  // Element copies come before all subset copies, so incidence edges sort by
  // element copy first.  Invert the membership map to iterate that way.
  std::vector<std::vector<int>> containing(s.elements.size());
  for (std::size_t j = 0; j < s.subsets.size(); ++j) {
    for (int id : s.subsets[j].members) {
      containing[static_cast<std::size_t>(id)].push_back(static_cast<int>(j));
    }
  }
  std::vector<std::int64_t> elem_offset(s.elements.size());
  std::vector<std::int64_t> subset_offset(s.subsets.size());
  std::int64_t cursor = x;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    elem_offset[i] = cursor;
    cursor += s.elements[i].multiplicity;
  }
  for (std::size_t j = 0; j < s.subsets.size(); ++j) {
    subset_offset[j] = cursor;
    cursor += s.subsets[j].multiplicity;
  }
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    for (std::int64_t copy = 0; copy < s.elements[i].multiplicity; ++copy) {
      std::int64_t u = elem_offset[i] + copy;
      for (int j : containing[i]) {
        for (std::int64_t sc = 0; sc < s.subsets[static_cast<std::size_t>(j)].multiplicity; ++sc) {
          visit(u, subset_offset[static_cast<std::size_t>(j)] + sc);
        }
      }
    }
  }
}

Graph expand_gadget(const GadgetShape& s, std::uint64_t budget) {
  BigInt vertices = gadget_vertex_total(s);
  BigInt edges = gadget_edge_total(s);
  if (vertices > (std::int64_t{1} << 31) - 1 || edges > BigInt(budget)) {
    throw budget_exceeded("gadget expansion exceeds the materialization budget");
  }
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(static_cast<std::size_t>(edges));
  gadget_for_each_edge(s, [&](std::int64_t u, std::int64_t v) {
    edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
  });
  return make_graph(static_cast<int>(vertices), std::move(edge_list));
}

std::string serialize_gadget(const GadgetShape& s) {
  std::ostringstream out;
  out << s.clique_size << ' ' << s.elements.size() << ' ' << s.subsets.size() << '\n';
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    out << i << ' ' << s.elements[i].multiplicity << '\n';
  }
  for (std::size_t j = 0; j < s.subsets.size(); ++j) {
    out << j << ' ' << s.subsets[j].multiplicity;
    for (int id : s.subsets[j].members) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

GadgetShape parse_gadget(std::string_view text) {
  LineReader reader(text);
  std::istringstream header(reader.next_line("gadget header"));
  long long clique = 0;
  long long elem_count = 0;
  long long subset_count = 0;
  if (!(header >> clique >> elem_count >> subset_count) || !at_line_end(header)) {
    throw std::invalid_argument("malformed gadget header");
  }
  if (elem_count < 0 || subset_count < 0) throw std::invalid_argument("negative gadget class count");
  std::vector<std::int64_t> element_mults;
  element_mults.reserve(static_cast<std::size_t>(elem_count));
  for (long long i = 0; i < elem_count; ++i) {
    std::istringstream line(reader.next_line("element class"));
    long long id = 0;
    long long mult = 0;
    if (!(line >> id >> mult) || !at_line_end(line) || id != i) {
      throw std::invalid_argument("malformed element class line");
    }
    element_mults.push_back(mult);
  }
  std::vector<GadgetShape::SubsetClass> subsets;
  subsets.reserve(static_cast<std::size_t>(subset_count));
  for (long long j = 0; j < subset_count; ++j) {
    std::istringstream line(reader.next_line("subset class"));
    long long id = 0;
    long long mult = 0;
    if (!(line >> id >> mult) || id != j) throw std::invalid_argument("malformed subset class line");
    GadgetShape::SubsetClass subset;
    subset.multiplicity = mult;
    long long member = 0;
    while (line >> member) subset.members.push_back(static_cast<int>(member));
    subsets.push_back(std::move(subset));
  }
  reader.expect_end("gadget");
  return make_gadget(clique, std::move(element_mults), std::move(subsets));
}

GadgetShape load_gadget(const std::string& path) { return parse_gadget(read_text_file(path)); }

void save_gadget(const GadgetShape& s, const std::string& path) {
  write_text_file(path, serialize_gadget(s));
}

}  // namespace dslab
