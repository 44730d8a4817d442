// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dslab/graph.hpp"
#include "dslab/rational.hpp"

namespace dslab {

// Compressed description of a clique-plus-incidence graph: a clique on
// `clique_size` fresh vertices, disjoint from a bipartite incidence graph
// whose left side carries element classes (each replicated `multiplicity`
// times) and whose right side carries subset classes (each replicated
// `multiplicity` times, every copy adjacent to every copy of its members).
// Copies of a class are mutually nonadjacent; all structure lives in the
// clique and the element-subset incidences.
struct GadgetShape {
  struct ElementClass {
    std::int64_t multiplicity = 0;
  };
  struct SubsetClass {
    std::int64_t multiplicity = 0;
    std::vector<int> members;  // ascending element-class ids
  };

  std::int64_t clique_size = 0;
  std::vector<ElementClass> elements;
  std::vector<SubsetClass> subsets;
};

// Validates multiplicities and member ids, sorting members ascending.
GadgetShape make_gadget(std::int64_t clique_size, std::vector<std::int64_t> element_mults,
                        std::vector<GadgetShape::SubsetClass> subsets);

// Expanded totals (exact, without materializing anything).
BigInt gadget_vertex_total(const GadgetShape& s);
BigInt gadget_edge_total(const GadgetShape& s);

// Vertex layout of the expansion, fixing the canonical index of every copy:
// clique vertices first, then element copies (class-major, copy-minor), then
// subset copies (class-major, copy-minor).
BigInt gadget_element_offset(const GadgetShape& s, int element_class);
BigInt gadget_subset_offset(const GadgetShape& s, int subset_class);

// Streams every edge of the expansion in canonical (lexicographic) order.
// Requires the expansion to fit 32-bit vertex ids.
void gadget_for_each_edge(const GadgetShape& s,
                          const std::function<void(std::int64_t, std::int64_t)>& visit);

// Materializes the expansion as an explicit Graph.  Requires the vertex and
// edge totals to be materializable (throws budget_exceeded otherwise).
Graph expand_gadget(const GadgetShape& s, std::uint64_t budget);

// Serialization: line 1 "clique_size E S"; then E lines "id multiplicity";
// then S lines "id multiplicity member-ids...".  Ids are sequential from 0.
std::string serialize_gadget(const GadgetShape& s);
GadgetShape parse_gadget(std::string_view text);
GadgetShape load_gadget(const std::string& path);
void save_gadget(const GadgetShape& s, const std::string& path);

}  // namespace dslab
