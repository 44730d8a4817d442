// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "dslab/gadget.hpp"
#include "dslab/graph.hpp"
#include "dslab/hypergraph.hpp"
#include "dslab/rational.hpp"

namespace dslab {

// The six gap-problem flavors.  "Gamma" variants strengthen the soundness
// side to all sets of size up to gamma * k.
enum class ProblemKind {
  GapDks,           // graph, k, ell; params: lambda
  GapDksGamma,      // graph, k, ell; params: lambda, gamma
  PolyGapDks,       // graph, k; params: delta, t; ell = ceil(k^(t-delta))
  PolyGapDksGamma,  // graph, k; params: delta, t, gamma; ell as above
  StrongGapDksh,    // hypergraph, k, ell; params: lambda, gamma, t
  GapDalks,         // graph or gadget, k, alpha; params: lambda (gap factor)
};

struct GapParams {
  std::optional<Rat> lambda;
  std::optional<Rat> gamma;
  std::optional<Rat> eps;
  std::optional<Rat> delta;
  std::optional<int> t;
};

using Carrier = std::variant<Graph, UniformHypergraph, GadgetShape>;

// One gap-problem instance: a carrier plus the numeric promise parameters.
// DkS-style kinds carry the integer threshold `ell`; DALkS carries the
// rational threshold `alpha`.
struct GapInstance {
  ProblemKind kind = ProblemKind::GapDks;
  Carrier carrier;
  std::int64_t k = 0;
  std::optional<BigInt> ell;
  std::optional<Rat> alpha;
  GapParams params;
  bool faithful = true;
};

// Enforces the kind-specific shape: which params/threshold must be present,
// parameter ranges (lambda, gamma >= 1 except the DALkS gap factor, which
// may drop below 1; eps, delta in (0,1]; t >= 2 matching the carrier), and
// the derived PolyGapDkS threshold.  Throws std::invalid_argument.
void validate_instance(const GapInstance& inst);

std::string kind_name(ProblemKind kind);
ProblemKind kind_from_name(const std::string& name);

const Graph& carrier_graph(const GapInstance& inst);
const UniformHypergraph& carrier_hypergraph(const GapInstance& inst);
const GadgetShape& carrier_gadget(const GapInstance& inst);

// Number of vertices/elements a witness may index into.
std::int64_t carrier_index_count(const GapInstance& inst);

// PolyGapDkS threshold ceil(k^(t - delta)) in exact integers.
BigInt polydks_threshold(std::int64_t k, int t, const Rat& delta);

// Manifest JSON (fixed key order, two-space indent, trailing newline):
// kind, k, threshold, params, faithful, carrier_type, carrier path.
std::string serialize_manifest(const GapInstance& inst, const std::string& carrier_path);

// Writes the carrier file and its manifest; the manifest stores the carrier
// path as given.
void write_instance(const GapInstance& inst, const std::string& manifest_path,
                    const std::string& carrier_path);

// Parses a manifest and loads the carrier (relative paths resolve against
// the manifest's directory).
GapInstance read_instance(const std::string& manifest_path);

// Parses a manifest without touching the filesystem; returns the carrier
// path through the out-parameter and leaves the carrier default-constructed.
GapInstance parse_manifest(std::string_view text, std::string& carrier_path_out);

std::string serialize_carrier(const GapInstance& inst);

}  // namespace dslab
