// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/instance.hpp"

#include <filesystem>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "dslab/io_util.hpp"

namespace dslab {

namespace {

using OrderedJson = nlohmann::ordered_json;

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

void check_range(const GapParams& p) {
  if (p.gamma && *p.gamma < Rat(1)) throw std::invalid_argument("gamma must be at least 1");
  if (p.eps && (*p.eps <= Rat(0) || *p.eps > Rat(1))) {
    throw std::invalid_argument("eps must lie in (0, 1]");
  }
  if (p.delta && (*p.delta <= Rat(0) || *p.delta > Rat(1))) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  if (p.t && *p.t < 2) throw std::invalid_argument("t must be at least 2");
}

}  // namespace

BigInt polydks_threshold(std::int64_t k, int t, const Rat& delta) {
  // ceil(k^(t - delta)) with delta = p/q: smallest z with z^q >= k^(tq - p).
  BigInt p = delta.num();
  BigInt q = delta.den();
  BigInt exponent = BigInt(t) * q - p;
  if (exponent < 0) throw std::invalid_argument("t - delta must be nonnegative");
  return ceil_rational_power(BigInt(k), static_cast<unsigned>(exponent.convert_to<std::int64_t>()),
                             static_cast<unsigned>(q.convert_to<std::int64_t>()));
}

void validate_instance(const GapInstance& inst) {
  const GapParams& p = inst.params;
  check_range(p);
  require(inst.k >= 1, "k must be at least 1");
  auto need_graph = [&] { require(std::holds_alternative<Graph>(inst.carrier), "carrier must be a graph"); };
  auto need_lambda_at_least_one = [&] {
    require(p.lambda.has_value(), "lambda required");
    require(*p.lambda >= Rat(1), "lambda must be at least 1");
  };
  switch (inst.kind) {
    case ProblemKind::GapDks:
      need_graph();
      need_lambda_at_least_one();
      require(inst.ell.has_value() && !inst.alpha.has_value(), "GapDkS carries an integer threshold");
      require(*inst.ell >= 0, "threshold must be nonnegative");
      break;
    case ProblemKind::GapDksGamma:
      need_graph();
      need_lambda_at_least_one();
      require(p.gamma.has_value(), "gamma required");
      require(inst.ell.has_value() && !inst.alpha.has_value(), "GapDkS carries an integer threshold");
      require(*inst.ell >= 0, "threshold must be nonnegative");
      break;
    case ProblemKind::PolyGapDks:
    case ProblemKind::PolyGapDksGamma:
      need_graph();
      require(p.delta.has_value() && p.t.has_value(), "delta and t required");
      if (inst.kind == ProblemKind::PolyGapDksGamma) require(p.gamma.has_value(), "gamma required");
      require(inst.ell.has_value() && !inst.alpha.has_value(),
              "PolyGapDkS carries the derived integer threshold");
      require(*inst.ell == polydks_threshold(inst.k, *p.t, *p.delta),
              "stored threshold differs from ceil(k^(t - delta))");
      break;
    case ProblemKind::StrongGapDksh: {
      require(std::holds_alternative<UniformHypergraph>(inst.carrier),
              "carrier must be a hypergraph");
      need_lambda_at_least_one();
      require(p.gamma.has_value() && p.t.has_value(), "gamma and t required");
      require(std::get<UniformHypergraph>(inst.carrier).t == *p.t,
              "uniformity differs from the t parameter");
      require(inst.ell.has_value() && !inst.alpha.has_value(), "DkSH carries an integer threshold");
      require(*inst.ell >= 0, "threshold must be nonnegative");
      break;
    }
    case ProblemKind::GapDalks:
      require(!std::holds_alternative<UniformHypergraph>(inst.carrier),
              "carrier must be a graph or gadget shape");
      require(p.lambda.has_value(), "lambda required");
      // The DALkS gap factor may legitimately fall below 1 (the promise is
      // then vacuous but the instance is still well-formed).
      require(*p.lambda > Rat(0), "lambda must be positive");
      require(inst.alpha.has_value() && !inst.ell.has_value(), "DALkS carries a rational threshold");
      require(*inst.alpha >= Rat(0), "alpha must be nonnegative");
      break;
  }
  require(BigInt(inst.k) <= BigInt(carrier_index_count(inst)), "k exceeds the carrier size");
}

std::string kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::GapDks: return "gapdks";
    case ProblemKind::GapDksGamma: return "gapdks-gamma";
    case ProblemKind::PolyGapDks: return "polygapdks";
    case ProblemKind::PolyGapDksGamma: return "polygapdks-gamma";
    case ProblemKind::StrongGapDksh: return "strong-gapdksh";
    case ProblemKind::GapDalks: return "gapdalks";
  }
  throw std::invalid_argument("unknown problem kind");
}

ProblemKind kind_from_name(const std::string& name) {
  if (name == "gapdks") return ProblemKind::GapDks;
  if (name == "gapdks-gamma") return ProblemKind::GapDksGamma;
  if (name == "polygapdks") return ProblemKind::PolyGapDks;
  if (name == "polygapdks-gamma") return ProblemKind::PolyGapDksGamma;
  if (name == "strong-gapdksh") return ProblemKind::StrongGapDksh;
  if (name == "gapdalks") return ProblemKind::GapDalks;
  throw std::invalid_argument("unknown problem kind: " + name);
}

const Graph& carrier_graph(const GapInstance& inst) {
  if (const auto* g = std::get_if<Graph>(&inst.carrier)) return *g;
  throw std::invalid_argument("instance carrier is not a graph");
}

const UniformHypergraph& carrier_hypergraph(const GapInstance& inst) {
  if (const auto* h = std::get_if<UniformHypergraph>(&inst.carrier)) return *h;
  throw std::invalid_argument("instance carrier is not a hypergraph");
}

const GadgetShape& carrier_gadget(const GapInstance& inst) {
  if (const auto* s = std::get_if<GadgetShape>(&inst.carrier)) return *s;
  throw std::invalid_argument("instance carrier is not a gadget shape");
}

std::int64_t carrier_index_count(const GapInstance& inst) {
  if (const auto* g = std::get_if<Graph>(&inst.carrier)) return g->n;
  if (const auto* h = std::get_if<UniformHypergraph>(&inst.carrier)) return h->n;
  const GadgetShape& s = std::get<GadgetShape>(inst.carrier);
  BigInt total = gadget_vertex_total(s);
  if (total > std::numeric_limits<std::int64_t>::max()) {
    throw std::invalid_argument("gadget expansion exceeds 64-bit indexing");
  }
  return total.convert_to<std::int64_t>();
}

namespace {

const char* carrier_type_name(const Carrier& carrier) {
  if (std::holds_alternative<Graph>(carrier)) return "graph";
  if (std::holds_alternative<UniformHypergraph>(carrier)) return "hypergraph";
  return "gadget";
}

}  // namespace

std::string serialize_manifest(const GapInstance& inst, const std::string& carrier_path) {
  validate_instance(inst);
  OrderedJson doc;
  doc["kind"] = kind_name(inst.kind);
  doc["k"] = std::to_string(inst.k);
  doc["threshold"] = inst.ell ? Rat(*inst.ell).str() : inst.alpha->str();
  OrderedJson params = OrderedJson::object();
  if (inst.params.lambda) params["lambda"] = inst.params.lambda->str();
  if (inst.params.gamma) params["gamma"] = inst.params.gamma->str();
  if (inst.params.eps) params["eps"] = inst.params.eps->str();
  if (inst.params.delta) params["delta"] = inst.params.delta->str();
  if (inst.params.t) params["t"] = *inst.params.t;
  doc["params"] = std::move(params);
  doc["faithful"] = inst.faithful;
  doc["carrier_type"] = carrier_type_name(inst.carrier);
  doc["carrier"] = carrier_path;
  return doc.dump(2) + "\n";
}

std::string serialize_carrier(const GapInstance& inst) {
  if (const auto* g = std::get_if<Graph>(&inst.carrier)) return serialize_graph(*g);
  if (const auto* h = std::get_if<UniformHypergraph>(&inst.carrier)) return serialize_hypergraph(*h);
  return serialize_gadget(std::get<GadgetShape>(inst.carrier));
}

void write_instance(const GapInstance& inst, const std::string& manifest_path,
                    const std::string& carrier_path) {
  std::string manifest = serialize_manifest(inst, carrier_path);
  std::filesystem::path carrier_file(carrier_path);
  if (carrier_file.is_relative()) {
    carrier_file = std::filesystem::path(manifest_path).parent_path() / carrier_file;
  }
  write_text_file(carrier_file.string(), serialize_carrier(inst));
  write_text_file(manifest_path, manifest);
}

GapInstance parse_manifest(std::string_view text, std::string& carrier_path_out) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest JSON: ") + e.what());
  }
  GapInstance inst;
  try {
    inst.kind = kind_from_name(doc.at("kind").get<std::string>());
    Rat k_value = Rat::parse(doc.at("k").get<std::string>());
    if (!k_value.is_integer()) throw std::invalid_argument("k must be an integer");
    inst.k = k_value.num().convert_to<std::int64_t>();
    Rat threshold = Rat::parse(doc.at("threshold").get<std::string>());
    const OrderedJson& params = doc.at("params");
    if (params.contains("lambda")) inst.params.lambda = Rat::parse(params["lambda"].get<std::string>());
    if (params.contains("gamma")) inst.params.gamma = Rat::parse(params["gamma"].get<std::string>());
    if (params.contains("eps")) inst.params.eps = Rat::parse(params["eps"].get<std::string>());
    if (params.contains("delta")) inst.params.delta = Rat::parse(params["delta"].get<std::string>());
    if (params.contains("t")) inst.params.t = params["t"].get<int>();
    inst.faithful = doc.at("faithful").get<bool>();
    std::string carrier_type = doc.at("carrier_type").get<std::string>();
    carrier_path_out = doc.at("carrier").get<std::string>();
    if (inst.kind == ProblemKind::GapDalks) {
      inst.alpha = threshold;
      if (carrier_type != "graph" && carrier_type != "gadget") {
        throw std::invalid_argument("DALkS carrier must be graph or gadget");
      }
    } else {
      if (!threshold.is_integer()) throw std::invalid_argument("integer threshold expected");
      inst.ell = threshold.num();
      const char* expected = inst.kind == ProblemKind::StrongGapDksh ? "hypergraph" : "graph";
      if (carrier_type != expected) {
        throw std::invalid_argument("carrier type does not match the problem kind");
      }
    }
    // Default-construct a placeholder carrier of the declared type so the
    // caller can load the real one.
    if (carrier_type == "hypergraph") {
      inst.carrier = UniformHypergraph{0, inst.params.t.value_or(2), {}};
    } else if (carrier_type == "gadget") {
      inst.carrier = GadgetShape{};
    } else {
      inst.carrier = Graph{};
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("manifest field error: ") + e.what());
  }
  return inst;
}

GapInstance read_instance(const std::string& manifest_path) {
  std::string carrier_path;
  GapInstance inst = parse_manifest(read_text_file(manifest_path), carrier_path);
  std::filesystem::path carrier_file(carrier_path);
  if (carrier_file.is_relative()) {
    carrier_file = std::filesystem::path(manifest_path).parent_path() / carrier_file;
  }
  std::string carrier_text = read_text_file(carrier_file.string());
  if (std::holds_alternative<UniformHypergraph>(inst.carrier)) {
    inst.carrier = parse_hypergraph(carrier_text);
  } else if (std::holds_alternative<GadgetShape>(inst.carrier)) {
    inst.carrier = parse_gadget(carrier_text);
  } else {
    inst.carrier = parse_graph(carrier_text);
  }
  validate_instance(inst);
  return inst;
}

}  // namespace dslab
