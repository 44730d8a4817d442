// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/instance.hpp"

#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "dslab/io_util.hpp"
#include "test_support.hpp"

namespace {

using testref::TempDir;

using dslab::BigInt;
using dslab::GapInstance;
using dslab::ProblemKind;
using dslab::Rat;

GapInstance sample_gapdks() {
  GapInstance inst;
  inst.kind = ProblemKind::GapDks;
  inst.carrier = dslab::complete_graph(4);
  inst.k = 3;
  inst.ell = BigInt(2);
  inst.params.lambda = Rat(2);
  return inst;
}

GapInstance sample_dksh() {
  GapInstance inst;
  inst.kind = ProblemKind::StrongGapDksh;
  inst.carrier = dslab::make_hypergraph(4, 2, {{0, 1}, {1, 2}});
  inst.k = 2;
  inst.ell = BigInt(1);
  inst.params.lambda = Rat(2);
  inst.params.gamma = Rat(1);
  inst.params.t = 2;
  return inst;
}

GapInstance sample_dalks_gadget() {
  GapInstance inst;
  inst.kind = ProblemKind::GapDalks;
  inst.carrier = dslab::make_gadget(3, {2, 1}, {{2, {0, 1}}, {1, {1}}});
  inst.k = 4;
  inst.alpha = Rat(BigInt(3), BigInt(2));
  inst.params.lambda = Rat(BigInt(1), BigInt(2));
  return inst;
}

}  // namespace

TEST_CASE("kind names round-trip and unknown names are rejected") {
  for (ProblemKind kind :
       {ProblemKind::GapDks, ProblemKind::GapDksGamma, ProblemKind::PolyGapDks,
        ProblemKind::PolyGapDksGamma, ProblemKind::StrongGapDksh, ProblemKind::GapDalks}) {
    CHECK(dslab::kind_from_name(dslab::kind_name(kind)) == kind);
  }
  CHECK(dslab::kind_name(ProblemKind::GapDks) == "gapdks");
  CHECK(dslab::kind_name(ProblemKind::GapDalks) == "gapdalks");
  CHECK_THROWS_AS(dslab::kind_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("validate_instance enforces the per-kind shape") {
  GapInstance inst = sample_gapdks();
  CHECK_NOTHROW(dslab::validate_instance(inst));

  SUBCASE("lambda below 1 is rejected for DkS kinds") {
    inst.params.lambda = Rat(BigInt(1), BigInt(2));
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("missing lambda is rejected") {
    inst.params.lambda.reset();
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("alpha on a DkS instance is rejected") {
    inst.alpha = Rat(1);
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("k beyond the carrier is rejected") {
    inst.k = 5;
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("k below 1 is rejected") {
    inst.k = 0;
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
  SUBCASE("a hypergraph carrier is rejected for a graph kind") {
    inst.carrier = dslab::make_hypergraph(4, 2, {{0, 1}});
    CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  }
}

TEST_CASE("the DALkS gap factor may drop below 1 but not to 0") {
  GapInstance inst = sample_dalks_gadget();
  CHECK_NOTHROW(dslab::validate_instance(inst));
  inst.params.lambda = Rat(0);
  CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
}

TEST_CASE("gamma variants must carry gamma at least 1") {
  GapInstance inst = sample_gapdks();
  inst.kind = ProblemKind::GapDksGamma;
  CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  inst.params.gamma = Rat(BigInt(1), BigInt(2));
  CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
  inst.params.gamma = Rat(2);
  CHECK_NOTHROW(dslab::validate_instance(inst));
}

TEST_CASE("the polynomial kinds pin the derived threshold") {
  GapInstance inst;
  inst.kind = ProblemKind::PolyGapDks;
  inst.carrier = dslab::complete_graph(11);
  inst.k = 11;
  inst.params.delta = Rat(BigInt(1), BigInt(3));
  inst.params.t = 2;
  inst.ell = dslab::polydks_threshold(11, 2, Rat(BigInt(1), BigInt(3)));
  CHECK(*inst.ell == 55);
  CHECK_NOTHROW(dslab::validate_instance(inst));
  inst.ell = BigInt(54);
  CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
}

TEST_CASE("polydks_threshold is the exact ceiling of k^(t - delta)") {
  // ceil(k^(t - p/q)) must be the least z with z^q >= k^(tq - p).
  for (std::int64_t k : {1, 2, 5, 11, 32}) {
    for (int t : {2, 3}) {
      for (int p = 1; p <= 3; ++p) {
        for (int q = p; q <= 4; ++q) {
          const Rat delta{BigInt(p), BigInt(q)};
          if (delta > Rat(1)) continue;
          const BigInt expect =
              dslab::ceil_rational_power(BigInt(k), static_cast<unsigned>(t * q - p),
                                         static_cast<unsigned>(q));
          CHECK(dslab::polydks_threshold(k, t, delta) == expect);
        }
      }
    }
  }
  CHECK(dslab::polydks_threshold(32, 2, Rat(BigInt(1), BigInt(4))) == 431);
}

TEST_CASE("the uniformity parameter must match the hypergraph carrier") {
  GapInstance inst = sample_dksh();
  CHECK_NOTHROW(dslab::validate_instance(inst));
  inst.params.t = 3;
  CHECK_THROWS_AS(dslab::validate_instance(inst), std::invalid_argument);
}

TEST_CASE("manifests serialize with a fixed key order") {
  const std::string text = dslab::serialize_manifest(sample_gapdks(), "carrier.txt");
  const auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"kind", "k", "threshold", "params", "faithful",
                                         "carrier_type", "carrier"});
  CHECK(doc["kind"] == "gapdks");
  CHECK(doc["k"] == "3");
  CHECK(doc["threshold"] == "2");
  CHECK(doc["params"]["lambda"] == "2");
  CHECK(doc["faithful"] == true);
  CHECK(doc["carrier_type"] == "graph");
  CHECK(doc["carrier"] == "carrier.txt");
  CHECK(text.back() == '\n');
}

TEST_CASE("instances round-trip through the filesystem for every carrier type") {
  TempDir dir;
  for (const GapInstance& inst : {sample_gapdks(), sample_dksh(), sample_dalks_gadget()}) {
    const std::string manifest = dir.file("inst.json");
    const std::string carrier = dir.file("inst.carrier.txt");
    dslab::write_instance(inst, manifest, carrier);
    const GapInstance back = dslab::read_instance(manifest);
    CHECK(back.kind == inst.kind);
    CHECK(back.k == inst.k);
    CHECK(back.ell == inst.ell);
    CHECK((!inst.alpha || *back.alpha == *inst.alpha));
    CHECK(dslab::serialize_manifest(back, "inst.carrier.txt") ==
          dslab::serialize_manifest(inst, "inst.carrier.txt"));
    CHECK(dslab::serialize_carrier(back) == dslab::serialize_carrier(inst));
  }
}

TEST_CASE("relative carrier paths resolve against the manifest directory") {
  TempDir dir;
  std::filesystem::create_directories(dir.path / "sub");
  const GapInstance inst = sample_gapdks();
  // The manifest records a relative path; reading from another working
  // directory must still find the carrier next to the manifest.
  dslab::write_instance(inst, dir.file("sub/in.json"), "in.carrier.txt");
  const std::string manifest_text = dslab::read_text_file(dir.file("sub/in.json"));
  const auto doc = nlohmann::ordered_json::parse(manifest_text);
  CHECK(doc["carrier"] == "in.carrier.txt");
  const GapInstance back = dslab::read_instance(dir.file("sub/in.json"));
  CHECK(back.k == inst.k);
}

TEST_CASE("parse_manifest reports the carrier path without touching disk") {
  const std::string text = dslab::serialize_manifest(sample_dksh(), "elsewhere/h.txt");
  std::string carrier_path;
  const GapInstance placeholder = dslab::parse_manifest(text, carrier_path);
  CHECK(carrier_path == "elsewhere/h.txt");
  CHECK(placeholder.kind == ProblemKind::StrongGapDksh);
  CHECK(std::holds_alternative<dslab::UniformHypergraph>(placeholder.carrier));
}

TEST_CASE("manifest parsing rejects malformed documents") {
  std::string good = dslab::serialize_manifest(sample_gapdks(), "c.txt");
  std::string carrier_path;
  CHECK_THROWS_AS(dslab::parse_manifest("not json", carrier_path), std::invalid_argument);
  CHECK_THROWS_AS(dslab::parse_manifest("{}", carrier_path), std::invalid_argument);
  std::string wrong_kind = good;
  wrong_kind.replace(wrong_kind.find("gapdks"), 6, "whoops");
  CHECK_THROWS_AS(dslab::parse_manifest(wrong_kind, carrier_path), std::invalid_argument);
}
