// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dslab/generators.hpp"
#include "dslab/graph.hpp"
#include "dslab/instance.hpp"
#include "dslab/io_util.hpp"
#include "dslab/reductions.hpp"
#include "dslab/witness.hpp"
#include "test_support.hpp"

namespace {

using testref::TempDir;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dslab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("help and version succeed, bad invocations exit 2") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"solve", "--help"}).code == 0);
  const CliRun version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out == "dslab 0.1.0\n");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "--model", "gnp", "--n", "4"}).code == 2);       // missing --p
  CHECK(run({"gen", "--model", "what", "--n", "4", "--p", "1/2"}).code == 2);
  CHECK(run({"solve", "nowhere.txt", "--alg", "flow"}).code == 2);   // missing file
}

TEST_CASE("gen writes deterministic graphs to stdout and files") {
  const CliRun a = run({"gen", "--model", "gnp", "--n", "8", "--p", "1/2", "--seed", "7"});
  const CliRun b = run({"gen", "--model", "gnp", "--n", "8", "--p", "1/2", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == dslab::serialize_graph(dslab::gen_gnp(8, dslab::Rat::parse("1/2"), 7)));

  TempDir dir;
  const std::string f1 = dir.file("g1.txt");
  const std::string f2 = dir.file("g2.txt");
  CHECK(run({"gen", "--model", "planted-clique", "--n", "10", "--p", "1/3", "--k", "4", "--seed",
             "3", "--out", f1})
            .code == 0);
  CHECK(run({"gen", "--model", "planted-clique", "--n", "10", "--p", "1/3", "--k", "4", "--seed",
             "3", "--out", f2})
            .code == 0);
  CHECK(dslab::read_text_file(f1) == dslab::read_text_file(f2));
}

TEST_CASE("run manifests capture the invocation in a fixed schema") {
  TempDir dir;
  const std::string manifest = dir.file("run.json");
  const CliRun r = run({"gen", "--model", "gnp", "--n", "5", "--p", "1/2", "--seed", "9", "--out",
                        dir.file("g.txt"), "--manifest-out", manifest});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(dslab::read_text_file(manifest));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "argv", "seed", "inputs", "params", "outputs",
                                         "timing_ms", "version"});
  CHECK(doc["command"] == "gen");
  CHECK(doc["seed"] == "9");
  CHECK(doc["params"]["n"] == "5");
  CHECK(doc["outputs"].size() == 1);
  CHECK(doc["version"] == "dslab 0.1.0");
}

TEST_CASE("solve prints exact values for every algorithm") {
  TempDir dir;
  const std::string k4 = dir.file("k4.txt");
  dslab::save_graph(dslab::complete_graph(4), k4);

  CHECK(run({"solve", k4, "--alg", "flow"}).out == "3/2\n");
  CHECK(run({"solve", k4, "--alg", "brute", "--k", "2"}).out == "3/2\n");
  CHECK(run({"solve", k4, "--alg", "xp", "--k", "2"}).out == "3/2\n");
  CHECK(run({"solve", k4, "--alg", "approx2", "--k", "4"}).out == "3/2\n");
  CHECK(run({"solve", k4, "--alg", "peel3", "--k", "4"}).out == "3/2\n");

  const std::string p3 = dir.file("p3.txt");
  dslab::save_graph(dslab::path_graph(3), p3);
  CHECK(run({"solve", p3, "--alg", "anchored", "--anchor", "0"}).out == "2/3\n");

  // Witness output can be re-read and scored.
  const std::string wfile = dir.file("w.txt");
  CHECK(run({"solve", k4, "--alg", "flow", "--witness-out", wfile}).code == 0);
  CHECK(dslab::load_witness(wfile).size() == 4);

  // k is required for the size-constrained algorithms.
  CHECK(run({"solve", k4, "--alg", "brute"}).code == 2);
}

TEST_CASE("solve runs the structured solver on gadget files") {
  TempDir dir;
  const std::string gfile = dir.file("shape.txt");
  dslab::save_gadget(dslab::make_gadget(3, {2, 1}, {{2, {0, 1}}, {1, {1}}}), gfile);
  const CliRun r = run({"solve", gfile, "--alg", "structured", "--k", "3"});
  CHECK(r.code == 0);
  // Both double-subset copies with all three element copies: 6 edges on 5
  // vertices, beating the K_3 block's density 1.
  CHECK(r.out == "6/5\n");
  CHECK(run({"solve", gfile, "--alg", "structured", "--k", "3", "--witness-out",
             dir.file("w.txt")})
            .code == 2);
}

TEST_CASE("exhausting the work budget exits 3") {
  TempDir dir;
  const std::string big = dir.file("empty30.txt");
  dslab::save_graph(dslab::make_graph(30, {}), big);
  const CliRun r = run({"solve", big, "--alg", "brute", "--k", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("reduce rewrites instances and reports its record") {
  TempDir dir;
  dslab::GapInstance source;
  source.kind = dslab::ProblemKind::GapDks;
  source.carrier = dslab::complete_graph(6);
  source.k = 3;
  source.ell = dslab::BigInt(2);
  source.params.lambda = dslab::Rat(4);
  const std::string manifest = dir.file("src.json");
  dslab::write_instance(source, manifest, "src.carrier.txt");

  const std::string out_manifest = dir.file("out.json");
  const std::string out_carrier = dir.file("out.carrier.txt");
  const CliRun r = run({"reduce", manifest, "--rule", "relax", "--lambda", "2", "--gamma", "1",
                        "--out-manifest", out_manifest, "--out-carrier", out_carrier});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto record = nlohmann::ordered_json::parse(r.out);
  CHECK(record["rule"] == "relax");
  CHECK(record["guarantee_threshold_met"] == true);
  const dslab::GapInstance reduced = dslab::read_instance(out_manifest);
  CHECK(reduced.kind == dslab::ProblemKind::GapDksGamma);
  CHECK(reduced.k == 3);

  // Identical invocations replay to identical bytes.
  const std::string rerun_manifest = dir.file("out2.json");
  const std::string rerun_carrier = dir.file("out2.carrier.txt");
  const CliRun r2 = run({"reduce", manifest, "--rule", "relax", "--lambda", "2", "--gamma", "1",
                         "--out-manifest", rerun_manifest, "--out-carrier", rerun_carrier});
  CHECK(r2.out == r.out);
  CHECK(dslab::read_text_file(rerun_carrier) == dslab::read_text_file(out_carrier));
}

TEST_CASE("reduce warns when a guarantee threshold is missed") {
  TempDir dir;
  const std::string graph_file = dir.file("c4.txt");
  dslab::save_graph(dslab::cycle_graph(4), graph_file);
  const CliRun r = run({"reduce", graph_file, "--rule", "clique2dalks", "--k", "3",
                        "--out-manifest", dir.file("out.json"), "--out-carrier",
                        dir.file("out.carrier.txt")});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("verify scores witnesses and always exits 0 on well-formed input") {
  TempDir dir;
  dslab::GapInstance inst;
  inst.kind = dslab::ProblemKind::GapDks;
  inst.carrier = dslab::complete_graph(4);
  inst.k = 3;
  inst.ell = dslab::BigInt(2);
  inst.params.lambda = dslab::Rat(1);
  const std::string manifest = dir.file("inst.json");
  dslab::write_instance(inst, manifest, "inst.carrier.txt");

  const std::string good = dir.file("good.txt");
  dslab::save_witness(dslab::make_witness({0, 1, 2}), good);
  const CliRun ok = run({"verify", manifest, "--witness", good});
  CHECK(ok.code == 0);
  CHECK(nlohmann::ordered_json::parse(ok.out)["valid"] == true);

  const std::string bad = dir.file("bad.txt");
  dslab::save_witness(dslab::make_witness({0, 1}), bad);
  const CliRun nope = run({"verify", manifest, "--witness", bad});
  CHECK(nope.code == 0);
  const auto doc = nlohmann::ordered_json::parse(nope.out);
  CHECK(doc["valid"] == false);
  CHECK(std::string(doc["reason"]).find("size") == 0);
}

TEST_CASE("plan renders the pipeline and succeeds when every check holds") {
  const CliRun r = run({"plan", "--theorem", "1", "--eps", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theorem 1 chain at eps = 1") == 0);
  CHECK(r.out.find("stage 4: gapdalks (lambda = 1/2)") != std::string::npos);
  CHECK(r.out.find("FAILED") == std::string::npos);
  CHECK(run({"plan", "--theorem", "2", "--eps", "1"}).code == 2);
  CHECK(run({"plan", "--theorem", "1", "--eps", "0"}).code == 2);
  const CliRun t3 = run({"plan", "--theorem", "3", "--eps", "2/3"});
  CHECK(t3.code == 0);
  CHECK(t3.out.find("gapdalks (lambda = 4/3)") != std::string::npos);
}

TEST_CASE("selftest rejects unknown suites") {
  CHECK(run({"selftest", "--suite", "everything"}).code == 2);
}
