// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dslab/gadget.hpp"
#include "dslab/generators.hpp"
#include "dslab/graph.hpp"
#include "dslab/instance.hpp"
#include "dslab/io_util.hpp"
#include "dslab/oracles.hpp"
#include "dslab/rational.hpp"
#include "dslab/reductions.hpp"
#include "dslab/selftest.hpp"
#include "dslab/solvers.hpp"
#include "dslab/witness.hpp"
#include "dslab/witnesses.hpp"

namespace dslab {
namespace {

// Everything one run wants to remember for its replay manifest.
struct RunCapture {
  std::string command;
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> outputs;
};

void write_run_manifest(const std::string& path, const RunCapture& cap, std::int64_t ms) {
  if (path.empty()) return;
  nlohmann::ordered_json doc;
  doc["command"] = cap.command;
  doc["argv"] = cap.argv;
  doc["seed"] = std::to_string(cap.seed);
  doc["inputs"] = cap.inputs;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : cap.params) params[key] = value;
  doc["params"] = std::move(params);
  doc["outputs"] = cap.outputs;
  doc["timing_ms"] = ms;
  doc["version"] = kToolVersion;
  write_text_file(path, doc.dump(2) + "\n");
}

Rat required_rat(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw std::invalid_argument(std::string(flag) + " is required for this rule");
  }
  return Rat::parse(text);
}

std::int64_t required_k(std::int64_t k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string("--k is required for ") + what);
  return k;
}

int print_selftest(std::ostream& out, const std::vector<SelfTestResult>& results) {
  bool all_ok = true;
  for (const SelfTestResult& r : results) {
    out << "suite " << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks
        << " checks, " << r.audited_artifacts << " round-trips)\n";
    constexpr std::size_t kMaxShown = 20;
    for (std::size_t i = 0; i < r.failures.size() && i < kMaxShown; ++i) {
      out << "  failure: " << r.failures[i] << "\n";
    }
    if (r.failures.size() > kMaxShown) {
      out << "  ... and " << r.failures.size() - kMaxShown << " more failures\n";
    }
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"densest-subgraph laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // --- gen -------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a seeded random graph");
  std::string gen_model;
  int gen_n = 0;
  std::string gen_p;
  std::int64_t gen_k = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::string gen_manifest;
  gen->add_option("--model", gen_model, "gnp | planted-clique | planted-dense")
      ->required()
      ->check(CLI::IsMember({"gnp", "planted-clique", "planted-dense"}));
  gen->add_option("--n", gen_n, "number of vertices")->required();
  gen->add_option("--p", gen_p, "edge probability as p/q")->required();
  gen->add_option("--k", gen_k, "planted set size (planted models)");
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->add_option("--out", gen_out, "write the graph here instead of stdout");
  gen->add_option("--manifest-out", gen_manifest, "write a replay manifest here");

  // --- solve -----------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "run one solver on a graph or gadget file");
  std::string solve_input;
  std::string solve_alg;
  std::int64_t solve_k = -1;
  std::vector<int> solve_anchors;
  std::string solve_witness_out;
  std::string solve_manifest;
  solve->add_option("input", solve_input, "graph file (gadget file for --alg structured)")
      ->required();
  solve->add_option("--alg", solve_alg, "flow | anchored | xp | peel3 | approx2 | brute | structured")
      ->required()
      ->check(CLI::IsMember({"flow", "anchored", "xp", "peel3", "approx2", "brute", "structured"}));
  solve->add_option("--k", solve_k, "minimum subgraph size");
  solve->add_option("--anchor", solve_anchors, "anchor vertex (repeatable, --alg anchored)");
  solve->add_option("--witness-out", solve_witness_out, "write the optimal witness here");
  solve->add_option("--manifest-out", solve_manifest, "write a replay manifest here");

  // --- reduce ----------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "apply one reduction rule");
  std::string red_input;
  std::string red_rule;
  std::string red_lambda, red_gamma, red_delta, red_eps;
  int red_t = 0;
  std::int64_t red_k = -1;
  std::int64_t red_c1 = -1, red_c2 = -1, red_x = -1;
  std::string red_out_manifest = "reduced.json";
  std::string red_out_carrier = "reduced.carrier.txt";
  std::string red_manifest;
  reduce->add_option("input", red_input, "instance manifest (graph file for clique2dalks)")
      ->required();
  reduce
      ->add_option("--rule", red_rule,
                   "relax | shrink | dks2dksh | poly2dksh | dksh2dalks | clique2dalks")
      ->required()
      ->check(CLI::IsMember(
          {"relax", "shrink", "dks2dksh", "poly2dksh", "dksh2dalks", "clique2dalks"}));
  reduce->add_option("--lambda", red_lambda, "gap factor as p/q");
  reduce->add_option("--gamma", red_gamma, "size slack as p/q");
  reduce->add_option("--delta", red_delta, "density exponent as p/q");
  reduce->add_option("--eps", red_eps, "approximation slack as p/q");
  reduce->add_option("--t", red_t, "uniformity");
  reduce->add_option("--k", red_k, "clique size (clique2dalks)");
  reduce->add_option("--scale-c1", red_c1, "override the element multiplicity");
  reduce->add_option("--scale-c2", red_c2, "override the subset multiplicity");
  reduce->add_option("--scale-x", red_x, "override the clique block size");
  reduce->add_option("--out-manifest", red_out_manifest, "output instance manifest path");
  reduce->add_option("--out-carrier", red_out_carrier, "output carrier path");
  reduce->add_option("--manifest-out", red_manifest, "write a replay manifest here");

  // --- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a witness against an instance");
  std::string ver_input;
  std::string ver_witness;
  std::string ver_manifest;
  verify->add_option("input", ver_input, "instance manifest")->required();
  verify->add_option("--witness", ver_witness, "witness file")->required();
  verify->add_option("--manifest-out", ver_manifest, "write a replay manifest here");

  // --- plan ------------------------------------------------------------
  auto* plan = app.add_subcommand("plan", "print a hardness pipeline with exact bookkeeping");
  int plan_theorem = 0;
  std::string plan_eps;
  std::string plan_manifest;
  plan->add_option("--theorem", plan_theorem, "1 or 3")->required();
  plan->add_option("--eps", plan_eps, "target slack as p/q")->required();
  plan->add_option("--manifest-out", plan_manifest, "write a replay manifest here");

  // --- selftest ----------------------------------------------------------
  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  std::string st_suite;
  std::string st_manifest;
  selftest
      ->add_option("--suite", st_suite, "oracles | reductions | clique-iff | lemma8 | peeling")
      ->check(CLI::IsMember({"oracles", "reductions", "clique-iff", "lemma8", "peeling"}));
  selftest->add_option("--manifest-out", st_manifest, "write a replay manifest here");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dslab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunCapture cap;
  cap.argv = args;
  const auto started = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&started]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 started)
        .count();
  };

  try {
    if (app.got_subcommand(gen)) {
      cap.command = "gen";
      cap.seed = gen_seed;
      cap.params = {{"model", gen_model}, {"n", std::to_string(gen_n)},   {"p", gen_p},
                    {"k", std::to_string(gen_k)},  {"seed", std::to_string(gen_seed)}};
      const Rat p = Rat::parse(gen_p);
      Graph g;
      if (gen_model == "gnp") {
        g = gen_gnp(gen_n, p, gen_seed);
      } else if (gen_model == "planted-clique") {
        g = gen_planted_clique(gen_n, p, static_cast<int>(gen_k), gen_seed);
      } else {
        g = gen_planted_dense(gen_n, p, static_cast<int>(gen_k), gen_seed);
      }
      const std::string text = serialize_graph(g);
      if (gen_out.empty()) {
        out << text;
      } else {
        write_text_file(gen_out, text);
        cap.outputs.push_back(gen_out);
      }
      write_run_manifest(gen_manifest, cap, elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(solve)) {
      cap.command = "solve";
      cap.inputs.push_back(solve_input);
      cap.params = {{"alg", solve_alg}};
      if (solve_k >= 0) cap.params.emplace_back("k", std::to_string(solve_k));
      for (int a : solve_anchors) cap.params.emplace_back("anchor", std::to_string(a));

      if (solve_alg == "structured") {
        if (!solve_witness_out.empty()) {
          throw std::invalid_argument("the structured solver reports a value, not a witness");
        }
        const GadgetShape shape = load_gadget(solve_input);
        const Rat value = dalks_exact_structured(shape, required_k(solve_k, "structured"));
        out << value.str() << "\n";
        write_run_manifest(solve_manifest, cap, elapsed_ms());
        return 0;
      }

      const Graph g = load_graph(solve_input);
      Witness witness;
      Rat value;
      if (solve_alg == "flow") {
        SolveResult r = densest_subgraph_exact(g);
        witness = std::move(r.witness);
        value = r.value;
      } else if (solve_alg == "anchored") {
        SolveResult r = anchored_densest(g, solve_anchors);
        witness = std::move(r.witness);
        value = r.value;
      } else if (solve_alg == "xp") {
        SolveResult r = dalks_exact_xp(g, static_cast<int>(required_k(solve_k, "xp")));
        witness = std::move(r.witness);
        value = r.value;
      } else if (solve_alg == "peel3") {
        SolveResult r = dalks_3approx_peel(g, static_cast<int>(required_k(solve_k, "peel3")));
        witness = std::move(r.witness);
        value = r.value;
      } else if (solve_alg == "approx2") {
        SolveResult r = dalks_2approx(g, static_cast<int>(required_k(solve_k, "approx2")));
        witness = std::move(r.witness);
        value = r.value;
      } else {  // brute
        DensityOptimum o = brute_den_atleast(g, static_cast<int>(required_k(solve_k, "brute")));
        witness = std::move(o.witness);
        value = o.value;
      }
      out << value.str() << "\n";
      if (!solve_witness_out.empty()) {
        save_witness(witness, solve_witness_out);
        cap.outputs.push_back(solve_witness_out);
      }
      write_run_manifest(solve_manifest, cap, elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(reduce)) {
      cap.command = "reduce";
      cap.inputs.push_back(red_input);
      cap.params = {{"rule", red_rule}};
      for (const auto& [key, text] : {std::pair<const char*, const std::string*>{"lambda", &red_lambda},
                                      {"gamma", &red_gamma},
                                      {"delta", &red_delta},
                                      {"eps", &red_eps}}) {
        if (!text->empty()) cap.params.emplace_back(key, *text);
      }
      if (red_t > 0) cap.params.emplace_back("t", std::to_string(red_t));
      if (red_k >= 0) cap.params.emplace_back("k", std::to_string(red_k));
      if (red_c1 >= 0) cap.params.emplace_back("scale-c1", std::to_string(red_c1));
      if (red_c2 >= 0) cap.params.emplace_back("scale-c2", std::to_string(red_c2));
      if (red_x >= 0) cap.params.emplace_back("scale-x", std::to_string(red_x));

      ReductionOutput result;
      if (red_rule == "clique2dalks") {
        const Graph g = load_graph(red_input);
        result = clique_to_dalks(g, static_cast<int>(required_k(red_k, "clique2dalks")));
      } else {
        const GapInstance inst = read_instance(red_input);
        if (red_rule == "relax") {
          result = relax_gapdks(inst, required_rat(red_lambda, "--lambda"),
                                required_rat(red_gamma, "--gamma"));
        } else if (red_rule == "shrink") {
          if (red_t < 2) throw std::invalid_argument("--t is required for shrink");
          result = shrink_polydks(inst, required_rat(red_delta, "--delta"), red_t,
                                  required_rat(red_gamma, "--gamma"));
        } else if (red_rule == "dks2dksh") {
          result = dks_to_dksh(inst);
        } else if (red_rule == "poly2dksh") {
          result = polydks_to_dksh(inst, required_rat(red_lambda, "--lambda"));
        } else {  // dksh2dalks
          ScaleOverride scale;
          if (red_c1 >= 0) scale.c1 = red_c1;
          if (red_c2 >= 0) scale.c2 = red_c2;
          if (red_x >= 0) scale.x = red_x;
          result = dksh_to_dalks(inst, required_rat(red_eps, "--eps"), scale);
        }
      }
      write_instance(result.instance, red_out_manifest, red_out_carrier);
      cap.outputs.push_back(red_out_manifest);
      cap.outputs.push_back(red_out_carrier);
      out << serialize_record(result.record);
      if (!result.record.guarantee_threshold_met) {
        err << "warning: the rule's guarantee threshold is not met; see the record\n";
      }
      write_run_manifest(red_manifest, cap, elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(verify)) {
      cap.command = "verify";
      cap.inputs = {ver_input, ver_witness};
      cap.params = {{"witness", ver_witness}};
      const GapInstance inst = read_instance(ver_input);
      const Witness w = load_witness(ver_witness);
      const Verdict v = check_witness(inst, w);
      out << serialize_verdict(v);
      write_run_manifest(ver_manifest, cap, elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(plan)) {
      cap.command = "plan";
      cap.params = {{"theorem", std::to_string(plan_theorem)}, {"eps", plan_eps}};
      const PipelinePlan p = plan_pipeline(plan_theorem, Rat::parse(plan_eps));
      out << render_plan(p);
      write_run_manifest(plan_manifest, cap, elapsed_ms());
      return p.all_ok() ? 0 : 4;
    }

    // selftest
    cap.command = "selftest";
    if (!st_suite.empty()) cap.params.emplace_back("suite", st_suite);
    std::vector<SelfTestResult> results;
    if (st_suite.empty()) {
      for (const std::string& name : suite_names()) results.push_back(run_suite(name));
    } else {
      results.push_back(run_suite(st_suite));
    }
    const int code = print_selftest(out, results);
    write_run_manifest(st_manifest, cap, elapsed_ms());
    return code;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dslab
