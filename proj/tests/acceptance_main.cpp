// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: runs the numbered criteria and prints exactly one
// PASS/FAIL line per criterion on stdout (details of any failure go to
// stderr).  Exits 0 only when every criterion passes.
//
// Usage: acceptance [--criterion N]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "dslab/selftest.hpp"

namespace {

void print_line(const dslab::SelfTestResult& r, int id) {
  std::cout << "criterion " << id << ": " << (r.ok() ? "PASS" : "FAIL") << " — "
            << dslab::criterion_label(id) << " (" << r.checks << " checks)" << std::endl;
  for (const std::string& failure : r.failures) {
    std::cerr << "  criterion " << id << " failure: " << failure << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--criterion" && i + 1 < args.size()) {
      only = std::atoi(args[i + 1].c_str());
      ++i;
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  if (only != 0) {
    if (only < 1 || only > dslab::kCriterionCount) {
      std::cerr << "criterion id must lie in 1.." << dslab::kCriterionCount << "\n";
      return 2;
    }
    const dslab::SelfTestResult r = dslab::run_criterion(only);
    print_line(r, only);
    return r.ok() ? 0 : 4;
  }

  std::vector<dslab::SelfTestResult> results;
  bool all_ok = true;
  for (int id = 1; id < dslab::kCriterionCount; ++id) {
    results.push_back(dslab::run_criterion(id));
    print_line(results.back(), id);
    all_ok = all_ok && results.back().ok();
  }
  const dslab::SelfTestResult roundtrips = dslab::summarize_roundtrips(results);
  print_line(roundtrips, dslab::kCriterionCount);
  all_ok = all_ok && roundtrips.ok();
  return all_ok ? 0 : 4;
}
