// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dslab/oracles.hpp"

namespace dslab {

// Outcome of one acceptance criterion or one named self-test suite: every
// assertion executed is counted, failures carry human-readable diagnostics,
// and serialization round-trip audits are tallied separately so the final
// round-trip criterion can aggregate them.
struct SelfTestResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  std::uint64_t audited_artifacts = 0;
  std::uint64_t audit_failures = 0;

  bool ok() const { return failures.empty(); }
};

inline constexpr int kCriterionCount = 9;

// Acceptance criteria, numbered 1..9.  Criterion 9 (round-trip determinism)
// aggregates the audits of 1..8; run standalone it re-runs them silently.
SelfTestResult run_criterion(int id, std::uint64_t budget = default_budget());
std::string criterion_label(int id);

// Criterion 9 computed from already-run criteria 1..8 (avoids re-running).
SelfTestResult summarize_roundtrips(const std::vector<SelfTestResult>& prior);

// Named suites behind `selftest --suite`.
std::vector<std::string> suite_names();
SelfTestResult run_suite(const std::string& name, std::uint64_t budget = default_budget());

}  // namespace dslab
