// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dslab {

inline constexpr const char* kToolVersion = "dslab 0.1.0";

// Runs one command (gen | solve | reduce | verify | plan | selftest) against
// the given streams.  Exit codes: 0 success, 1 internal invariant failure,
// 2 invalid input (flags, files, parameters), 3 work budget exceeded,
// 4 self-test or plan-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dslab
