// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagdisp {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitBoundFailed = 1, kExitUsage = 2, kExitAccuracy = 3 };

/// Entry point behind the `lagdisp` binary. The record goes to `out` (or the
/// --out file); diagnostics and wall time go to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "0,0.5,1" plus linspace items "lo:hi:count".
std::vector<double> parse_real_list(const std::string& text);
/// "1,4,9" plus inclusive ranges "a:b" and "a:b:step".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace lagdisp
