/*
Copyright 2026 The weyl-strata Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylstrata/subset.hpp"

namespace weylstrata {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitSuiteFailure = 1,
  kExitUsage = 2,
  kExitConsistency = 3,
};

/// Parses "" (empty set), "all" (every node), or comma-separated node indices,
/// optionally wrapped in braces. Throws kParseError.
Subset parse_subset(const std::string& text, int rank);

/// Parses "1,0" or "[1,0]" into a list of integers. Throws kParseError.
std::vector<int> parse_int_list(const std::string& text);

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylstrata
