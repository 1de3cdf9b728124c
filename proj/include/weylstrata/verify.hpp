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

#include <string>
#include <utility>
#include <vector>

#include "weylstrata/admissible.hpp"
#include "weylstrata/export.hpp"
#include "weylstrata/steinberg.hpp"

namespace weylstrata {

struct VerifyOptions {
  int jobs = 1;
  SignConvention sign = SignConvention::kCardinality;
  bool timing = false;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite. Failed identities become Failure records; nothing throws
/// except for an unknown suite name (kParseError).
Report run_suite(const WeylGroup& g, const DiagramAut& delta, const std::string& suite, const VerifyOptions& options);

/// Runs suites in the given order; "all" expands to suite_names().
std::vector<Report> run_suites(const WeylGroup& g, const DiagramAut& delta, const std::vector<std::string>& suites,
                               const VerifyOptions& options);

/// Triple pairs covered by the partition and twisted-classes suites: every
/// pair at rank <= 2; at higher rank the family of diagonal triples (J, J, id),
/// the triples (I, I, d) for each diagram automorphism d, and all their pairs.
std::vector<std::pair<AdmissibleTriple, AdmissibleTriple>> triple_pairs(const WeylGroup& g);

/// "(J1={0},J2={1},{0->1})".
std::string describe(const AdmissibleTriple& c);

}  // namespace weylstrata
