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

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exits 3 when any criterion fails, after printing its witness.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "weylstrata/cli.hpp"
#include "weylstrata/compactification.hpp"
#include "weylstrata/verify.hpp"

using namespace weylstrata;

namespace {

struct Config {
  std::string type;
  std::vector<int> delta;  // empty for the identity
};

const std::vector<Config> kReference = {{"A1", {}}, {"A2", {}}, {"A2", {1, 0}}, {"B2", {}},
                                        {"G2", {}}, {"A3", {}}, {"A3", {2, 1, 0}}, {"B3", {}}};

std::string label(const Config& c) {
  std::string s = c.type;
  if (!c.delta.empty()) s += " flip";
  return s;
}

/// Reports of every suite for one configuration, keyed by suite name.
struct ConfigRun {
  Config config;
  int rank = 0;
  std::map<std::string, Report> reports;
};

struct Tallied {
  std::uint64_t cases = 0;
  std::uint64_t failed = 0;
  std::string witness;
};

/// Sums named checks of one suite across configurations.
Tallied tally(const std::vector<ConfigRun>& runs, const std::string& suite, const std::vector<std::string>& checks,
              bool (*keep)(const ConfigRun&) = nullptr) {
  Tallied t;
  for (const auto& run : runs) {
    if (keep && !keep(run)) continue;
    const Report& r = run.reports.at(suite);
    for (const auto& name : checks) {
      t.cases += r.cases_of(name);
      t.failed += r.failed(name);
    }
    for (const auto& f : r.failures) {
      const bool wanted = checks.empty() || std::find(checks.begin(), checks.end(), f.check) != checks.end();
      if (wanted && t.witness.empty())
        t.witness = "type=" + r.type + " delta=" + r.delta + " " + suite + "/" + f.check + ": " + f.witness;
    }
    if (checks.empty()) {
      t.cases += r.cases;
      t.failed += r.failures.size();
    }
  }
  return t;
}

Tallied combine(const Tallied& a, const Tallied& b) {
  return {a.cases + b.cases, a.failed + b.failed, a.witness.empty() ? b.witness : a.witness};
}

bool identity_only(const ConfigRun& r) { return r.config.delta.empty(); }
bool rank_at_most_two(const ConfigRun& r) { return r.rank <= 2 && r.config.delta.empty(); }

int failures = 0;

void line(int n, const std::string& what, bool ok, const std::string& detail, const std::string& witness = "") {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]\n";
  if (!ok) {
    ++failures;
    if (!witness.empty()) std::cout << "  witness: " << witness << "\n";
  }
}

void line(int n, const std::string& what, const Tallied& t) {
  line(n, what, t.failed == 0 && t.cases > 0,
       std::to_string(t.cases) + " cases, " + std::to_string(t.failed) + " failed", t.witness);
}

void supplementary(const std::string& what, const std::string& detail) {
  std::cout << "supplementary: " << what << "  [" << detail << "]\n";
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  VerifyOptions literal;
  VerifyOptions orbits;
  orbits.sign = SignConvention::kDeltaOrbits;

  std::vector<ConfigRun> runs;
  std::vector<Report> orbit_runs;
  for (const auto& c : kReference) {
    const auto ct = CartanType::named(c.type);
    WeylGroup g(ct);
    const auto d = c.delta.empty() ? DiagramAut::identity(ct.rank()) : DiagramAut::from_images(ct, c.delta);
    ConfigRun run{c, ct.rank(), {}};
    for (const auto& r : run_suites(g, d, {"all"}, literal)) run.reports.emplace(r.suite, r);
    orbit_runs.push_back(run_suite(g, d, "steinberg", orbits));
    runs.push_back(std::move(run));
  }
  const double suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  line(1, "bruhat_leq equals the subword oracle on all |W|^2 pairs",
       tally(runs, "bruhat-oracle", {"bruhat-oracle"}, identity_only));
  line(2, "pieces [w1,w2,c,c'] are disjoint and cover W x W",
       tally(runs, "partition", {"disjoint-cover"}, identity_only));
  line(3, "each distinguished coset meets W^{J1} x ^{J2'}W in exactly one element",
       tally(runs, "partition", {"coset-uniqueness", "coset-existence"}, identity_only));
  line(4, "twisted classes biject onto the double cosets of each piece (rank <= 2)",
       tally(runs, "twisted-classes", {"twisted-bijection"}, rank_at_most_two));
  line(5, "closure order is a partial order and boundary profiles follow the -|J|+|J'| rule",
       combine(tally(runs, "closure-poset", {}), tally(runs, "boundary-profile", {})));

  {
    Tallied t;
    std::string sizes;
    for (const auto& run : runs) {
      const auto ct = CartanType::named(run.config.type);
      WeylGroup g(ct);
      const auto d = run.config.delta.empty() ? DiagramAut::identity(ct.rank())
                                              : DiagramAut::from_images(ct, run.config.delta);
      const auto n = semistable_g_pieces(g, d).size();
      ++t.cases;
      if (n != (std::size_t{1} << ct.rank())) {
        ++t.failed;
        if (t.witness.empty()) t.witness = label(run.config) + " has " + std::to_string(n) + " semi-stable pieces";
      }
      if (run.config.delta.empty() && (run.config.type == "A1" || run.config.type == "A2" || run.config.type == "A3"))
        sizes += (sizes.empty() ? "" : "/") + std::to_string(n);
    }
    line(6, "semi-stable locus has 2^|I| G-pieces (A1/A2/A3: " + sizes + ")", t.failed == 0 && sizes == "2/4/8",
         std::to_string(t.cases) + " configurations, " + std::to_string(t.failed) + " failed", t.witness);
  }

  line(7, "epsilon is a bijection and the K cap w(J_delta) formula holds", tally(runs, "lemma7", {}));
  line(8, "parabolic closure index equals all three descriptions, and the semi-stable set at K = I",
       tally(runs, "theorem-pp",
             {"pp-twisted-reps", "pp-j-outer", "pp-w-outer", "semistable-agreement", "semistable-count"}));

  {
    // The multiplicity identity and the closed form as stated, with the (-1)^{|K|} sign.
    const Tallied t = combine(tally(runs, "steinberg", {}), tally(runs, "condition-equiv", {}));
    line(9, "Steinberg identity with sign (-1)^{|K|}, closed form, condition equivalence, degenerate case", t);
    for (const auto& run : runs) {
      const auto& r = run.reports.at("steinberg");
      if (!r.pass())
        supplementary("criterion 9 failures on " + label(run.config),
                      std::to_string(r.failed("multiplicity")) + " multiplicity, " +
                          std::to_string(r.failed("closed-form")) + " closed-form");
    }
    Tallied orbit;
    for (const auto& r : orbit_runs) {
      orbit.cases += r.cases;
      orbit.failed += r.failures.size();
      if (!r.failures.empty() && orbit.witness.empty()) orbit.witness = r.type + " " + r.failures.front().witness;
    }
    supplementary("criterion 9 with sign (-1)^{#delta-orbits of K}: " +
                      std::string(orbit.failed == 0 ? "PASS" : "FAIL"),
                  std::to_string(orbit.cases) + " cases, " + std::to_string(orbit.failed) + " failed" +
                      (orbit.witness.empty() ? "" : ", witness " + orbit.witness));
    std::uint64_t closed = 0, closed_n = 0, cond = 0, cond_n = 0;
    for (const auto& run : runs) {
      for (const auto& o : run.reports.at("steinberg").observations)
        if (o.check == "closed-form-literal-difference") closed += o.flagged, closed_n += o.checked;
      for (const auto& o : run.reports.at("condition-equiv").observations)
        if (o.check == "condition-literal-difference") cond += o.flagged, cond_n += o.checked;
    }
    supplementary("J' - I(J,I,w,delta) read without translating by w (recorded, not asserted)",
                  std::to_string(closed) + "/" + std::to_string(closed_n) + " closed-form and " +
                      std::to_string(cond) + "/" + std::to_string(cond_n) + " condition disagreements");
  }

  {
    Tallied t;
    for (const auto& c : kReference) {
      std::vector<std::string> args = {"verify", "--type", c.type, "--suite", "all"};
      if (!c.delta.empty()) {
        std::string d;
        for (std::size_t i = 0; i < c.delta.size(); ++i) d += (i ? "," : "") + std::to_string(c.delta[i]);
        args.insert(args.end(), {"--delta", d});
      }
      std::ostringstream out1, err1, out2, err2;
      const int code1 = run_cli(args, out1, err1);
      const int code2 = run_cli(args, out2, err2);
      ++t.cases;
      if (out1.str() != out2.str() || err1.str() != err2.str() || code1 != code2 || out1.str().empty()) {
        ++t.failed;
        if (t.witness.empty()) t.witness = label(c) + ": reports differ between two runs";
      }
    }
    line(10, "two runs of verify --suite all give byte-identical reports", t);
  }

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "runtime: " << suite_seconds << " s for all suites on all reference configurations (limit 60 s), "
            << total << " s including the determinism reruns\n";
  if (suite_seconds >= 60.0) {
    std::cout << "runtime: FAIL over budget\n";
    ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " (" << failures
            << " criteria failed)\n";
  return failures == 0 ? kExitPass : kExitConsistency;
}
