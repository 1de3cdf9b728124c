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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "weylstrata/cli.hpp"
#include "weylstrata/errors.hpp"
#include "weylstrata/export.hpp"
#include "weylstrata/parabolic_closure.hpp"

using namespace weylstrata;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::size_t dot_nodes(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, ParseSubset) {
  EXPECT_EQ(parse_subset("", 3), Subset());
  EXPECT_EQ(parse_subset("all", 3), Subset(7));
  EXPECT_EQ(parse_subset("0,2", 3), Subset(5));
  EXPECT_EQ(parse_subset("{1}", 3), Subset(2));
  EXPECT_THROW(parse_subset("3", 3), Error);
  EXPECT_THROW(parse_subset("a", 3), Error);
  EXPECT_EQ(parse_int_list("[1, 0]"), (std::vector<int>{1, 0}));
  EXPECT_THROW(parse_int_list("1,,0"), Error);
}

TEST(Cli, EnumeratePieces) {
  // "all" is the full node set, so K = I and A1 has 2 + 1 pieces.
  const auto a = run({"enumerate", "--type", "A1", "--pieces", "--K", "all", "--format", "csv"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(lines(a.out), 1u + 3u);
  const auto b = run({"enumerate", "--type", "A1", "--pieces", "--format", "csv"});
  EXPECT_EQ(lines(b.out), 1u + 6u);
}

TEST(Cli, EnumerateSemistable) {
  const auto r = run({"enumerate", "--type", "A2", "--semistable", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "J,w\n0,\"[]\"\n1,\"[]\"\n2,\"[]\"\n3,\"[]\"\n");
}

TEST(Cli, EnumerateParabolicClosureMatchesIndexSets) {
  const auto r = run({"enumerate", "--type", "A2", "--delta", "1,0", "--parabolic-closure", "--K", ""});
  EXPECT_EQ(r.code, 0);
  const auto ct = CartanType::named("A2");
  WeylGroup g(ct);
  const auto flip = DiagramAut::from_images(ct, {1, 0});
  EXPECT_EQ(pieces_from_json(g, r.out), pp_index_sets(g, Subset(), flip).by_twisted_reps);
  EXPECT_EQ(pieces_from_json(g, r.out).size(), 7u);
}

TEST(Cli, EnumerateIsolated) {
  const auto r = run({"enumerate", "--type", "A2", "--delta", "1,0", "--isolated-boundary", "--K", "all",
                      "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "J,w\n3,\"[]\"\n");
}

TEST(Cli, ClosureDownsets) {
  const auto top = run({"closure", "--type", "A1", "--J", "all", "--w", "", "--v", ""});
  EXPECT_EQ(top.code, 0);
  EXPECT_EQ(dot_nodes(top.out), 4u);
  EXPECT_NE(top.out.find("J={0};w=[];v=[];K={};dim=2"), std::string::npos);
  const auto bottom = run({"closure", "--type", "A1", "--J", "", "--w", "", "--v", ""});
  EXPECT_EQ(dot_nodes(bottom.out), 2u);
  const auto single = run({"closure", "--type", "A1", "--J", "", "--w", "0", "--v", ""});
  EXPECT_EQ(dot_nodes(single.out), 1u);
}

TEST(Cli, ClosureRejectsBadPieces) {
  EXPECT_EQ(run({"closure", "--type", "A1", "--K", "all", "--J", "", "--w", "", "--v", "0"}).code, 2);
  EXPECT_EQ(run({"closure", "--type", "A1", "--J", "", "--w", "0,0", "--v", ""}).code, 2);
  EXPECT_EQ(run({"closure", "--type", "A1", "--J", "", "--w", "x", "--v", ""}).code, 2);
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(run({"verify", "--type", "A1", "--suite", "all"}).code, 0);
  EXPECT_EQ(run({"verify", "--type", "B2", "--suite", "steinberg"}).code, 0);
  EXPECT_EQ(run({"verify", "--type", "A2", "--delta", "1,0", "--suite", "lemma7"}).code, 0);
}

TEST(Cli, VerifyFailurePrintsWitness) {
  const auto r = run({"verify", "--type", "A2", "--delta", "1,0", "--suite", "steinberg"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("type=A2 delta=[1,0] multiplicity: J={} T={} multiplicity=3 expected=1"), std::string::npos);
  EXPECT_EQ(run({"verify", "--type", "A2", "--delta", "1,0", "--suite", "steinberg", "--sign", "orbits"}).code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--type", "A2", "--delta", "1,0", "--suite", "all"};
  const auto a = run(args);
  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  const auto b = run(parallel);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
}

TEST(Cli, SuitesCanBeCombined) {
  const auto r = run({"verify", "--type", "A1", "--suite", "partition,lemma7", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 3u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "Q2"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A2", "--delta", "0,0"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "B2", "--delta", "1,0"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A2", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A2", "--sign", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A4", "--rank-cap", "3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--type", "A2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--type", "A2", "--pieces", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SteinbergTable) {
  const auto ok = run({"steinberg-table", "--type", "A1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "type,delta,J,T,multiplicity,expected,pass\nA1,\"[0]\",0,0,1,1,true\nA1,\"[0]\",1,0,1,1,true\n"
                    "A1,\"[0]\",1,1,-1,-1,true\n");
  const auto bad = run({"steinberg-table", "--type", "A2", "--delta", "1,0"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("A2,\"[1,0]\",0,0,3,1,false"), std::string::npos);
}

TEST(Cli, TwistedClasses) {
  const auto r = run({"twisted-classes", "--type", "A2", "--K", "all", "--sigma", "1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"sigma\": \"{0->1,1->0}\""), std::string::npos);
  // Three classes: count the top-level class arrays by their opening lines.
  std::size_t classes = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (line == "    [") ++classes;
  EXPECT_EQ(classes, 3u);
  EXPECT_EQ(run({"twisted-classes", "--type", "A2", "--K", "0", "--sigma", "1"}).code, 2);
}

TEST(Cli, ConfigFileAndOutPath) {
  const std::string cfg = testing::TempDir() + "weyl_strata_cfg.json";
  const std::string dst = testing::TempDir() + "weyl_strata_out.csv";
  std::ofstream(cfg) << R"({"cartan": [[2, -1], [-1, 2]], "label": "mine", "delta": [1, 0]})";
  const auto r = run({"enumerate", "--config", cfg, "--semistable", "--format", "csv", "--out", dst});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dst);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(lines(text.str()), 5u);
  std::ofstream(cfg) << "{ not json";
  EXPECT_EQ(run({"enumerate", "--config", cfg, "--semistable"}).code, 2);
  std::remove(cfg.c_str());
  std::remove(dst.c_str());
}
