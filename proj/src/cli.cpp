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

#include "weylstrata/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "weylstrata/errors.hpp"
#include "weylstrata/export.hpp"
#include "weylstrata/parabolic_closure.hpp"
#include "weylstrata/verify.hpp"

namespace weylstrata {

namespace {

using Json = nlohmann::ordered_json;

/// Options shared by every command. Empty strings mean "not given".
struct CommonOptions {
  std::string type;
  std::string config;
  std::string delta;
  std::string format;
  std::string out;
  int rank_cap = 0;
  int jobs = 0;
};

/// Everything a command needs once the configuration is validated.
struct Setup {
  std::unique_ptr<WeylGroup> group;
  DiagramAut delta;
  int jobs = 1;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open config file " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, "config " + path + ": " + e.what());
  }
}

/// Precedence: command-line flag, then WEYL_STRATA_RANK_CAP, then config, then the default.
int resolve_rank_cap(const CommonOptions& opt, const Json& cfg) {
  if (opt.rank_cap > 0) return opt.rank_cap;
  if (std::getenv("WEYL_STRATA_RANK_CAP") == nullptr && cfg.contains("rank_cap")) {
    if (!cfg["rank_cap"].is_number_integer() || cfg["rank_cap"].get<int>() < 1)
      fail(ErrorCode::kParseError, "config rank_cap must be a positive integer");
    return cfg["rank_cap"].get<int>();
  }
  return default_rank_cap();
}

Setup make_setup(const CommonOptions& opt) {
  Json cfg = Json::object();
  if (!opt.config.empty()) cfg = read_config(opt.config);
  if (!cfg.is_object()) fail(ErrorCode::kParseError, "config must be a JSON object");

  std::optional<CartanType> ct;
  if (!opt.type.empty()) {
    ct = CartanType::named(opt.type);
  } else if (cfg.contains("type")) {
    if (!cfg["type"].is_string()) fail(ErrorCode::kParseError, "config type must be a string");
    ct = CartanType::named(cfg["type"].get<std::string>());
  } else if (cfg.contains("cartan")) {
    std::vector<std::vector<int>> m;
    try {
      m = cfg["cartan"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::kParseError, "config cartan must be an integer matrix");
    }
    ct = CartanType(cfg.value("label", std::string("custom")), m);
  } else {
    fail(ErrorCode::kParseError, "no Cartan type: pass --type or a config with \"type\" or \"cartan\"");
  }

  Setup s;
  s.group = std::make_unique<WeylGroup>(*ct, resolve_rank_cap(opt, cfg));
  std::vector<int> images;
  if (!opt.delta.empty()) {
    images = parse_int_list(opt.delta);
  } else if (cfg.contains("delta")) {
    try {
      images = cfg["delta"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::kParseError, "config delta must be an integer array");
    }
  }
  s.delta = images.empty() ? DiagramAut::identity(ct->rank()) : DiagramAut::from_images(*ct, images);
  s.jobs = opt.jobs > 0 ? opt.jobs : cfg.value("jobs", 1);
  if (s.jobs < 1) fail(ErrorCode::kParseError, "jobs must be positive");
  return s;
}

void emit(const CommonOptions& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) fail(ErrorCode::kParseError, "cannot write " + opt.out);
  file << text;
}

void add_common(CLI::App* cmd, CommonOptions& opt, const std::string& formats) {
  cmd->add_option("--type", opt.type, "Named Cartan type, e.g. A2, B3, G2");
  cmd->add_option("--config", opt.config, "JSON config with \"type\" or \"cartan\", optional \"delta\", \"rank_cap\"");
  cmd->add_option("--delta", opt.delta, "Diagram automorphism as node images, e.g. 1,0 (default identity)");
  cmd->add_option("--format", opt.format, "Output format: " + formats);
  cmd->add_option("--out", opt.out, "Write output to this file instead of stdout");
  cmd->add_option("--rank-cap", opt.rank_cap, "Largest rank accepted (overrides WEYL_STRATA_RANK_CAP)");
}

std::string check_format(const std::string& given, const std::vector<std::string>& allowed) {
  if (given.empty()) return allowed.front();
  for (const auto& a : allowed)
    if (a == given) return a;
  fail(ErrorCode::kParseError, "unsupported format \"" + given + "\"");
}

SignConvention parse_sign(const std::string& s) {
  if (s == "cardinality") return SignConvention::kCardinality;
  if (s == "orbits") return SignConvention::kDeltaOrbits;
  fail(ErrorCode::kParseError, "sign must be cardinality or orbits, got \"" + s + "\"");
}

std::vector<GPieceIndex> as_g_pieces(const std::vector<IsolatedIndex>& v) {
  std::vector<GPieceIndex> out;
  for (const auto& x : v) out.push_back({x.j, x.w});
  return out;
}

}  // namespace

Subset parse_subset(const std::string& text, int rank) {
  std::string body = trim(text);
  if (body == "all") return Subset::full(rank);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail(ErrorCode::kParseError, "unbalanced braces in subset \"" + text + "\"");
    body = body.substr(1, body.size() - 2);
  }
  Subset s;
  for (int node : parse_int_list(body)) {
    if (node < 0 || node >= rank)
      fail(ErrorCode::kParseError, "node " + std::to_string(node) + " out of range in \"" + text + "\"");
    s = s.with(node);
  }
  return s;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') fail(ErrorCode::kParseError, "unbalanced brackets in \"" + text + "\"");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  if (trim(body).empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) fail(ErrorCode::kParseError, "bad integer \"" + item + "\" in \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl-group index combinatorics of stable pieces, with exhaustive verification", "weyl-strata"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string k_text;
  std::string j_text;

  auto* enumerate = app.add_subcommand("enumerate", "List piece indices");
  add_common(enumerate, opt, "json|csv");
  bool pieces = false, semistable = false, closure_index = false, isolated = false;
  auto* g1 = enumerate->add_flag("--pieces", pieces, "P_K-stable pieces [J,w,v] (default K = {})");
  auto* g2 = enumerate->add_flag("--semistable", semistable, "G-pieces (J, e) of the semi-stable locus");
  auto* g3 = enumerate->add_flag("--parabolic-closure", closure_index, "pieces in the closure of P_K");
  auto* g4 = enumerate->add_flag("--isolated-boundary", isolated, "boundary indices (J, w) of isolated strata");
  g1->excludes(g2, g3, g4);
  g2->excludes(g3, g4);
  g3->excludes(g4);
  enumerate->add_option("--K", k_text, "Subset K: comma-separated nodes, \"\" for empty, \"all\" for I");

  auto* closure = app.add_subcommand("closure", "Export the downset of one piece");
  add_common(closure, opt, "dot|json");
  std::string w_text, v_text;
  closure->add_option("--K", k_text, "Subset K");
  closure->add_option("--J", j_text, "Subset J of the piece")->required();
  closure->add_option("--w", w_text, "Reduced word of w, e.g. [0,1] or \"\" for e");
  closure->add_option("--v", v_text, "Reduced word of v");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, opt, "json|csv");
  std::vector<std::string> suites;
  std::string sign_text = "cardinality";
  bool timing = false;
  verify->add_option("--suite", suites, "Suite name or all (repeatable, comma-separated)")->delimiter(',');
  verify->add_option("--sign", sign_text, "Steinberg sign: cardinality (as stated) or orbits");
  verify->add_option("--jobs", opt.jobs, "Worker threads");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  auto* twisted = app.add_subcommand("twisted-classes", "Twisted conjugacy classes of W_K");
  add_common(twisted, opt, "json");
  std::string sigma_text;
  twisted->add_option("--K", k_text, "Subset K");
  twisted->add_option("--sigma", sigma_text, "Images of the nodes of K in increasing order (default identity)");

  auto* steinberg = app.add_subcommand("steinberg-table", "Steinberg multiplicities for every (J, T)");
  add_common(steinberg, opt, "csv|json");
  steinberg->add_option("--sign", sign_text, "cardinality (as stated) or orbits");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    Setup s = make_setup(opt);
    const WeylGroup& g = *s.group;
    const int rank = g.rank();

    if (*enumerate) {
      const std::string fmt = check_format(opt.format, {"json", "csv"});
      const Subset k = parse_subset(k_text, rank);
      if (!pieces && !semistable && !closure_index && !isolated)
        fail(ErrorCode::kParseError, "enumerate needs one of --pieces, --semistable, --parabolic-closure, --isolated-boundary");
      if (pieces || closure_index) {
        const auto list = pieces ? enumerate_pieces(g, k, s.delta) : parabolic_closure_index(g, k, s.delta);
        if (closure_index) {
          const auto sets = pp_index_sets(g, k, s.delta);
          if (sets.by_twisted_reps != list || sets.j_outer != list || sets.w_outer != list)
            fail(ErrorCode::kConsistencyError, "index set for K=" + to_string(k) + " differs from its three descriptions");
        }
        emit(opt, fmt == "json" ? pieces_to_json(g, s.delta, list) : pieces_to_csv(g, list), out);
      } else {
        const auto list = semistable ? semistable_g_pieces(g, s.delta) : as_g_pieces(isolated_boundary_index(g, k, s.delta));
        emit(opt, fmt == "json" ? g_pieces_to_json(g, s.delta, list) : g_pieces_to_csv(g, list), out);
      }
      return kExitPass;
    }

    if (*closure) {
      const std::string fmt = check_format(opt.format, {"dot", "json"});
      const Subset k = parse_subset(k_text, rank);
      const PieceIndex p =
          make_piece(g, parse_subset(j_text, rank), parse_word(g, w_text), parse_word(g, v_text), k, s.delta);
      const ClosurePoset poset(g, k, s.delta, s.jobs);
      const auto view = downset_view(poset, poset.index_of(p));
      emit(opt, fmt == "dot" ? to_dot(g, view) : poset_to_json(g, s.delta, view), out);
      return kExitPass;
    }

    if (*verify) {
      const std::string fmt = check_format(opt.format, {"json", "csv"});
      VerifyOptions vo;
      vo.jobs = s.jobs;
      vo.sign = parse_sign(sign_text);
      vo.timing = timing;
      if (suites.empty()) suites.push_back("all");
      const auto reports = run_suites(g, s.delta, suites, vo);
      emit(opt, fmt == "json" ? reports_to_json(reports) : reports_to_csv(reports), out);
      for (const auto& r : reports)
        for (const auto& f : r.failures)
          err << "FAIL " << r.suite << " type=" << r.type << " delta=" << r.delta << " " << f.check << ": "
              << f.witness << "\n";
      return exit_code(reports);
    }

    if (*twisted) {
      check_format(opt.format, {"json"});
      const Subset k = parse_subset(k_text, rank);
      const auto sigma = sigma_text.empty() ? NodeBijection::identity(k)
                                            : NodeBijection::make(g.cartan(), k, parse_int_list(sigma_text));
      Json doc;
      doc["type"] = g.cartan().label();
      doc["K"] = k.bits();
      doc["sigma"] = sigma.describe();
      doc["classes"] = Json::array();
      for (const auto& cls : twisted_classes(g, k, sigma)) {
        Json words = Json::array();
        for (auto w : cls) words.push_back(g.reduced_word(w));
        doc["classes"].push_back(std::move(words));
      }
      emit(opt, doc.dump(2) + "\n", out);
      return kExitPass;
    }

    if (*steinberg) {
      const std::string fmt = check_format(opt.format, {"csv", "json"});
      const SignConvention sign = parse_sign(sign_text);
      std::vector<SteinbergRow> rows;
      for (auto j : subsets_of(g.all_nodes()))
        for (auto t : subsets_of(j_delta(j, s.delta)))
          if (s.delta.fixes(t))
            rows.push_back({j, t, steinberg_multiplicity(g, j, t, s.delta, sign), subset_sign(t, s.delta, sign)});
      const std::string label = g.cartan().label();
      emit(opt, fmt == "csv" ? steinberg_to_csv(label, s.delta, rows) : steinberg_to_json(label, s.delta, rows), out);
      int code = kExitPass;
      for (const auto& r : rows)
        if (r.multiplicity != r.expected) {
          err << "FAIL steinberg type=" << label << " delta=" << delta_label(s.delta) << " J=" << to_string(r.j)
              << " T=" << to_string(r.t) << " multiplicity=" << r.multiplicity << " expected=" << r.expected << "\n";
          code = kExitConsistency;
        }
      return code;
    }
  } catch (const Error& e) {
    if (e.is_consistency_failure()) {
      err << "CONSISTENCY " << e.what() << "\n";
      return kExitConsistency;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace weylstrata
