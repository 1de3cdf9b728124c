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

#include "weylstrata/export.hpp"

#include <json.hpp>
#include <sstream>

#include "weylstrata/errors.hpp"

namespace weylstrata {

using Json = nlohmann::ordered_json;

namespace {

Json word_json(const WeylGroup& g, WeylElement w) { return Json(g.reduced_word(w)); }

Json piece_json(const WeylGroup& g, const PieceIndex& p) {
  Json r;
  r["J"] = p.j.bits();
  r["w"] = word_json(g, p.w);
  r["v"] = word_json(g, p.v);
  r["K"] = p.k.bits();
  r["dim"] = piece_dimension(g, p);
  return r;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

WeylElement word_from_json(const WeylGroup& g, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kParseError, "word must be an array, got " + j.dump());
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::kParseError, "word letter must be an integer, got " + x.dump());
    letters.push_back(x.get<int>());
  }
  const WeylElement w = g.from_word(letters);
  if (g.length(w) != static_cast<int>(letters.size()))
    fail(ErrorCode::kParseError, "word " + j.dump() + " is not reduced");
  return w;
}

Subset mask_from_json(const WeylGroup& g, const Json& j) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > g.all_nodes().bits())
    fail(ErrorCode::kParseError, "subset must be a bitmask inside I, got " + j.dump());
  return Subset(j.get<std::uint32_t>());
}

}  // namespace

std::string delta_label(const DiagramAut& delta) { return Json(delta.images()).dump(); }

std::uint64_t Report::failed(const std::string& check) const {
  for (const auto& t : tallies)
    if (t.check == check) return t.failed;
  return 0;
}

std::uint64_t Report::cases_of(const std::string& check) const {
  for (const auto& t : tallies)
    if (t.check == check) return t.cases;
  return 0;
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports)
    for (const auto& f : r.failures) {
      if (!f.internal) return 3;
      code = 1;
    }
  return code;
}

std::string reports_to_json(const std::vector<Report>& reports) {
  Json out;
  bool pass = true;
  out["reports"] = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["suite"] = r.suite;
    j["type"] = r.type;
    j["delta"] = r.delta;
    j["cases"] = r.cases;
    j["pass"] = r.pass();
    j["checks"] = Json::array();
    for (const auto& t : r.tallies)
      j["checks"].push_back({{"check", t.check}, {"cases", t.cases}, {"failed", t.failed}});
    j["failures"] = Json::array();
    for (const auto& f : r.failures) {
      Json fj = {{"check", f.check}, {"witness", f.witness}};
      if (f.internal) fj["internal"] = true;
      j["failures"].push_back(std::move(fj));
    }
    j["observations"] = Json::array();
    for (const auto& o : r.observations)
      j["observations"].push_back(
          {{"check", o.check}, {"checked", o.checked}, {"flagged", o.flagged}, {"first_witness", o.first_witness}});
    if (r.seconds) j["seconds"] = *r.seconds;
    out["reports"].push_back(std::move(j));
    pass = pass && r.pass();
  }
  out["pass"] = pass;
  return dump(out);
}

std::string reports_to_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  const bool timed = !reports.empty() && reports.front().seconds.has_value();
  os << "suite,type,delta,cases,failures,pass,first_witness" << (timed ? ",seconds" : "") << "\n";
  for (const auto& r : reports) {
    std::string witness = r.failures.empty() ? "" : r.failures.front().check + ": " + r.failures.front().witness;
    for (auto& c : witness)
      if (c == '"') c = '\'';
    os << r.suite << "," << r.type << "," << quoted(r.delta) << "," << r.cases << "," << r.failures.size() << ","
       << (r.pass() ? "true" : "false") << "," << quoted(witness);
    if (timed) os << "," << r.seconds.value_or(0.0);
    os << "\n";
  }
  return os.str();
}

PosetView full_view(const ClosurePoset& poset) {
  PosetView v;
  v.nodes = poset.pieces();
  for (std::size_t i = 0; i < poset.size(); ++i) v.dims.push_back(poset.dimension(i));
  v.covers = poset.covers();
  return v;
}

PosetView downset_view(const ClosurePoset& poset, std::size_t top) {
  const auto& down = poset.downset(top);
  std::vector<std::size_t> old_ids;
  std::vector<std::size_t> new_id(poset.size(), poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (down[i]) {
      new_id[i] = old_ids.size();
      old_ids.push_back(i);
    }
  PosetView v;
  for (auto i : old_ids) {
    v.nodes.push_back(poset.pieces()[i]);
    v.dims.push_back(poset.dimension(i));
  }
  // Covers of a downset are the covers of the whole poset restricted to it.
  for (const auto& [lo, up] : poset.covers())
    if (down[lo] && down[up]) v.covers.emplace_back(new_id[lo], new_id[up]);
  return v;
}

std::string node_label(const WeylGroup& g, const PieceIndex& p, int dim) {
  return "J=" + to_string(p.j) + ";w=" + word_string(g, p.w) + ";v=" + word_string(g, p.v) + ";K=" + to_string(p.k) +
         ";dim=" + std::to_string(dim);
}

std::string to_dot(const WeylGroup& g, const PosetView& view) {
  // Kahn's algorithm: anything left over sits on a cycle.
  const std::size_t n = view.nodes.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [lo, up] : view.covers) {
    out[lo].push_back(up);
    ++indegree[up];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto i = ready.back();
    ready.pop_back();
    ++seen;
    for (auto j : out[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  if (seen != n) fail(ErrorCode::kNotAPoset, "cover relation has a cycle");

  if (n == 0) return "digraph { }\n";
  std::ostringstream os;
  os << "digraph {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"" << node_label(g, view.nodes[i], view.dims[i]) << "\"];\n";
  for (const auto& [lo, up] : view.covers) os << "  n" << lo << " -> n" << up << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const WeylGroup& g, const DiagramAut& delta, const PosetView& view) {
  Json out;
  out["type"] = g.cartan().label();
  out["delta"] = delta.images();
  out["pieces"] = Json::array();
  for (const auto& p : view.nodes) out["pieces"].push_back(piece_json(g, p));
  out["covers"] = Json::array();
  for (const auto& [lo, up] : view.covers) out["covers"].push_back({lo, up});
  return dump(out);
}

std::string pieces_to_json(const WeylGroup& g, const DiagramAut& delta, const std::vector<PieceIndex>& pieces) {
  Json out;
  out["type"] = g.cartan().label();
  out["delta"] = delta.images();
  out["pieces"] = Json::array();
  for (const auto& p : pieces) out["pieces"].push_back(piece_json(g, p));
  return dump(out);
}

std::string pieces_to_csv(const WeylGroup& g, const std::vector<PieceIndex>& pieces) {
  std::ostringstream os;
  os << "J,w,v,K,dim\n";
  for (const auto& p : pieces)
    os << p.j.bits() << "," << quoted(word_string(g, p.w)) << "," << quoted(word_string(g, p.v)) << ","
       << p.k.bits() << "," << piece_dimension(g, p) << "\n";
  return os.str();
}

std::vector<PieceIndex> pieces_from_json(const WeylGroup& g, const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("delta") || !doc.contains("pieces") || !doc["pieces"].is_array())
    fail(ErrorCode::kParseError, "expected an object with \"delta\" and \"pieces\"");
  std::vector<int> images;
  for (const auto& x : doc["delta"]) {
    if (!x.is_number_integer()) fail(ErrorCode::kParseError, "delta entries must be integers");
    images.push_back(x.get<int>());
  }
  const DiagramAut delta = DiagramAut::from_images(g.cartan(), images);
  std::vector<PieceIndex> out;
  for (const auto& r : doc["pieces"]) {
    for (const char* key : {"J", "w", "v", "K"})
      if (!r.contains(key)) fail(ErrorCode::kParseError, std::string("piece record without \"") + key + "\"");
    const PieceIndex p = make_piece(g, mask_from_json(g, r["J"]), word_from_json(g, r["w"]),
                                    word_from_json(g, r["v"]), mask_from_json(g, r["K"]), delta);
    if (r.contains("dim") && r["dim"] != piece_dimension(g, p))
      fail(ErrorCode::kParseError, "dimension " + r["dim"].dump() + " does not match " + describe(g, p));
    out.push_back(p);
  }
  return out;
}

std::string steinberg_to_csv(const std::string& type, const DiagramAut& delta, const std::vector<SteinbergRow>& rows) {
  std::ostringstream os;
  os << "type,delta,J,T,multiplicity,expected,pass\n";
  for (const auto& r : rows)
    os << type << "," << quoted(delta_label(delta)) << "," << r.j.bits() << "," << r.t.bits() << ","
       << r.multiplicity << "," << r.expected << "," << (r.multiplicity == r.expected ? "true" : "false") << "\n";
  return os.str();
}

std::string steinberg_to_json(const std::string& type, const DiagramAut& delta,
                              const std::vector<SteinbergRow>& rows) {
  Json out;
  out["type"] = type;
  out["delta"] = delta.images();
  out["rows"] = Json::array();
  for (const auto& r : rows)
    out["rows"].push_back({{"J", r.j.bits()},
                           {"T", r.t.bits()},
                           {"multiplicity", r.multiplicity},
                           {"expected", r.expected},
                           {"pass", r.multiplicity == r.expected}});
  return dump(out);
}

std::string g_pieces_to_json(const WeylGroup& g, const DiagramAut& delta, const std::vector<GPieceIndex>& pieces) {
  Json out;
  out["type"] = g.cartan().label();
  out["delta"] = delta.images();
  out["pieces"] = Json::array();
  for (const auto& p : pieces) out["pieces"].push_back({{"J", p.j.bits()}, {"w", word_json(g, p.w)}});
  return dump(out);
}

std::string g_pieces_to_csv(const WeylGroup& g, const std::vector<GPieceIndex>& pieces) {
  std::ostringstream os;
  os << "J,w\n";
  for (const auto& p : pieces) os << p.j.bits() << "," << quoted(word_string(g, p.w)) << "\n";
  return os.str();
}

WeylElement parse_word(const WeylGroup& g, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') fail(ErrorCode::kParseError, "unbalanced brackets in word \"" + text + "\"");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> letters;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::kParseError, "bad letter \"" + item + "\" in word \"" + text + "\"");
    }
    if (item.find_first_not_of(' ', used) != std::string::npos)
      fail(ErrorCode::kParseError, "bad letter \"" + item + "\" in word \"" + text + "\"");
    letters.push_back(letter);
  }
  const WeylElement w = g.from_word(letters);
  if (g.length(w) != static_cast<int>(letters.size()))
    fail(ErrorCode::kParseError, "word \"" + text + "\" is not reduced");
  return w;
}

}  // namespace weylstrata
