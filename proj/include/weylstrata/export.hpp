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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylstrata/compactification.hpp"

namespace weylstrata {

/// "[1,0]" for a diagram automorphism, "[0,1]" for the identity on rank 2.
std::string delta_label(const DiagramAut& delta);

/// One failed check with enough context to reproduce it.
struct Failure {
  std::string check;
  std::string witness;
  /// Set when the suite stopped on a library error that is not a failed
  /// identity (bad input reaching an internal call, for instance).
  bool internal = false;
};

/// How often a named check ran and how often it failed.
struct Tally {
  std::string check;
  std::uint64_t cases = 0;
  std::uint64_t failed = 0;
};

/// A property that is recorded but not asserted.
struct Observation {
  std::string check;
  std::uint64_t checked = 0;
  std::uint64_t flagged = 0;
  std::string first_witness;
};

/// Result of one verification suite on one (type, delta).
struct Report {
  std::string suite;
  std::string type;
  std::string delta;
  std::uint64_t cases = 0;
  std::vector<Tally> tallies;
  std::vector<Failure> failures;
  std::vector<Observation> observations;
  /// Wall time, only filled in when timing was requested.
  std::optional<double> seconds;

  bool pass() const { return failures.empty(); }
  /// Failures of one named check.
  std::uint64_t failed(const std::string& check) const;
  /// Cases of one named check.
  std::uint64_t cases_of(const std::string& check) const;
};

/// 0 if every report passes, 3 if an identity check failed, 1 otherwise.
int exit_code(const std::vector<Report>& reports);

std::string reports_to_json(const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);

/// Nodes and covering edges of a closure poset or one of its downsets.
struct PosetView {
  std::vector<PieceIndex> nodes;
  std::vector<int> dims;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (lower, upper) into nodes
};

PosetView full_view(const ClosurePoset& poset);
/// The downset of poset.pieces()[top], renumbered in canonical order.
PosetView downset_view(const ClosurePoset& poset, std::size_t top);

/// "J={0};w=[];v=[0];K={};dim=2".
std::string node_label(const WeylGroup& g, const PieceIndex& p, int dim);

/// DOT text, edges pointing from lower to upper. Throws kNotAPoset if the
/// edges contain a cycle.
std::string to_dot(const WeylGroup& g, const PosetView& view);
/// Same content as JSON: the pieces table plus "covers": [[lower, upper], ...].
std::string poset_to_json(const WeylGroup& g, const DiagramAut& delta, const PosetView& view);

/// {"type", "delta", "pieces": [{"J", "w", "v", "K", "dim"}]}.
std::string pieces_to_json(const WeylGroup& g, const DiagramAut& delta, const std::vector<PieceIndex>& pieces);
/// Header "J,w,v,K,dim"; words are quoted.
std::string pieces_to_csv(const WeylGroup& g, const std::vector<PieceIndex>& pieces);
/// Parses pieces_to_json output. Words may be any reduced word; they are
/// renormalized. Throws kParseError on malformed input or a non-reduced word,
/// kInvalidIndex if a record is not a valid piece.
std::vector<PieceIndex> pieces_from_json(const WeylGroup& g, const std::string& text);

/// One (J, T) cell of the Steinberg table.
struct SteinbergRow {
  Subset j;
  Subset t;
  int multiplicity = 0;
  int expected = 0;
};

/// Header "type,delta,J,T,multiplicity,expected,pass"; subsets as bitmasks.
std::string steinberg_to_csv(const std::string& type, const DiagramAut& delta, const std::vector<SteinbergRow>& rows);
std::string steinberg_to_json(const std::string& type, const DiagramAut& delta,
                              const std::vector<SteinbergRow>& rows);

/// G-piece indices (J, w) as JSON or CSV with columns J,w.
std::string g_pieces_to_json(const WeylGroup& g, const DiagramAut& delta, const std::vector<GPieceIndex>& pieces);
std::string g_pieces_to_csv(const WeylGroup& g, const std::vector<GPieceIndex>& pieces);

/// Parses a reduced word such as "[0,1]", "0,1" or "" (identity).
/// Throws kParseError if it is malformed or not reduced.
WeylElement parse_word(const WeylGroup& g, const std::string& text);

}  // namespace weylstrata
