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

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylstrata/admissible.hpp"
#include "weylstrata/weyl_group.hpp"

namespace weylstrata {

/// Index [J, w, v]_{K, delta} of a P_K-stable piece, with w in W^{delta(J)}
/// and v in ^K W.
struct PieceIndex {
  Subset j;
  WeylElement w;
  WeylElement v;
  Subset k;
  DiagramAut delta;

  bool operator==(const PieceIndex& other) const = default;
};

/// Canonical order: J bitmask, then w, then v (ShortLex ids), then K.
bool canonical_less(const PieceIndex& a, const PieceIndex& b);

/// Validating constructor; throws kInvalidIndex unless w in W^{delta(J)} and v in ^K W.
PieceIndex make_piece(const WeylGroup& g, Subset j, WeylElement w, WeylElement v, Subset k, const DiagramAut& delta);

/// l(w0) + |J| + l(v) - l(w) + l(w0^K).
int piece_dimension(const WeylGroup& g, const PieceIndex& p);

/// All pieces for (K, delta) in canonical order.
std::vector<PieceIndex> enumerate_pieces(const WeylGroup& g, Subset k, const DiagramAut& delta);

/// [J', w', v'] lies in the closure of [J, w, v]: J' in J and there are x in
/// W_K, y in W_J with x w' >= w delta(y) and x v' <= v y. Direct scan.
bool closure_leq(const WeylGroup& g, const PieceIndex& lower, const PieceIndex& upper);

/// For each J' inside p.J, the largest dimension of a piece p' <= p with p'.J = J'.
std::map<Subset, int> boundary_profile(const WeylGroup& g, const PieceIndex& p);

/// How "w^{-1}(K') inside J" is read in the K1 definition.
enum class K1Reading {
  kLiteral,  ///< w^{-1}(K') inside J, as written
  kDeltaJ,   ///< w^{-1}(K') inside delta(J), the side on which w is minimal
};

/// max{K' in K : w^{-1}(K') in J, w^{-1}(K') = delta(v^{-1}(K'))}.
Subset K1_of(const WeylGroup& g, const PieceIndex& p, K1Reading reading = K1Reading::kDeltaJ);

/// Index (J, w) of a G-stable piece Z_{J, w; delta}.
struct GPieceIndex {
  Subset j;
  WeylElement w;
  bool operator==(const GPieceIndex& other) const = default;
};

/// The semi-stable locus: {(J, e) : J in I}.
std::vector<GPieceIndex> semistable_g_pieces(const WeylGroup& g, const DiagramAut& delta);

/// The admissible triple (J1, J, delta') with J1 = w0 w0^{delta(J)} delta(J)
/// and delta' = delta^{-1} o Ad(w0 w0^{delta(J)})^{-1}.
AdmissibleTriple compactification_triple(const WeylGroup& g, Subset j, const DiagramAut& delta);

/// (P_K)_Delta . [J, x, y]_delta as a normalized piece: the (w, v) with
/// x = a w delta(b), y = a v b, l(y) - l(x) = l(v) - l(w) for some a in W_K,
/// b in W_J. Throws kNoNormalization if nothing qualifies.
PieceIndex saturate_piece(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                          const DiagramAut& delta);

/// Pieces [J, w, v]_{K, delta} in the closure of (P_K)_Delta . [J, x, y]_delta
/// inside Z_{J, delta}, by the length-additive Bruhat criterion. Canonical order.
std::vector<PieceIndex> saturate_closure(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                                         const DiagramAut& delta);

/// The piece of (P_K)_Delta . [J, x, y]_delta: the unique top-dimensional
/// member of saturate_closure. Throws kConsistencyError if it is not unique.
PieceIndex containing_piece(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                            const DiagramAut& delta);

/// Does G_Delta . [J, x, y]_delta lie in the semi-stable locus?
bool in_semistable_locus(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, const DiagramAut& delta);

/// The closure relation on all pieces for a fixed (K, delta), as bitset rows.
class ClosurePoset {
 public:
  ClosurePoset(const WeylGroup& g, Subset k, const DiagramAut& delta, int jobs = 1);

  const std::vector<PieceIndex>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  /// Index of a piece in canonical order; throws kInvalidIndex if absent.
  std::size_t index_of(const PieceIndex& p) const;
  /// pieces()[lower] lies in the closure of pieces()[upper].
  bool leq(std::size_t lower, std::size_t upper) const { return down_[upper][lower]; }
  const boost::dynamic_bitset<>& downset(std::size_t upper) const { return down_[upper]; }
  int dimension(std::size_t i) const { return dims_[i]; }

  /// First violation of reflexivity, antisymmetry or transitivity, if any.
  std::optional<std::string> partial_order_violation() const;
  /// Covering pairs (lower, upper). Throws kNotAPoset if the relation has a cycle.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  const WeylGroup* g_;
  std::vector<PieceIndex> pieces_;
  std::vector<int> dims_;
  std::vector<boost::dynamic_bitset<>> down_;
};

/// "[J={0},w=[0],v=[],K={}]".
std::string describe(const WeylGroup& g, const PieceIndex& p);

}  // namespace weylstrata
