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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weylstrata/weyl_group.hpp"

namespace weylstrata {

/// A Cartan-preserving bijection between two subsets of nodes. It extends to
/// an isomorphism W_domain -> W_image by relabelling reduced words.
class NodeBijection {
 public:
  NodeBijection() = default;

  static NodeBijection identity(Subset s);
  /// images[k] is the image of the k-th node of `domain` in increasing order.
  /// Throws kAutMismatch if the map is not a Cartan-preserving bijection.
  static NodeBijection make(const CartanType& ct, Subset domain, const std::vector<int>& images);

  Subset domain() const { return domain_; }
  Subset image() const { return apply(domain_); }
  int operator()(int node) const { return image_[node]; }
  /// Image of s, which must lie inside the domain.
  Subset apply(Subset s) const;
  WeylElement apply(const WeylGroup& g, WeylElement w) const;
  NodeBijection inverse() const;
  bool is_identity() const;
  /// "{0->1,1->0}" rendering.
  std::string describe() const;

  bool operator==(const NodeBijection& other) const = default;

 private:
  Subset domain_;
  std::array<std::int8_t, kMaxRank> image_{};
};

/// (J1, J2, delta) with delta: W_J1 -> W_J2 induced by a node bijection.
struct AdmissibleTriple {
  Subset j1;
  Subset j2;
  NodeBijection delta;

  static AdmissibleTriple make(const CartanType& ct, Subset j1, Subset j2, const std::vector<int>& images);
  /// (J, J, id).
  static AdmissibleTriple diagonal(Subset j);

  bool operator==(const AdmissibleTriple& other) const = default;
};

/// Every admissible triple: all J1, J2 and all Cartan-preserving bijections,
/// ordered by (J1, J2, images).
std::vector<AdmissibleTriple> admissible_triples(const CartanType& ct);

/// Does K satisfy w1(K) in J1' and delta' w1(K) = w2 delta(K) (as sets of simple roots)?
bool satisfies_I_conditions(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                            const AdmissibleTriple& cp, Subset k);

/// I(w1, w2, c, c'): the maximal K inside J1 satisfying both conditions.
/// Requires w1 in W^{J1} and w2 in ^{J2'}W (kRepNotMinimal otherwise).
Subset compute_I(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                 const AdmissibleTriple& cp);

using ElementPair = std::pair<WeylElement, WeylElement>;

/// Dense code a * |W| + b for a pair of elements.
inline std::uint32_t pair_code(const WeylGroup& g, WeylElement a, WeylElement b) {
  return a.id() * static_cast<std::uint32_t>(g.order()) + b.id();
}
inline ElementPair pair_of(const WeylGroup& g, std::uint32_t code) {
  const auto n = static_cast<std::uint32_t>(g.order());
  return {g.element(code / n), g.element(code % n)};
}

/// The piece W_{c'} (w1 W_I, w2) W_c, with members as sorted pair codes.
struct Piece {
  WeylElement w1;
  WeylElement w2;
  Subset i;
  std::vector<std::uint32_t> members;
};

/// One piece per (w1, w2) in W^{J1} x ^{J2'}W, in (w1, w2) id order.
std::vector<Piece> partition_WxW(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp);

/// Closure of `seeds` under left W_{c'} and right W_c multiplication.
std::vector<std::uint32_t> close_under_action(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp,
                                              std::vector<std::uint32_t> seeds);

struct DoubleCoset {
  std::vector<std::uint32_t> members;  // sorted pair codes
  std::vector<std::uint32_t> minimal;  // minimal total length, sorted
  /// Members lying in W^{J1} x ^{J2'}W; distinguished iff non-empty.
  std::vector<std::uint32_t> reps;
  bool distinguished() const { return !reps.empty(); }
};

/// Outcome of comparing two distinguished cosets under both readings of
/// "for some (or any) w' in O'_min".
struct CosetOrder {
  bool some = false;
  bool any = false;
};

/// All (W_{c'}, W_c) double cosets of W x W, ordered by smallest member.
class DoubleCosetSpace {
 public:
  DoubleCosetSpace(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp);

  const std::vector<DoubleCoset>& cosets() const { return cosets_; }
  std::size_t coset_of(std::uint32_t code) const { return coset_of_[code]; }
  std::size_t coset_of(WeylElement a, WeylElement b) const { return coset_of_[pair_code(*g_, a, b)]; }
  /// Indices of the distinguished cosets.
  std::vector<std::size_t> distinguished() const;

  CosetOrder compare(std::size_t o, std::size_t o_prime) const;
  /// O <= O' using "some w' in O'_min". Throws kNotDistinguished.
  bool leq(std::size_t o, std::size_t o_prime) const;

 private:
  const WeylGroup* g_;
  std::vector<std::size_t> coset_of_;
  std::vector<DoubleCoset> cosets_;
};

/// sigma on W_I with sigma(w) = delta^{-1}(w2^{-1} delta'(w1 w w1^{-1}) w2),
/// as a bijection of I.
NodeBijection sigma_of(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                       const AdmissibleTriple& cp);

/// Orbits of W_K under x . w = x w sigma(x)^{-1}, each sorted, ordered by
/// smallest member. Throws kDomainMismatch unless sigma.domain() == K.
std::vector<std::vector<WeylElement>> twisted_classes(const WeylGroup& g, Subset k, const NodeBijection& sigma);

struct TwistedBijection {
  std::size_t classes = 0;
  std::size_t cosets_in_piece = 0;
  bool injective = false;
  bool surjective = false;
  bool holds() const { return injective && surjective && classes == cosets_in_piece; }
};

/// Checks that w -> (w1 w, w2) maps the sigma-twisted classes on W_I
/// bijectively onto the double cosets inside the piece.
TwistedBijection check_twisted_bijection(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp,
                                         const Piece& piece, const DoubleCosetSpace& space);

}  // namespace weylstrata
