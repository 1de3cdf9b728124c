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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylstrata/cartan.hpp"
#include "weylstrata/subset.hpp"

namespace weylstrata {

class WeylGroup;

/// Handle to an element of a particular WeylGroup.
///
/// Elements are numbered in ShortLex order of their lexicographically least
/// reduced word, so id order is the canonical tie-break order. Equality is
/// equality of the underlying root permutation.
class WeylElement {
 public:
  WeylElement() = default;

  const WeylGroup* group() const { return group_; }
  std::uint32_t id() const { return id_; }

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

 private:
  friend class WeylGroup;
  WeylElement(const WeylGroup* g, std::uint32_t id) : group_(g), id_(id) {}

  const WeylGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

/// A finite Weyl group with its root system, built once and immutable.
class WeylGroup {
 public:
  /// Largest group order this class will enumerate.
  static constexpr std::size_t kMaxOrder = 500000;

  explicit WeylGroup(CartanType ct, int rank_cap = default_rank_cap());
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const CartanType& cartan() const { return cartan_; }
  int rank() const { return rank_; }
  Subset all_nodes() const { return Subset::full(rank_); }
  std::size_t order() const { return length_.size(); }

  WeylElement identity() const { return {this, 0}; }
  WeylElement generator(int i) const { return {this, right_mul_[i]}; }
  WeylElement longest() const { return {this, longest_}; }
  WeylElement element(std::uint32_t id) const { return {this, id}; }
  std::vector<WeylElement> elements() const;

  int length(WeylElement w) const { return length_[checked(w)]; }
  WeylElement multiply(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement a) const { return {this, inverse_[checked(a)]}; }
  WeylElement left_mul(int i, WeylElement a) const { return {this, left_mul_[checked(a) * rank_ + i]}; }
  WeylElement right_mul(WeylElement a, int i) const { return {this, right_mul_[checked(a) * rank_ + i]}; }

  Subset left_descents(WeylElement w) const { return Subset(left_desc_[checked(w)]); }
  Subset right_descents(WeylElement w) const { return Subset(right_desc_[checked(w)]); }
  /// w is in W^J: no right descent in J.
  bool is_right_minimal(WeylElement w, Subset j) const { return !right_descents(w).intersects(j); }
  /// w is in ^K W: no left descent in K.
  bool is_left_minimal(WeylElement w, Subset k) const { return !left_descents(w).intersects(k); }

  /// Generators occurring in a (any) reduced word of w.
  Subset support(WeylElement w) const { return Subset(support_[checked(w)]); }

  /// Bruhat order u <= w.
  bool bruhat_leq(WeylElement u, WeylElement w) const;

  /// Longest element of the parabolic subgroup W_J.
  WeylElement longest_element(Subset j) const;

  /// Unique minimal-length element of the double coset W_K w W_J.
  WeylElement min_coset_rep(WeylElement w, Subset k, Subset j) const;

  /// w(S) when w sends every simple root indexed by S to a simple root.
  std::optional<Subset> maps_into_simples(WeylElement w, Subset s) const;

  /// Lexicographically least reduced word, as node indices.
  const std::vector<int>& reduced_word(WeylElement w) const { return words_[checked(w)]; }
  /// Product s_{word[0]} * s_{word[1]} * ... (need not be reduced).
  WeylElement from_word(std::span<const int> word) const;

  /// The group automorphism induced by a diagram automorphism.
  WeylElement apply_aut(const DiagramAut& delta, WeylElement w) const;
  bool is_delta_fixed(const DiagramAut& delta, WeylElement w) const { return apply_aut(delta, w) == w; }
  /// Throws kAutMismatch unless `delta` is an automorphism of this group's Cartan matrix.
  void check_aut(const DiagramAut& delta) const;

  /// Elements of W_J in id order.
  const std::vector<WeylElement>& parabolic(Subset j) const { return parabolic_[check_subset(j).bits()]; }
  /// ^K W^J in id order.
  std::vector<WeylElement> double_minimal(Subset k, Subset j) const;

  int num_positive_roots() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  /// Root coordinates in the basis of simple roots. Index i < rank is alpha_i.
  const std::vector<int>& root(int r) const { return roots_[r]; }
  bool is_positive_root(int r) const { return r < num_pos_; }
  int act_on_root(WeylElement w, int r) const { return perm_[static_cast<std::size_t>(checked(w)) * num_roots() + r]; }

  /// Throws kGroupMismatch if `w` belongs to another group.
  void check_same(WeylElement w) const { (void)checked(w); }
  Subset check_subset(Subset s) const;

 private:
  std::uint32_t checked(WeylElement w) const;

  CartanType cartan_;
  int rank_;
  int num_pos_ = 0;
  std::vector<std::vector<int>> roots_;
  std::vector<std::uint16_t> perm_;  // |W| x #roots
  std::vector<int> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> left_mul_;   // |W| x rank
  std::vector<std::uint32_t> right_mul_;  // |W| x rank
  std::vector<std::uint32_t> left_desc_;
  std::vector<std::uint32_t> right_desc_;
  std::vector<std::uint32_t> support_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<WeylElement>> parabolic_;
  std::uint32_t longest_ = 0;
};

/// "[0,1,0]" rendering of the canonical reduced word.
std::string word_string(const WeylGroup& g, WeylElement w);

}  // namespace weylstrata

template <>
struct std::hash<weylstrata::WeylElement> {
  std::size_t operator()(const weylstrata::WeylElement& w) const noexcept { return std::hash<std::uint32_t>()(w.id()); }
};
