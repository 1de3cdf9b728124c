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
#include <string>
#include <vector>

#include "weylstrata/subset.hpp"

namespace weylstrata {

/// Rank cap used when none is given: WEYL_STRATA_RANK_CAP if set, else 6.
int default_rank_cap();

/// A finite-type Cartan matrix on the node set {0, ..., n-1}.
///
/// Convention: s_i(alpha_j) = alpha_j - a(i, j) alpha_i. Named types use
/// Bourbaki numbering shifted to start at 0.
class CartanType {
 public:
  /// Validates shape, diagonal, sign pattern and finite type.
  CartanType(std::string label, std::vector<std::vector<int>> matrix);

  /// "A1".."A8", "B2".., "C2".., "D4".., "E6"-"E8", "F4", "G2".
  static CartanType named(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  int entry(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  Subset all_nodes() const { return Subset::full(rank()); }

  bool operator==(const CartanType& other) const { return matrix_ == other.matrix_; }

 private:
  std::string label_;
  std::vector<std::vector<int>> matrix_;
};

/// A permutation of the nodes preserving the Cartan matrix.
class DiagramAut {
 public:
  DiagramAut() = default;

  static DiagramAut identity(int rank);
  /// Throws kAutMismatch if `images` is not a permutation preserving `ct`.
  static DiagramAut from_images(const CartanType& ct, const std::vector<int>& images);

  int rank() const { return rank_; }
  int operator()(int node) const { return image_[node]; }
  Subset apply(Subset s) const;
  Subset apply_inverse(Subset s) const;
  DiagramAut inverse() const;
  bool is_identity() const;
  bool fixes(Subset s) const { return apply(s) == s; }
  std::vector<int> images() const { return {image_.begin(), image_.begin() + rank_}; }
  /// Number of orbits of the automorphism on `s` (requires fixes(s)).
  int orbit_count(Subset s) const;

  bool operator==(const DiagramAut& other) const = default;

 private:
  std::array<std::uint8_t, kMaxRank> image_{};
  std::uint8_t rank_ = 0;
};

/// All Cartan-preserving node permutations, identity first, then lexicographic.
std::vector<DiagramAut> diagram_automorphisms(const CartanType& ct);

}  // namespace weylstrata
