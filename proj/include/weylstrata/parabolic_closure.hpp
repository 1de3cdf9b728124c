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

#include <utility>
#include <vector>

#include "weylstrata/compactification.hpp"

namespace weylstrata {

/// J_delta: the largest delta-stable subset of J.
Subset j_delta(Subset j, const DiagramAut& delta);

/// Throws kKNotDeltaStable unless delta(K) = K.
void require_delta_stable(Subset k, const DiagramAut& delta);

/// Does the coset x W_J meet W^delta? Decided by scanning the coset.
bool coset_meets_fixed(const WeylGroup& g, WeylElement x, Subset j, const DiagramAut& delta);

/// {x in ^K W^J : x W_J meets W^delta}, in id order.
std::vector<WeylElement> epsilon_target(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta);

/// ^K W^{J_delta} intersected with W^delta, in id order.
std::vector<WeylElement> epsilon_domain(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta);

/// w -> min(w W_J) on ^K W^{J_delta} and W^delta.
struct EpsilonMap {
  Subset j;
  Subset k;
  DiagramAut delta;
  std::vector<std::pair<WeylElement, WeylElement>> pairs;  // (w, epsilon(w)) in w order
};

/// Builds epsilon and checks it is a bijection onto epsilon_target. Throws
/// kBijectionFailure with a witness otherwise.
EpsilonMap epsilon(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta);

/// max{K' in K : delta(K') = K', x^{-1}(K') in J}, by union of all qualifying subsets.
Subset max_stable_preimage(const WeylGroup& g, WeylElement x, Subset j, Subset k, const DiagramAut& delta);

/// K intersected with w(J_delta): nodes k in K whose root w^{-1}(alpha_k) is simple in J_delta.
Subset k_cap_w_j_delta(const WeylGroup& g, WeylElement w, Subset j, Subset k, const DiagramAut& delta);

/// {(J, delta(w), w, K) : J in I, w in ^K W^J, w W_J meets W^delta}, canonical order.
std::vector<PieceIndex> parabolic_closure_index(const WeylGroup& g, Subset k, const DiagramAut& delta);

/// The three descriptions of the same piece set, each sorted canonically with
/// duplicates removed.
struct PPIndexSets {
  std::vector<PieceIndex> by_twisted_reps;  ///< w in ^K W^{J_delta} and W^delta, per J
  std::vector<PieceIndex> j_outer;          ///< J outer, w in ^K W and W^delta inner
  std::vector<PieceIndex> w_outer;          ///< w in ^K W and W^delta outer, J inner
};
PPIndexSets pp_index_sets(const WeylGroup& g, Subset k, const DiagramAut& delta);

/// (J, w) with w in ^K W^{J_delta} and W^delta and w^{-1}(K) simple inside J_delta.
struct IsolatedIndex {
  Subset j;
  WeylElement w;
  bool operator==(const IsolatedIndex& other) const = default;
};
std::vector<IsolatedIndex> isolated_boundary_index(const WeylGroup& g, Subset k, const DiagramAut& delta);

}  // namespace weylstrata
