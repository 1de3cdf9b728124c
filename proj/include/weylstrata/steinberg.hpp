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

#include <map>
#include <vector>

#include "weylstrata/weyl_group.hpp"

namespace weylstrata {

/// How the sign of a delta-stable subset S is taken in alternating sums.
enum class SignConvention {
  kCardinality,  ///< (-1)^{|S|}, as written
  kDeltaOrbits,  ///< (-1)^{number of delta-orbits in S}
};

/// Which set is removed from J' in the condition and the closed form.
enum class DifferenceReading {
  kTranslated,  ///< J' - w I(J, I, w, delta): both sides are subsets of left ascents of w
  kLiteral,     ///< J' - I(J, I, w, delta), as written
};

int subset_sign(Subset s, const DiagramAut& delta, SignConvention convention);

/// W^{J_delta} intersected with W^delta, in id order.
std::vector<WeylElement> steinberg_domain(const WeylGroup& g, Subset j, const DiagramAut& delta);

/// I(J, K, w, delta) = w^{-1} K intersected with J_delta: nodes j in J_delta with
/// w(alpha_j) = alpha_k for some k in K. Requires delta(K) = K and w in
/// W^{J_delta} and W^delta (kPreconditionFailure otherwise).
Subset i_of(const WeylGroup& g, Subset j, Subset k, WeylElement w, const DiagramAut& delta);

/// J' = max{K : w in ^K W}, the left ascents of w.
Subset j_prime(const WeylGroup& g, WeylElement w);

/// J' minus either w I(J, I, w, delta) or I(J, I, w, delta).
Subset j_prime_difference(const WeylGroup& g, Subset j, WeylElement w, const DiagramAut& delta,
                          DifferenceReading reading);

/// Sum over delta-stable K' in I with w in ^{K'}W and I(J, K', w, delta) = K of sign(K').
/// Requires w in W^{J_delta} and W^delta and K inside I(J, I, w, delta).
int signed_sum_raw(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
                   SignConvention convention);

/// sign(K) if delta(K) = K and the J' difference is empty, else 0.
int signed_sum_closed_form(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
                           SignConvention convention, DifferenceReading reading = DifferenceReading::kTranslated);

/// signed_sum_raw, checked against the closed form; throws kConsistencyError on mismatch.
int signed_sum(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
               SignConvention convention, DifferenceReading reading = DifferenceReading::kTranslated);

struct ConditionPair {
  bool first = false;   ///< w in ^{K'}W and I(J, K', w, delta) = K
  bool second = false;  ///< K = delta(K) and w K in K' in w K plus the J' difference
};

/// Evaluates both conditions independently. Requires K inside I(J, I, w, delta)
/// and delta(K') = K'.
ConditionPair condition_equiv(const WeylGroup& g, Subset j, WeylElement w, Subset k, Subset k_prime,
                              const DiagramAut& delta, DifferenceReading reading = DifferenceReading::kTranslated);

/// Sum over delta-stable K of sign(K) * #{w in ^K W^{J_delta} and W^delta : I(J, K, w, delta) = T}.
/// Requires delta(T) = T and T inside J_delta.
int steinberg_multiplicity(const WeylGroup& g, Subset j, Subset t, const DiagramAut& delta,
                           SignConvention convention = SignConvention::kCardinality);

/// The same sums for every T that occurs, keyed by T; used to detect stray targets.
std::map<Subset, int> steinberg_all_targets(const WeylGroup& g, Subset j, const DiagramAut& delta,
                                            SignConvention convention = SignConvention::kCardinality);

}  // namespace weylstrata
