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

#include "weylstrata/steinberg.hpp"

#include "weylstrata/errors.hpp"
#include "weylstrata/parabolic_closure.hpp"

namespace weylstrata {

namespace {

void require_domain(const WeylGroup& g, Subset j, WeylElement w, const DiagramAut& delta) {
  if (!g.is_right_minimal(w, j_delta(j, delta)) || !g.is_delta_fixed(delta, w))
    fail(ErrorCode::kPreconditionFailure,
         "w = " + word_string(g, w) + " is not in W^{J_delta} and W^delta for J = " + to_string(j));
}

/// i_of without precondition checks.
Subset raw_i_of(const WeylGroup& g, Subset jd, Subset k, WeylElement w) {
  Subset out;
  for (int j : jd.nodes()) {
    const auto image = g.maps_into_simples(w, Subset::single(j));
    if (image && image->is_subset_of(k)) out = out.with(j);
  }
  return out;
}

}  // namespace

int subset_sign(Subset s, const DiagramAut& delta, SignConvention convention) {
  const int n = convention == SignConvention::kCardinality ? s.size() : delta.orbit_count(s);
  return n % 2 == 0 ? 1 : -1;
}

std::vector<WeylElement> steinberg_domain(const WeylGroup& g, Subset j, const DiagramAut& delta) {
  g.check_aut(delta);
  const Subset jd = j_delta(j, delta);
  std::vector<WeylElement> out;
  for (auto w : g.elements())
    if (g.is_right_minimal(w, jd) && g.is_delta_fixed(delta, w)) out.push_back(w);
  return out;
}

Subset i_of(const WeylGroup& g, Subset j, Subset k, WeylElement w, const DiagramAut& delta) {
  g.check_aut(delta);
  g.check_subset(j);
  g.check_subset(k);
  if (!delta.fixes(k)) fail(ErrorCode::kPreconditionFailure, "K = " + to_string(k) + " is not delta-stable");
  require_domain(g, j, w, delta);
  return raw_i_of(g, j_delta(j, delta), k, w);
}

Subset j_prime(const WeylGroup& g, WeylElement w) { return g.all_nodes() - g.left_descents(w); }

Subset j_prime_difference(const WeylGroup& g, Subset j, WeylElement w, const DiagramAut& delta,
                          DifferenceReading reading) {
  const Subset full = i_of(g, j, g.all_nodes(), w, delta);
  if (reading == DifferenceReading::kLiteral) return j_prime(g, w) - full;
  return j_prime(g, w) - *g.maps_into_simples(w, full);
}

int signed_sum_raw(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
                   SignConvention convention) {
  const Subset full = i_of(g, j, g.all_nodes(), w, delta);
  if (!k.is_subset_of(full))
    fail(ErrorCode::kPreconditionFailure, "K = " + to_string(k) + " is not inside I(J, I, w) = " + to_string(full));
  const Subset jd = j_delta(j, delta);
  int sum = 0;
  for (auto kp : subsets_of(g.all_nodes())) {
    if (!delta.fixes(kp) || !g.is_left_minimal(w, kp)) continue;
    if (raw_i_of(g, jd, kp, w) == k) sum += subset_sign(kp, delta, convention);
  }
  return sum;
}

int signed_sum_closed_form(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
                           SignConvention convention, DifferenceReading reading) {
  if (!delta.fixes(k) || !j_prime_difference(g, j, w, delta, reading).empty()) return 0;
  return subset_sign(k, delta, convention);
}

int signed_sum(const WeylGroup& g, Subset j, WeylElement w, Subset k, const DiagramAut& delta,
               SignConvention convention, DifferenceReading reading) {
  const int raw = signed_sum_raw(g, j, w, k, delta, convention);
  const int closed = signed_sum_closed_form(g, j, w, k, delta, convention, reading);
  if (raw != closed)
    fail(ErrorCode::kConsistencyError, "signed sum for J=" + to_string(j) + ", w=" + word_string(g, w) + ", K=" +
                                           to_string(k) + " is " + std::to_string(raw) + ", closed form gives " +
                                           std::to_string(closed));
  return raw;
}

ConditionPair condition_equiv(const WeylGroup& g, Subset j, WeylElement w, Subset k, Subset k_prime,
                              const DiagramAut& delta, DifferenceReading reading) {
  const Subset full = i_of(g, j, g.all_nodes(), w, delta);
  if (!k.is_subset_of(full) || !delta.fixes(k_prime))
    fail(ErrorCode::kPreconditionFailure, "condition check needs K inside " + to_string(full) +
                                              " and a delta-stable K'");
  ConditionPair r;
  r.first = g.is_left_minimal(w, k_prime) && raw_i_of(g, j_delta(j, delta), k_prime, w) == k;
  // K inside I(J, I, w) means w sends each node of K to a simple root.
  const Subset wk = *g.maps_into_simples(w, k);
  const Subset diff = j_prime_difference(g, j, w, delta, reading);
  r.second = delta.fixes(k) && wk.is_subset_of(k_prime) && k_prime.is_subset_of(wk | diff) && !wk.intersects(diff);
  return r;
}

std::map<Subset, int> steinberg_all_targets(const WeylGroup& g, Subset j, const DiagramAut& delta,
                                            SignConvention convention) {
  g.check_aut(delta);
  const Subset jd = j_delta(j, delta);
  std::map<Subset, int> out;
  for (auto k : subsets_of(g.all_nodes())) {
    if (!delta.fixes(k)) continue;
    const int sign = subset_sign(k, delta, convention);
    for (auto w : epsilon_domain(g, j, k, delta)) out[raw_i_of(g, jd, k, w)] += sign;
  }
  return out;
}

int steinberg_multiplicity(const WeylGroup& g, Subset j, Subset t, const DiagramAut& delta,
                           SignConvention convention) {
  g.check_aut(delta);
  g.check_subset(j);
  const Subset jd = j_delta(j, delta);
  if (!delta.fixes(t) || !t.is_subset_of(jd))
    fail(ErrorCode::kPreconditionFailure, "T = " + to_string(t) + " must be delta-stable inside J_delta = " +
                                              to_string(jd));
  int sum = 0;
  for (auto k : subsets_of(g.all_nodes())) {
    if (!delta.fixes(k)) continue;
    int count = 0;
    for (auto w : epsilon_domain(g, j, k, delta)) count += raw_i_of(g, jd, k, w) == t;
    sum += subset_sign(k, delta, convention) * count;
  }
  return sum;
}

}  // namespace weylstrata
