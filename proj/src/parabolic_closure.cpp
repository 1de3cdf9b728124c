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

#include "weylstrata/parabolic_closure.hpp"

#include <algorithm>

#include "weylstrata/errors.hpp"

namespace weylstrata {

namespace {

void sort_unique(std::vector<PieceIndex>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

PieceIndex bp_piece(const WeylGroup& g, Subset j, WeylElement x, Subset k, const DiagramAut& delta) {
  return make_piece(g, j, g.apply_aut(delta, x), x, k, delta);
}

}  // namespace

Subset j_delta(Subset j, const DiagramAut& delta) {
  Subset out = j;
  // Drop nodes whose orbit leaves J; the orbit of i stays in J iff every iterate does.
  for (int i : j.nodes())
    for (int n = delta(i); n != i; n = delta(n))
      if (!j.contains(n)) {
        out = out - Subset::single(i);
        break;
      }
  return out;
}

void require_delta_stable(Subset k, const DiagramAut& delta) {
  if (!delta.fixes(k)) fail(ErrorCode::kKNotDeltaStable, "K = " + to_string(k) + " is not delta-stable");
}

bool coset_meets_fixed(const WeylGroup& g, WeylElement x, Subset j, const DiagramAut& delta) {
  for (auto b : g.parabolic(j))
    if (g.is_delta_fixed(delta, g.multiply(x, b))) return true;
  return false;
}

std::vector<WeylElement> epsilon_target(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta) {
  std::vector<WeylElement> out;
  for (auto x : g.double_minimal(k, j))
    if (coset_meets_fixed(g, x, j, delta)) out.push_back(x);
  return out;
}

std::vector<WeylElement> epsilon_domain(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta) {
  std::vector<WeylElement> out;
  for (auto w : g.double_minimal(k, j_delta(j, delta)))
    if (g.is_delta_fixed(delta, w)) out.push_back(w);
  return out;
}

EpsilonMap epsilon(const WeylGroup& g, Subset j, Subset k, const DiagramAut& delta) {
  g.check_aut(delta);
  require_delta_stable(k, delta);
  EpsilonMap m{j, k, delta, {}};
  for (auto w : epsilon_domain(g, j, k, delta)) m.pairs.emplace_back(w, g.min_coset_rep(w, Subset(), j));
  const auto target = epsilon_target(g, j, k, delta);
  std::vector<WeylElement> image;
  for (const auto& [w, x] : m.pairs) image.push_back(x);
  std::sort(image.begin(), image.end());
  const std::string where = " for J=" + to_string(j) + ", K=" + to_string(k);
  if (auto dup = std::adjacent_find(image.begin(), image.end()); dup != image.end())
    fail(ErrorCode::kBijectionFailure, "epsilon is not injective" + where + ": two elements map to " + word_string(g, *dup));
  for (auto x : image)
    if (!std::binary_search(target.begin(), target.end(), x))
      fail(ErrorCode::kBijectionFailure, "epsilon leaves its target" + where + ": " + word_string(g, x));
  for (auto x : target)
    if (!std::binary_search(image.begin(), image.end(), x))
      fail(ErrorCode::kBijectionFailure, "epsilon misses " + word_string(g, x) + where);
  return m;
}

Subset max_stable_preimage(const WeylGroup& g, WeylElement x, Subset j, Subset k, const DiagramAut& delta) {
  const auto x_inv = g.inverse(x);
  auto ok = [&](Subset kp) {
    if (!delta.fixes(kp)) return false;
    const auto image = g.maps_into_simples(x_inv, kp);
    return image && image->is_subset_of(j);
  };
  Subset result;
  for (auto kp : subsets_of(k))
    if (ok(kp)) result |= kp;
  if (!ok(result)) fail(ErrorCode::kConsistencyError, "qualifying subsets of K are not closed under union");
  return result;
}

Subset k_cap_w_j_delta(const WeylGroup& g, WeylElement w, Subset j, Subset k, const DiagramAut& delta) {
  const Subset jd = j_delta(j, delta);
  const auto w_inv = g.inverse(w);
  Subset out;
  for (int i : k.nodes()) {
    const auto image = g.maps_into_simples(w_inv, Subset::single(i));
    if (image && image->is_subset_of(jd)) out = out.with(i);
  }
  return out;
}

std::vector<PieceIndex> parabolic_closure_index(const WeylGroup& g, Subset k, const DiagramAut& delta) {
  g.check_aut(delta);
  require_delta_stable(k, delta);
  std::vector<PieceIndex> out;
  for (auto j : subsets_of(g.all_nodes()))
    for (auto x : epsilon_target(g, j, k, delta)) out.push_back(bp_piece(g, j, x, k, delta));
  sort_unique(out);
  return out;
}

PPIndexSets pp_index_sets(const WeylGroup& g, Subset k, const DiagramAut& delta) {
  g.check_aut(delta);
  require_delta_stable(k, delta);
  PPIndexSets s;
  const auto subsets = subsets_of(g.all_nodes());
  std::vector<WeylElement> fixed;
  for (auto w : g.elements())
    if (g.is_left_minimal(w, k) && g.is_delta_fixed(delta, w)) fixed.push_back(w);

  for (auto j : subsets)
    for (auto w : epsilon_domain(g, j, k, delta))
      s.by_twisted_reps.push_back(bp_piece(g, j, g.min_coset_rep(w, Subset(), j), k, delta));
  for (auto j : subsets)
    for (auto w : fixed) s.j_outer.push_back(bp_piece(g, j, g.min_coset_rep(w, Subset(), j), k, delta));
  for (auto w : fixed)
    for (auto j : subsets) s.w_outer.push_back(bp_piece(g, j, g.min_coset_rep(w, Subset(), j), k, delta));
  sort_unique(s.by_twisted_reps);
  sort_unique(s.j_outer);
  sort_unique(s.w_outer);
  return s;
}

std::vector<IsolatedIndex> isolated_boundary_index(const WeylGroup& g, Subset k, const DiagramAut& delta) {
  g.check_aut(delta);
  require_delta_stable(k, delta);
  std::vector<IsolatedIndex> out;
  for (auto j : subsets_of(g.all_nodes())) {
    const Subset jd = j_delta(j, delta);
    for (auto w : epsilon_domain(g, j, k, delta)) {
      const auto image = g.maps_into_simples(g.inverse(w), k);
      if (image && image->is_subset_of(jd)) out.push_back({j, w});
    }
  }
  return out;
}

}  // namespace weylstrata
