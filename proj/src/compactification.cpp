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

#include "weylstrata/compactification.hpp"

#include <algorithm>
#include <tuple>

#include "weylstrata/errors.hpp"
#include "weylstrata/parallel.hpp"

namespace weylstrata {

namespace {

void check_delta(const WeylGroup& g, const DiagramAut& delta) { g.check_aut(delta); }

WeylElement apply(const WeylGroup& g, const DiagramAut& delta, WeylElement w) { return g.apply_aut(delta, w); }

}  // namespace

bool canonical_less(const PieceIndex& a, const PieceIndex& b) {
  return std::make_tuple(a.j.bits(), a.w.id(), a.v.id(), a.k.bits()) <
         std::make_tuple(b.j.bits(), b.w.id(), b.v.id(), b.k.bits());
}

std::string describe(const WeylGroup& g, const PieceIndex& p) {
  return "[J=" + to_string(p.j) + ",w=" + word_string(g, p.w) + ",v=" + word_string(g, p.v) + ",K=" + to_string(p.k) +
         "]";
}

PieceIndex make_piece(const WeylGroup& g, Subset j, WeylElement w, WeylElement v, Subset k, const DiagramAut& delta) {
  check_delta(g, delta);
  g.check_subset(j);
  g.check_subset(k);
  g.check_same(w);
  g.check_same(v);
  PieceIndex p{j, w, v, k, delta};
  if (!g.is_right_minimal(w, delta.apply(j)))
    fail(ErrorCode::kInvalidIndex, describe(g, p) + ": w is not in W^delta(J)");
  if (!g.is_left_minimal(v, k)) fail(ErrorCode::kInvalidIndex, describe(g, p) + ": v is not in ^K W");
  return p;
}

int piece_dimension(const WeylGroup& g, const PieceIndex& p) {
  if (!g.is_right_minimal(p.w, p.delta.apply(p.j)) || !g.is_left_minimal(p.v, p.k))
    fail(ErrorCode::kInvalidIndex, describe(g, p) + " is not normalized");
  const int dim = g.length(g.longest()) + p.j.size() + g.length(p.v) - g.length(p.w) +
                  g.length(g.longest_element(p.k));
  if (dim < 0) fail(ErrorCode::kConsistencyError, describe(g, p) + " has negative dimension");
  return dim;
}

std::vector<PieceIndex> enumerate_pieces(const WeylGroup& g, Subset k, const DiagramAut& delta) {
  check_delta(g, delta);
  g.check_subset(k);
  std::vector<WeylElement> vs;
  for (auto v : g.elements())
    if (g.is_left_minimal(v, k)) vs.push_back(v);
  std::vector<PieceIndex> out;
  for (auto j : subsets_of(g.all_nodes())) {
    const Subset dj = delta.apply(j);
    for (auto w : g.elements()) {
      if (!g.is_right_minimal(w, dj)) continue;
      for (auto v : vs) out.push_back({j, w, v, k, delta});
    }
  }
  return out;
}

bool closure_leq(const WeylGroup& g, const PieceIndex& lower, const PieceIndex& upper) {
  if (lower.k != upper.k || !(lower.delta == upper.delta))
    fail(ErrorCode::kIndexMismatch, "closure order compares pieces with different K or delta");
  if (!lower.j.is_subset_of(upper.j)) return false;
  const auto& wk = g.parabolic(upper.k);
  const auto& wj = g.parabolic(upper.j);
  auto test = [&](WeylElement x, WeylElement y) {
    return g.bruhat_leq(g.multiply(upper.w, apply(g, upper.delta, y)), g.multiply(x, lower.w)) &&
           g.bruhat_leq(g.multiply(x, lower.v), g.multiply(upper.v, y));
  };
  if (wk.size() <= wj.size()) {
    for (auto x : wk)
      for (auto y : wj)
        if (test(x, y)) return true;
  } else {
    for (auto y : wj)
      for (auto x : wk)
        if (test(x, y)) return true;
  }
  return false;
}

std::map<Subset, int> boundary_profile(const WeylGroup& g, const PieceIndex& p) {
  std::map<Subset, int> out;
  for (auto jp : subsets_of(p.j)) out[jp] = -1;
  for (const auto& q : enumerate_pieces(g, p.k, p.delta)) {
    if (!q.j.is_subset_of(p.j) || !closure_leq(g, q, p)) continue;
    out[q.j] = std::max(out[q.j], piece_dimension(g, q));
  }
  return out;
}

Subset K1_of(const WeylGroup& g, const PieceIndex& p, K1Reading reading) {
  const Subset target = reading == K1Reading::kLiteral ? p.j : p.delta.apply(p.j);
  const auto w_inv = g.inverse(p.w);
  const auto v_inv = g.inverse(p.v);
  auto ok = [&](Subset kp) {
    const auto a = g.maps_into_simples(w_inv, kp);
    const auto b = g.maps_into_simples(v_inv, kp);
    return a && b && a->is_subset_of(target) && *a == p.delta.apply(*b);
  };
  Subset result;
  for (auto kp : subsets_of(p.k))
    if (ok(kp)) result |= kp;
  if (!ok(result)) fail(ErrorCode::kConsistencyError, describe(g, p) + ": K1 candidates are not closed under union");
  return result;
}

std::vector<GPieceIndex> semistable_g_pieces(const WeylGroup& g, const DiagramAut& delta) {
  check_delta(g, delta);
  std::vector<GPieceIndex> out;
  for (auto j : subsets_of(g.all_nodes())) out.push_back({j, g.identity()});
  return out;
}

AdmissibleTriple compactification_triple(const WeylGroup& g, Subset j, const DiagramAut& delta) {
  check_delta(g, delta);
  const Subset dj = delta.apply(j);
  const auto u = g.multiply(g.longest(), g.longest_element(dj));
  const auto j1 = g.maps_into_simples(u, dj);
  if (!j1) fail(ErrorCode::kConsistencyError, "w0 w0^{delta(J)} does not send delta(J) to simple roots");
  const auto u_inv = g.inverse(u);
  const auto inv = delta.inverse();
  std::vector<int> images;
  for (int i : j1->nodes()) images.push_back(inv(g.maps_into_simples(u_inv, Subset::single(i))->nodes().front()));
  return AdmissibleTriple::make(g.cartan(), *j1, j, images);
}

PieceIndex saturate_piece(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                          const DiagramAut& delta) {
  check_delta(g, delta);
  const Subset dj = delta.apply(j);
  if (!g.is_right_minimal(x, dj))
    fail(ErrorCode::kPreconditionFailure, "x = " + word_string(g, x) + " is not in W^delta(J)");
  std::vector<std::pair<WeylElement, WeylElement>> found;
  for (auto a : g.parabolic(k)) {
    const auto a_inv = g.inverse(a);
    for (auto b : g.parabolic(j)) {
      const auto b_inv = g.inverse(b);
      const auto w = g.multiply(g.multiply(a_inv, x), apply(g, delta, b_inv));
      const auto v = g.multiply(g.multiply(a_inv, y), b_inv);
      if (!g.is_right_minimal(w, dj) || !g.is_left_minimal(v, k)) continue;
      if (g.length(y) - g.length(x) != g.length(v) - g.length(w)) continue;
      if (std::find(found.begin(), found.end(), std::make_pair(w, v)) == found.end()) found.emplace_back(w, v);
    }
  }
  if (found.empty())
    fail(ErrorCode::kNoNormalization, "no normalization of [J=" + to_string(j) + ",x=" + word_string(g, x) +
                                          ",y=" + word_string(g, y) + "] for K=" + to_string(k));
  if (found.size() > 1)
    fail(ErrorCode::kConsistencyError, "two different normalizations of [J=" + to_string(j) + ",x=" +
                                           word_string(g, x) + ",y=" + word_string(g, y) + "]");
  return {j, found[0].first, found[0].second, k, delta};
}

std::vector<PieceIndex> saturate_closure(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                                         const DiagramAut& delta) {
  check_delta(g, delta);
  const Subset dj = delta.apply(j);
  if (!g.is_right_minimal(x, dj))
    fail(ErrorCode::kPreconditionFailure, "x = " + word_string(g, x) + " is not in W^delta(J)");
  const auto z = g.multiply(g.longest_element(dj), g.longest());
  const auto xz = g.multiply(x, z);
  std::vector<PieceIndex> out;
  for (const auto& p : enumerate_pieces(g, k, delta)) {
    if (p.j != j) continue;
    const int rhs = g.length(g.multiply(p.w, z)) + g.length(p.v);
    bool hit = false;
    for (auto a : g.parabolic(k)) {
      for (auto b : g.parabolic(j)) {
        const auto left = g.multiply(g.multiply(g.multiply(a, p.w), apply(g, delta, b)), z);
        const auto right = g.multiply(g.multiply(a, p.v), b);
        if (g.length(left) + g.length(right) == rhs && g.bruhat_leq(left, xz) && g.bruhat_leq(right, y)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (hit) out.push_back(p);
  }
  return out;
}

PieceIndex containing_piece(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, Subset k,
                            const DiagramAut& delta) {
  const auto closure = saturate_closure(g, j, x, y, k, delta);
  const PieceIndex* best = nullptr;
  int best_dim = -1, ties = 0;
  for (const auto& p : closure) {
    const int d = piece_dimension(g, p);
    if (d > best_dim) best = &p, best_dim = d, ties = 1;
    else if (d == best_dim) ++ties;
  }
  if (best == nullptr || ties != 1)
    fail(ErrorCode::kConsistencyError, "closure of [J=" + to_string(j) + ",x=" + word_string(g, x) +
                                           ",y=" + word_string(g, y) + "] has no unique top piece");
  return *best;
}

bool in_semistable_locus(const WeylGroup& g, Subset j, WeylElement x, WeylElement y, const DiagramAut& delta) {
  // The (w, v) = (e, e) clause of the closure criterion with K = I.
  check_delta(g, delta);
  const Subset dj = delta.apply(j);
  if (!g.is_right_minimal(x, dj))
    fail(ErrorCode::kPreconditionFailure, "x = " + word_string(g, x) + " is not in W^delta(J)");
  const auto z = g.multiply(g.longest_element(dj), g.longest());
  const auto xz = g.multiply(x, z);
  const int rhs = g.length(z);
  for (auto a : g.elements())
    for (auto b : g.parabolic(j)) {
      const auto left = g.multiply(g.multiply(a, apply(g, delta, b)), z);
      const auto right = g.multiply(a, b);
      if (g.length(left) + g.length(right) == rhs && g.bruhat_leq(left, xz) && g.bruhat_leq(right, y)) return true;
    }
  return false;
}

ClosurePoset::ClosurePoset(const WeylGroup& g, Subset k, const DiagramAut& delta, int jobs)
    : g_(&g), pieces_(enumerate_pieces(g, k, delta)) {
  const std::size_t order = g.order();
  const std::size_t n = pieces_.size();
  dims_.resize(n);
  for (std::size_t i = 0; i < n; ++i) dims_[i] = piece_dimension(g, pieces_[i]);

  // Contiguous block of pieces for each J.
  const std::size_t blocks = std::size_t{1} << g.rank();
  std::vector<std::size_t> begin(blocks + 1, n);
  for (std::size_t i = n; i-- > 0;) begin[pieces_[i].j.bits()] = i;
  for (std::size_t b = blocks; b-- > 0;)
    if (begin[b] == n && b + 1 <= blocks) begin[b] = begin[b + 1];

  std::vector<boost::dynamic_bitset<>> up(order, boost::dynamic_bitset<>(order));
  std::vector<boost::dynamic_bitset<>> down(order, boost::dynamic_bitset<>(order));
  for (auto a : g.elements())
    for (auto b : g.elements())
      if (g.bruhat_leq(a, b)) {
        up[a.id()].set(b.id());
        down[b.id()].set(a.id());
      }

  down_.assign(n, boost::dynamic_bitset<>(n));
  parallel_for(n, jobs, [&](std::size_t idx) {
    const PieceIndex& p = pieces_[idx];
    // reach[w'] = set of v' such that (w', v') is witnessed by some (x, y).
    std::vector<boost::dynamic_bitset<>> reach(order, boost::dynamic_bitset<>(order));
    boost::dynamic_bitset<> lower_v(order);
    for (auto x : g.parabolic(k)) {
      for (auto y : g.parabolic(p.j)) {
        const auto& ups = up[g.multiply(p.w, g.apply_aut(delta, y)).id()];
        const auto& downs = down[g.multiply(p.v, y).id()];
        lower_v.reset();
        for (auto vp : g.elements())
          if (downs[g.multiply(x, vp).id()]) lower_v.set(vp.id());
        if (lower_v.none()) continue;
        for (auto wp : g.elements())
          if (ups[g.multiply(x, wp).id()]) reach[wp.id()] |= lower_v;
      }
    }
    auto& row = down_[idx];
    for (auto jp : subsets_of(p.j))
      for (std::size_t q = begin[jp.bits()]; q < n && pieces_[q].j == jp; ++q)
        if (reach[pieces_[q].w.id()][pieces_[q].v.id()]) row.set(q);
  });
}

std::size_t ClosurePoset::index_of(const PieceIndex& p) const {
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), p, canonical_less);
  if (it == pieces_.end() || !(*it == p)) fail(ErrorCode::kInvalidIndex, describe(*g_, p) + " is not in this poset");
  return static_cast<std::size_t>(it - pieces_.begin());
}

std::optional<std::string> ClosurePoset::partial_order_violation() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    if (!down_[i][i]) return "not reflexive at " + describe(*g_, pieces_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = down_[i].find_first(); j != boost::dynamic_bitset<>::npos; j = down_[i].find_next(j)) {
      if (j != i && down_[j][i])
        return "not antisymmetric: " + describe(*g_, pieces_[i]) + " and " + describe(*g_, pieces_[j]);
      if (!down_[j].is_subset_of(down_[i])) {
        const auto extra = (down_[j] - down_[i]).find_first();
        return "not transitive: " + describe(*g_, pieces_[extra]) + " <= " + describe(*g_, pieces_[j]) + " <= " +
               describe(*g_, pieces_[i]);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> ClosurePoset::covers() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = down_[i].find_first(); j != boost::dynamic_bitset<>::npos; j = down_[i].find_next(j))
      if (j != i && down_[j][i])
        fail(ErrorCode::kNotAPoset, "cycle between " + describe(*g_, pieces_[i]) + " and " + describe(*g_, pieces_[j]));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n; ++u) {
    auto strict = down_[u];
    strict.reset(u);
    boost::dynamic_bitset<> below(n);
    for (auto j = strict.find_first(); j != boost::dynamic_bitset<>::npos; j = strict.find_next(j)) {
      auto s = down_[j];
      s.reset(j);
      below |= s;
    }
    const auto cover = strict - below;
    for (auto j = cover.find_first(); j != boost::dynamic_bitset<>::npos; j = cover.find_next(j)) out.emplace_back(j, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylstrata
