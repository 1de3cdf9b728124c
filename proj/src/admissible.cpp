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

#include "weylstrata/admissible.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "weylstrata/errors.hpp"

namespace weylstrata {

NodeBijection NodeBijection::identity(Subset s) {
  NodeBijection b;
  b.domain_ = s;
  for (int i : s.nodes()) b.image_[i] = static_cast<std::int8_t>(i);
  return b;
}

NodeBijection NodeBijection::make(const CartanType& ct, Subset domain, const std::vector<int>& images) {
  const auto nodes = domain.nodes();
  if (!domain.is_subset_of(ct.all_nodes()) || images.size() != nodes.size())
    fail(ErrorCode::kAutMismatch, "node map does not match its domain " + to_string(domain));
  Subset seen;
  NodeBijection b;
  b.domain_ = domain;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (images[k] < 0 || images[k] >= ct.rank() || seen.contains(images[k]))
      fail(ErrorCode::kAutMismatch, "node map is not injective on " + to_string(domain));
    seen = seen.with(images[k]);
    b.image_[nodes[k]] = static_cast<std::int8_t>(images[k]);
  }
  for (int i : nodes)
    for (int j : nodes)
      if (ct.entry(b(i), b(j)) != ct.entry(i, j))
        fail(ErrorCode::kAutMismatch, "node map does not preserve Cartan integers");
  return b;
}

Subset NodeBijection::apply(Subset s) const {
  if (!s.is_subset_of(domain_)) fail(ErrorCode::kDomainMismatch, to_string(s) + " is outside " + to_string(domain_));
  Subset out;
  for (int i : s.nodes()) out = out.with(image_[i]);
  return out;
}

WeylElement NodeBijection::apply(const WeylGroup& g, WeylElement w) const {
  if (!g.support(w).is_subset_of(domain_))
    fail(ErrorCode::kDomainMismatch, "element " + word_string(g, w) + " is outside W_" + to_string(domain_));
  WeylElement out = g.identity();
  for (int letter : g.reduced_word(w)) out = g.right_mul(out, image_[letter]);
  return out;
}

NodeBijection NodeBijection::inverse() const {
  NodeBijection b;
  b.domain_ = image();
  for (int i : domain_.nodes()) b.image_[image_[i]] = static_cast<std::int8_t>(i);
  return b;
}

bool NodeBijection::is_identity() const {
  for (int i : domain_.nodes())
    if (image_[i] != i) return false;
  return true;
}

std::string NodeBijection::describe() const {
  std::string out = "{";
  bool first = true;
  for (int i : domain_.nodes()) {
    if (!first) out += ',';
    out += std::to_string(i) + "->" + std::to_string(image_[i]);
    first = false;
  }
  return out + "}";
}

AdmissibleTriple AdmissibleTriple::make(const CartanType& ct, Subset j1, Subset j2, const std::vector<int>& images) {
  AdmissibleTriple t{j1, j2, NodeBijection::make(ct, j1, images)};
  if (t.delta.image() != j2) fail(ErrorCode::kAutMismatch, "triple map does not send J1 onto J2");
  return t;
}

AdmissibleTriple AdmissibleTriple::diagonal(Subset j) { return {j, j, NodeBijection::identity(j)}; }

std::vector<AdmissibleTriple> admissible_triples(const CartanType& ct) {
  std::vector<AdmissibleTriple> out;
  for (auto j1 : subsets_of(ct.all_nodes()))
    for (auto j2 : subsets_of(ct.all_nodes())) {
      if (j1.size() != j2.size()) continue;
      std::vector<int> images = j2.nodes();
      do {
        try {
          out.push_back(AdmissibleTriple::make(ct, j1, j2, images));
        } catch (const Error&) {
          // not Cartan preserving
        }
      } while (std::next_permutation(images.begin(), images.end()));
    }
  return out;
}

bool satisfies_I_conditions(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                            const AdmissibleTriple& cp, Subset k) {
  if (!k.is_subset_of(c.j1)) return false;
  const auto image1 = g.maps_into_simples(w1, k);
  if (!image1 || !image1->is_subset_of(cp.j1)) return false;
  const auto image2 = g.maps_into_simples(w2, c.delta.apply(k));
  return image2 && *image2 == cp.delta.apply(*image1);
}

Subset compute_I(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                 const AdmissibleTriple& cp) {
  if (!g.is_right_minimal(w1, c.j1) || !g.is_left_minimal(w2, cp.j2))
    fail(ErrorCode::kRepNotMinimal, "(" + word_string(g, w1) + "," + word_string(g, w2) + ") is not in W^" +
                                        to_string(c.j1) + " x ^" + to_string(cp.j2) + "W");
  Subset result;
  for (auto k : subsets_of(c.j1))
    if (satisfies_I_conditions(g, w1, w2, c, cp, k)) result |= k;
  if (!satisfies_I_conditions(g, w1, w2, c, cp, result))
    fail(ErrorCode::kConsistencyError, "satisfying subsets for I(" + word_string(g, w1) + "," + word_string(g, w2) +
                                           ") are not closed under union");
  return result;
}

std::vector<std::uint32_t> close_under_action(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp,
                                              std::vector<std::uint32_t> seeds) {
  const std::size_t n = g.order();
  std::vector<char> in(n * n, 0);
  std::vector<std::uint32_t> out;
  for (auto s : seeds)
    if (!in[s]) {
      in[s] = 1;
      out.push_back(s);
    }
  const auto left = cp.j1.nodes();
  const auto right = c.j1.nodes();
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto [a, b] = pair_of(g, out[k]);
    auto visit = [&](WeylElement x, WeylElement y) {
      const auto code = pair_code(g, x, y);
      if (!in[code]) {
        in[code] = 1;
        out.push_back(code);
      }
    };
    for (int i : left) visit(g.left_mul(i, a), g.left_mul(cp.delta(i), b));
    for (int j : right) visit(g.right_mul(a, j), g.right_mul(b, c.delta(j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Piece> partition_WxW(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp) {
  std::vector<Piece> pieces;
  for (auto w1 : g.elements()) {
    if (!g.is_right_minimal(w1, c.j1)) continue;
    for (auto w2 : g.elements()) {
      if (!g.is_left_minimal(w2, cp.j2)) continue;
      Piece p{w1, w2, compute_I(g, w1, w2, c, cp), {}};
      std::vector<std::uint32_t> seeds;
      for (auto z : g.parabolic(p.i)) seeds.push_back(pair_code(g, g.multiply(w1, z), w2));
      p.members = close_under_action(g, c, cp, std::move(seeds));
      pieces.push_back(std::move(p));
    }
  }
  return pieces;
}

DoubleCosetSpace::DoubleCosetSpace(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp)
    : g_(&g) {
  const std::size_t total = g.order() * g.order();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  coset_of_.assign(total, kUnset);
  for (std::uint32_t code = 0; code < total; ++code) {
    if (coset_of_[code] != kUnset) continue;
    DoubleCoset o;
    o.members = close_under_action(g, c, cp, {code});
    int best = std::numeric_limits<int>::max();
    for (auto m : o.members) {
      coset_of_[m] = cosets_.size();
      const auto [a, b] = pair_of(g, m);
      best = std::min(best, g.length(a) + g.length(b));
      if (g.is_right_minimal(a, c.j1) && g.is_left_minimal(b, cp.j2)) o.reps.push_back(m);
    }
    for (auto m : o.members) {
      const auto [a, b] = pair_of(g, m);
      if (g.length(a) + g.length(b) == best) o.minimal.push_back(m);
    }
    cosets_.push_back(std::move(o));
  }
}

std::vector<std::size_t> DoubleCosetSpace::distinguished() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cosets_.size(); ++k)
    if (cosets_[k].distinguished()) out.push_back(k);
  return out;
}

CosetOrder DoubleCosetSpace::compare(std::size_t o, std::size_t o_prime) const {
  CosetOrder result{false, true};
  for (auto wp : cosets_[o_prime].minimal) {
    const auto [a2, b2] = pair_of(*g_, wp);
    bool found = false;
    for (auto w : cosets_[o].minimal) {
      const auto [a1, b1] = pair_of(*g_, w);
      if (g_->bruhat_leq(a1, a2) && g_->bruhat_leq(b1, b2)) {
        found = true;
        break;
      }
    }
    result.some = result.some || found;
    result.any = result.any && found;
  }
  return result;
}

bool DoubleCosetSpace::leq(std::size_t o, std::size_t o_prime) const {
  if (!cosets_[o].distinguished() || !cosets_[o_prime].distinguished())
    fail(ErrorCode::kNotDistinguished, "coset order is only defined on distinguished double cosets");
  return compare(o, o_prime).some;
}

NodeBijection sigma_of(const WeylGroup& g, WeylElement w1, WeylElement w2, const AdmissibleTriple& c,
                       const AdmissibleTriple& cp) {
  const Subset i = compute_I(g, w1, w2, c, cp);
  const auto w2_inv = g.inverse(w2);
  const auto inv_delta = c.delta.inverse();
  std::vector<int> images;
  for (int k : i.nodes()) {
    // w1 s_k w1^{-1} = s_{w1(k)}; its delta' image conjugated by w2^{-1} is simple.
    const int a = *g.maps_into_simples(w1, Subset::single(k))->nodes().begin();
    const auto back = g.maps_into_simples(w2_inv, Subset::single(cp.delta(a)));
    if (!back || !back->is_subset_of(c.delta.image()))
      fail(ErrorCode::kConsistencyError, "sigma does not preserve W_I");
    images.push_back(inv_delta(back->nodes().front()));
  }
  auto sigma = NodeBijection::make(g.cartan(), i, images);
  if (sigma.image() != i) fail(ErrorCode::kConsistencyError, "sigma does not preserve I = " + to_string(i));
  return sigma;
}

std::vector<std::vector<WeylElement>> twisted_classes(const WeylGroup& g, Subset k, const NodeBijection& sigma) {
  g.check_subset(k);
  if (sigma.domain() != k || sigma.image() != k)
    fail(ErrorCode::kDomainMismatch, "twist is defined on " + to_string(sigma.domain()) + ", not " + to_string(k));
  const auto& group = g.parabolic(k);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<WeylElement>> out;
  for (auto start : group) {
    if (seen[start.id()]) continue;
    std::vector<WeylElement> orbit{start};
    seen[start.id()] = 1;
    for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
      for (int s : k.nodes()) {
        // s . w = s w sigma(s)^{-1}; generators suffice for the orbit.
        auto next = g.right_mul(g.left_mul(s, orbit[idx]), sigma(s));
        if (!seen[next.id()]) {
          seen[next.id()] = 1;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

TwistedBijection check_twisted_bijection(const WeylGroup& g, const AdmissibleTriple& c, const AdmissibleTriple& cp,
                                         const Piece& piece, const DoubleCosetSpace& space) {
  TwistedBijection r;
  const auto classes = twisted_classes(g, piece.i, sigma_of(g, piece.w1, piece.w2, c, cp));
  r.classes = classes.size();
  std::vector<std::size_t> inside;
  for (auto m : piece.members) inside.push_back(space.coset_of(m));
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  r.cosets_in_piece = inside.size();

  r.injective = true;
  std::vector<std::size_t> hit;
  for (const auto& cls : classes) {
    std::vector<std::size_t> targets;
    for (auto w : cls) targets.push_back(space.coset_of(g.multiply(piece.w1, w), piece.w2));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    // The map must be well defined on the class and land on a fresh coset.
    if (targets.size() != 1 || std::find(hit.begin(), hit.end(), targets[0]) != hit.end()) r.injective = false;
    hit.insert(hit.end(), targets.begin(), targets.end());
  }
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  r.surjective = hit == inside;
  return r;
}

}  // namespace weylstrata
