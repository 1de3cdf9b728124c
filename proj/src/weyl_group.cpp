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

#include "weylstrata/weyl_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "weylstrata/errors.hpp"

namespace weylstrata {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

int height(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

WeylGroup::WeylGroup(CartanType ct, int rank_cap) : cartan_(std::move(ct)), rank_(cartan_.rank()) {
  if (rank_ > rank_cap)
    fail(ErrorCode::kRankCapExceeded,
         "rank " + std::to_string(rank_) + " exceeds the rank cap " + std::to_string(rank_cap));
  const int n = rank_;

  // Root system: closure of the simple roots under simple reflections.
  auto reflect = [&](int i, const std::vector<int>& r) {
    std::vector<int> out = r;
    int c = 0;
    for (int j = 0; j < n; ++j) c += r[j] * cartan_.entry(i, j);
    out[i] -= c;
    return out;
  };
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, 0);
    all.push_back(e);
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      auto r = reflect(i, all[k]);
      if (seen.emplace(r, 0).second) all.push_back(std::move(r));
    }
  }
  std::vector<std::vector<int>> positive;
  for (auto& r : all)
    if (height(r) > 0) positive.push_back(r);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  num_pos_ = static_cast<int>(positive.size());
  roots_ = positive;
  for (const auto& r : positive) {
    std::vector<int> neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), [](int x) { return -x; });
    roots_.push_back(std::move(neg));
  }
  const int nr = num_roots();
  std::map<std::vector<int>, int> index;
  for (int r = 0; r < nr; ++r) index.emplace(roots_[r], r);
  std::vector<std::vector<std::uint16_t>> refl(n, std::vector<std::uint16_t>(nr));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < nr; ++r) refl[i][r] = static_cast<std::uint16_t>(index.at(reflect(i, roots_[r])));

  // Elements as root permutations, breadth first from the identity.
  std::vector<std::vector<std::uint16_t>> perms;
  std::unordered_map<std::vector<std::uint16_t>, std::uint32_t, PermHash> lookup;
  std::vector<std::uint16_t> id_perm(nr);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  lookup.emplace(id_perm, 0);
  perms.push_back(id_perm);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint16_t> next(nr);
      for (int r = 0; r < nr; ++r) next[r] = perms[k][refl[i][r]];
      if (lookup.emplace(next, static_cast<std::uint32_t>(perms.size())).second) {
        perms.push_back(std::move(next));
        if (perms.size() > kMaxOrder)
          fail(ErrorCode::kRankCapExceeded, "group order exceeds " + std::to_string(kMaxOrder));
      }
    }
  }
  const std::size_t order = perms.size();

  std::vector<int> len(order, 0);
  std::vector<std::uint32_t> lmul(order * n), rmul(order * n);
  for (std::size_t k = 0; k < order; ++k) {
    for (int r = 0; r < num_pos_; ++r)
      if (perms[k][r] >= num_pos_) ++len[k];
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint16_t> right(nr), left(nr);
      for (int r = 0; r < nr; ++r) {
        right[r] = perms[k][refl[i][r]];
        left[r] = refl[i][perms[k][r]];
      }
      rmul[k * n + i] = lookup.at(right);
      lmul[k * n + i] = lookup.at(left);
    }
  }

  // Lexicographically least reduced words by peeling the smallest left descent.
  std::vector<std::size_t> by_length(order);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(), [&](auto a, auto b) { return len[a] < len[b]; });
  std::vector<std::vector<int>> words(order);
  for (std::size_t k : by_length) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t shorter = lmul[k * n + i];
      if (len[shorter] < len[k]) {
        words[k].push_back(i);
        words[k].insert(words[k].end(), words[shorter].begin(), words[shorter].end());
        break;
      }
    }
  }

  // Renumber in ShortLex order.
  std::vector<std::uint32_t> order_ids(order);
  std::iota(order_ids.begin(), order_ids.end(), 0);
  std::sort(order_ids.begin(), order_ids.end(), [&](auto a, auto b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return words[a] < words[b];
  });
  std::vector<std::uint32_t> new_id(order);
  for (std::uint32_t k = 0; k < order; ++k) new_id[order_ids[k]] = k;

  perm_.resize(order * nr);
  length_.resize(order);
  inverse_.resize(order);
  left_mul_.resize(order * n);
  right_mul_.resize(order * n);
  left_desc_.assign(order, 0);
  right_desc_.assign(order, 0);
  support_.assign(order, 0);
  words_.resize(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t old = order_ids[k];
    std::copy(perms[old].begin(), perms[old].end(), perm_.begin() + static_cast<std::ptrdiff_t>(k * nr));
    length_[k] = len[old];
    words_[k] = words[old];
    for (int i = 0; i < n; ++i) {
      left_mul_[k * n + i] = new_id[lmul[old * n + i]];
      right_mul_[k * n + i] = new_id[rmul[old * n + i]];
      if (len[lmul[old * n + i]] < len[old]) left_desc_[k] |= 1u << i;
      if (len[rmul[old * n + i]] < len[old]) right_desc_[k] |= 1u << i;
    }
    for (int letter : words_[k]) support_[k] |= 1u << letter;
    std::vector<std::uint16_t> inv(nr);
    for (int r = 0; r < nr; ++r) inv[perms[old][r]] = static_cast<std::uint16_t>(r);
    inverse_[k] = new_id[lookup.at(inv)];
  }
  longest_ = static_cast<std::uint32_t>(order - 1);

  parabolic_.resize(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (std::uint32_t k = 0; k < order; ++k)
      if ((support_[k] & ~mask) == 0) parabolic_[mask].push_back({this, k});
  }
}

std::uint32_t WeylGroup::checked(WeylElement w) const {
  if (w.group() != this) fail(ErrorCode::kGroupMismatch, "element belongs to a different group");
  return w.id();
}

Subset WeylGroup::check_subset(Subset s) const {
  if (!s.is_subset_of(all_nodes()))
    fail(ErrorCode::kInvalidIndex, "subset " + to_string(s) + " is not inside the node set");
  return s;
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  out.reserve(order());
  for (std::uint32_t k = 0; k < order(); ++k) out.push_back({this, k});
  return out;
}

WeylElement WeylGroup::multiply(WeylElement a, WeylElement b) const {
  std::uint32_t cur = checked(a);
  for (int letter : words_[checked(b)]) cur = right_mul_[cur * rank_ + letter];
  return {this, cur};
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  std::uint32_t cur = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= rank_) fail(ErrorCode::kParseError, "letter " + std::to_string(letter) + " out of range");
    cur = right_mul_[cur * rank_ + letter];
  }
  return {this, cur};
}

bool WeylGroup::bruhat_leq(WeylElement u_in, WeylElement w_in) const {
  std::uint32_t u = checked(u_in);
  std::uint32_t w = checked(w_in);
  // Peel a left descent s of w: if s is also a left descent of u then u <= w iff su <= sw,
  // otherwise u <= w iff u <= sw.
  while (true) {
    if (length_[u] > length_[w]) return false;
    if (length_[u] == length_[w]) return u == w;
    const int s = std::countr_zero(left_desc_[w]);
    if ((left_desc_[u] >> s) & 1u) u = left_mul_[u * rank_ + s];
    w = left_mul_[w * rank_ + s];
  }
}

WeylElement WeylGroup::longest_element(Subset j) const {
  check_subset(j);
  std::uint32_t cur = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : j.nodes()) {
      if (!((left_desc_[cur] >> i) & 1u)) {
        cur = left_mul_[cur * rank_ + i];
        grew = true;
      }
    }
  }
  return {this, cur};
}

WeylElement WeylGroup::min_coset_rep(WeylElement w, Subset k, Subset j) const {
  check_subset(k);
  check_subset(j);
  std::uint32_t cur = checked(w);
  while (true) {
    const std::uint32_t left = left_desc_[cur] & k.bits();
    if (left != 0) {
      cur = left_mul_[cur * rank_ + std::countr_zero(left)];
      continue;
    }
    const std::uint32_t right = right_desc_[cur] & j.bits();
    if (right != 0) {
      cur = right_mul_[cur * rank_ + std::countr_zero(right)];
      continue;
    }
    return {this, cur};
  }
}

std::optional<Subset> WeylGroup::maps_into_simples(WeylElement w, Subset s) const {
  check_subset(s);
  const std::size_t base = static_cast<std::size_t>(checked(w)) * num_roots();
  Subset image;
  for (int i : s.nodes()) {
    const int r = perm_[base + i];
    if (r >= rank_) return std::nullopt;
    image = image.with(r);
  }
  return image;
}

void WeylGroup::check_aut(const DiagramAut& delta) const {
  if (delta.rank() != rank_) fail(ErrorCode::kAutMismatch, "automorphism rank differs from group rank");
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cartan_.entry(delta(i), delta(j)) != cartan_.entry(i, j))
        fail(ErrorCode::kAutMismatch, "automorphism does not preserve this Cartan matrix");
}

WeylElement WeylGroup::apply_aut(const DiagramAut& delta, WeylElement w) const {
  check_aut(delta);
  std::uint32_t cur = 0;
  for (int letter : words_[checked(w)]) cur = right_mul_[cur * rank_ + delta(letter)];
  return {this, cur};
}

std::vector<WeylElement> WeylGroup::double_minimal(Subset k, Subset j) const {
  check_subset(k);
  check_subset(j);
  std::vector<WeylElement> out;
  for (std::uint32_t id = 0; id < order(); ++id)
    if (((left_desc_[id] & k.bits()) | (right_desc_[id] & j.bits())) == 0) out.push_back({this, id});
  return out;
}

std::string word_string(const WeylGroup& g, WeylElement w) {
  std::string out = "[";
  bool first = true;
  for (int letter : g.reduced_word(w)) {
    if (!first) out += ',';
    out += std::to_string(letter);
    first = false;
  }
  return out + "]";
}

}  // namespace weylstrata
