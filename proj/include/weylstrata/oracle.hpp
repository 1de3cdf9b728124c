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

// Independent reference implementations. The unit tests derive frozen values
// from them and the verification suites compare against them. Nothing here
// touches the library's multiplication tables: group elements are integer
// matrices acting on simple-root coordinates.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "weylstrata/cartan.hpp"
#include "weylstrata/weyl_group.hpp"

namespace oracle {

using Mat = std::vector<int>;  // row-major n x n, column j = image of alpha_j

inline Mat identity_mat(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline Mat reflection(const weylstrata::CartanType& ct, int i) {
  const int n = ct.rank();
  Mat m = identity_mat(n);
  for (int j = 0; j < n; ++j) m[i * n + j] -= ct.entry(i, j);
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i * n + k] != 0)
        for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

/// Brute-force group: every element with its BFS distance (= length).
struct Group {
  int n = 0;
  std::vector<Mat> gens;
  std::map<Mat, int> length;

  explicit Group(const weylstrata::CartanType& ct) : n(ct.rank()) {
    for (int i = 0; i < n; ++i) gens.push_back(reflection(ct, i));
    std::vector<Mat> frontier{identity_mat(n)};
    length[frontier[0]] = 0;
    for (int d = 1; !frontier.empty(); ++d) {
      std::vector<Mat> next;
      for (const auto& m : frontier)
        for (const auto& g : gens) {
          Mat p = mul(m, g, n);
          if (length.emplace(p, d).second) next.push_back(p);
        }
      frontier = std::move(next);
    }
  }

  Mat word(const std::vector<int>& w) const {
    Mat m = identity_mat(n);
    for (int i : w) m = mul(m, gens[i], n);
    return m;
  }
};

inline Mat to_mat(const Group& og, const weylstrata::WeylGroup& g, weylstrata::WeylElement w) {
  return og.word(g.reduced_word(w));
}

/// u <= w iff u is a subword product of a fixed reduced word of w.
inline bool subword_leq(const Group& og, const weylstrata::WeylGroup& g, weylstrata::WeylElement u,
                        weylstrata::WeylElement w) {
  const auto& word = g.reduced_word(w);
  const Mat target = to_mat(og, g, u);
  const int l = static_cast<int>(word.size());
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> sub;
    for (int k = 0; k < l; ++k)
      if ((mask >> k) & 1u) sub.push_back(word[k]);
    if (og.word(sub) == target) return true;
  }
  return false;
}

/// Elements of W_J as matrices.
inline std::set<Mat> parabolic(const Group& og, std::uint32_t j) {
  std::set<Mat> out{identity_mat(og.n)};
  std::vector<Mat> todo{identity_mat(og.n)};
  while (!todo.empty()) {
    Mat m = todo.back();
    todo.pop_back();
    for (int i = 0; i < og.n; ++i)
      if ((j >> i) & 1u) {
        Mat p = mul(m, og.gens[i], og.n);
        if (out.insert(p).second) todo.push_back(p);
      }
  }
  return out;
}

/// Shortest element of W_K w W_J by scanning the whole double coset.
inline Mat min_double_coset(const Group& og, const Mat& w, std::uint32_t k, std::uint32_t j) {
  const auto wk = parabolic(og, k), wj = parabolic(og, j);
  Mat best = w;
  for (const auto& a : wk)
    for (const auto& b : wj) {
      Mat c = mul(mul(a, w, og.n), b, og.n);
      if (og.length.at(c) < og.length.at(best)) best = c;
    }
  return best;
}

/// delta(w) for a node permutation delta: conjugation by the permutation matrix.
inline Mat apply_perm(const Mat& w, const std::vector<int>& delta) {
  const int n = static_cast<int>(delta.size());
  Mat out(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[delta[i] * n + delta[j]] = w[i * n + j];
  return out;
}

/// Alternating Steinberg count, from matrices and lengths only. The sign of a
/// delta-stable K is (-1)^{|K|} or, with `orbits`, (-1)^{number of delta-orbits}.
inline int steinberg_count(const Group& og, const std::vector<int>& delta, std::uint32_t j, std::uint32_t t,
                           bool orbits) {
  const int n = og.n;
  auto image = [&](std::uint32_t s) {
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) r |= 1u << delta[i];
    return r;
  };
  std::uint32_t jd = j;
  while (image(jd) != jd) jd &= image(jd);
  int total = 0;
  for (std::uint32_t k = 0; k < (1u << n); ++k) {
    if (image(k) != k) continue;
    int size = 0;
    for (std::uint32_t seen = 0, i = 0; i < static_cast<std::uint32_t>(n); ++i) {
      if (!((k >> i) & 1u) || ((seen >> i) & 1u)) continue;
      ++size;
      for (std::uint32_t x = i; !((seen >> x) & 1u); x = static_cast<std::uint32_t>(delta[x])) {
        seen |= 1u << x;
        if (!orbits && x != i) ++size;
      }
    }
    const int sign = size % 2 == 0 ? 1 : -1;
    for (const auto& [w, l] : og.length) {
      bool ok = apply_perm(w, delta) == w;
      for (int i = 0; ok && i < n; ++i) {
        if ((k >> i) & 1u) ok = og.length.at(mul(og.gens[i], w, n)) > l;
        if (ok && ((jd >> i) & 1u)) ok = og.length.at(mul(w, og.gens[i], n)) > l;
      }
      if (!ok) continue;
      std::uint32_t target = 0;
      for (int c = 0; c < n; ++c) {
        if (!((jd >> c) & 1u)) continue;
        for (int r = 0; r < n; ++r)
          if (((k >> r) & 1u) && w[r * n + c] == 1) {
            bool unit = true;
            for (int q = 0; q < n; ++q) unit = unit && (q == r || w[q * n + c] == 0);
            if (unit) target |= 1u << c;
          }
      }
      if (target == t) total += sign;
    }
  }
  return total;
}

}  // namespace oracle
