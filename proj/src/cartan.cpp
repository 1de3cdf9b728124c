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

#include "weylstrata/cartan.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string_view>

#include "weylstrata/errors.hpp"

namespace weylstrata {

namespace {

// Integer determinant by fraction-free (Bareiss) elimination.
long long determinant(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) { swap_row = r; break; }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// A generalized Cartan matrix is of finite type iff every principal minor is positive.
bool all_principal_minors_positive(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::vector<int> idx = Subset(mask).nodes();
    std::vector<std::vector<long long>> minor(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) minor[r][c] = a[idx[r]][idx[c]];
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

void link(std::vector<std::vector<int>>& a, int i, int j, int a_ij = -1, int a_ji = -1) {
  a[i][j] = a_ij;
  a[j][i] = a_ji;
}

}  // namespace

int default_rank_cap() {
  if (const char* env = std::getenv("WEYL_STRATA_RANK_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kMaxRank));
  }
  return 6;
}

CartanType::CartanType(std::string label, std::vector<std::vector<int>> matrix)
    : label_(std::move(label)), matrix_(std::move(matrix)) {
  const int n = rank();
  if (n == 0) fail(ErrorCode::kInvalidCartan, "empty Cartan matrix");
  if (n > kMaxRank) fail(ErrorCode::kRankCapExceeded, "rank " + std::to_string(n) + " exceeds hard limit");
  for (const auto& row : matrix_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::kInvalidCartan, "matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (matrix_[i][i] != 2) fail(ErrorCode::kInvalidCartan, "diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] > 0) fail(ErrorCode::kInvalidCartan, "positive off-diagonal entry");
      if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0))
        fail(ErrorCode::kInvalidCartan, "zero pattern is not symmetric");
    }
  }
  if (!all_principal_minors_positive(matrix_)) fail(ErrorCode::kNotFiniteType, "Cartan matrix is not of finite type");
}

CartanType CartanType::named(const std::string& label) {
  if (label.size() < 2) fail(ErrorCode::kInvalidCartan, "unknown Cartan type '" + label + "'");
  const char family = label[0];
  if (std::string_view("ABCDEFG").find(family) == std::string_view::npos)
    fail(ErrorCode::kInvalidCartan, "unknown Cartan type '" + label + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n <= 0) fail(ErrorCode::kInvalidCartan, "unknown Cartan type '" + label + "'");
  if (n > kMaxRank) fail(ErrorCode::kRankCapExceeded, "rank " + std::to_string(n) + " exceeds hard limit");

  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      if (n < 2) fail(ErrorCode::kInvalidCartan, "B_n needs n >= 2");
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      if (n < 2) fail(ErrorCode::kInvalidCartan, "C_n needs n >= 2");
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      if (n < 4) fail(ErrorCode::kInvalidCartan, "D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) fail(ErrorCode::kInvalidCartan, "E_n needs 6 <= n <= 8");
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      if (n != 4) fail(ErrorCode::kInvalidCartan, "only F4 exists");
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case 'G':
      if (n != 2) fail(ErrorCode::kInvalidCartan, "only G2 exists");
      link(a, 0, 1, -3, -1);
      break;
    default:
      fail(ErrorCode::kInvalidCartan, "unknown Cartan type '" + label + "'");
  }
  return CartanType(label, std::move(a));
}

DiagramAut DiagramAut::identity(int rank) {
  DiagramAut d;
  d.rank_ = static_cast<std::uint8_t>(rank);
  for (int i = 0; i < rank; ++i) d.image_[i] = static_cast<std::uint8_t>(i);
  return d;
}

DiagramAut DiagramAut::from_images(const CartanType& ct, const std::vector<int>& images) {
  const int n = ct.rank();
  if (static_cast<int>(images.size()) != n)
    fail(ErrorCode::kAutMismatch, "permutation has " + std::to_string(images.size()) + " entries, rank is " +
                                      std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 0 || x >= n || seen[x]) fail(ErrorCode::kAutMismatch, "not a permutation of the nodes");
    seen[x] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ct.entry(images[i], images[j]) != ct.entry(i, j))
        fail(ErrorCode::kAutMismatch, "permutation does not preserve the Cartan matrix");
  DiagramAut d;
  d.rank_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) d.image_[i] = static_cast<std::uint8_t>(images[i]);
  return d;
}

Subset DiagramAut::apply(Subset s) const {
  Subset out;
  for (int i : s.nodes()) out = out.with(image_[i]);
  return out;
}

Subset DiagramAut::apply_inverse(Subset s) const { return inverse().apply(s); }

DiagramAut DiagramAut::inverse() const {
  DiagramAut d;
  d.rank_ = rank_;
  for (int i = 0; i < rank_; ++i) d.image_.at(image_[i]) = static_cast<std::uint8_t>(i);
  return d;
}

bool DiagramAut::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    if (image_[i] != i) return false;
  return true;
}

int DiagramAut::orbit_count(Subset s) const {
  int count = 0;
  Subset seen;
  for (int i : s.nodes()) {
    if (seen.contains(i)) continue;
    ++count;
    for (int j = i; !seen.contains(j); j = image_[j]) seen = seen.with(j);
  }
  return count;
}

std::vector<DiagramAut> diagram_automorphisms(const CartanType& ct) {
  std::vector<int> perm(ct.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<DiagramAut> out;
  do {
    bool ok = true;
    for (int i = 0; i < ct.rank() && ok; ++i)
      for (int j = 0; j < ct.rank() && ok; ++j) ok = ct.entry(perm[i], perm[j]) == ct.entry(i, j);
    if (ok) out.push_back(DiagramAut::from_images(ct, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace weylstrata
