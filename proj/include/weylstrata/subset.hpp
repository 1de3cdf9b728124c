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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace weylstrata {

inline constexpr int kMaxRank = 8;

/// A subset of the node set I, stored as a bitmask in node order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(int rank) { return Subset(rank >= 32 ? ~0u : ((1u << rank) - 1u)); }
  static constexpr Subset single(int node) { return Subset(1u << node); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int node) const { return (bits_ >> node) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr Subset with(int node) const { return Subset(bits_ | (1u << node)); }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  /// Node indices in increasing order.
  std::vector<int> nodes() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `mask`, in increasing bitmask order.
inline std::vector<Subset> subsets_of(Subset mask) {
  std::vector<Subset> out;
  const std::uint32_t m = mask.bits();
  std::uint32_t s = 0;
  while (true) {
    out.emplace_back(s);
    if (s == m) break;
    s = (s - m) & m;  // next subset in increasing order
  }
  return out;
}

/// "{0,2}" style rendering.
inline std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.nodes()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace weylstrata
