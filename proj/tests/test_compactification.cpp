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

#include <gtest/gtest.h>

#include "weylstrata/compactification.hpp"
#include "weylstrata/errors.hpp"

using namespace weylstrata;

namespace {

struct Case {
  std::string label;
  std::vector<int> delta;  // empty = identity
};

std::vector<Case> small_cases() { return {{"A1", {}}, {"A2", {}}, {"A2", {1, 0}}, {"B2", {}}, {"G2", {}}}; }

DiagramAut aut(const CartanType& ct, const std::vector<int>& images) {
  return images.empty() ? DiagramAut::identity(ct.rank()) : DiagramAut::from_images(ct, images);
}

}  // namespace

TEST(Pieces, DimensionExamples) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  EXPECT_EQ(piece_dimension(g, make_piece(g, Subset(1), g.identity(), g.identity(), Subset(1), id)), 3);
  EXPECT_EQ(piece_dimension(g, make_piece(g, Subset(), g.identity(), g.identity(), Subset(), id)), 1);
  WeylGroup b3(CartanType::named("B3"));
  const auto p = make_piece(b3, Subset(7), b3.identity(), b3.identity(), Subset(), DiagramAut::identity(3));
  EXPECT_EQ(piece_dimension(b3, p), 9 + 3);
}

TEST(Pieces, ConstructionValidates) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  try {
    make_piece(g, Subset(1), g.generator(0), g.identity(), Subset(), id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidIndex);
  }
  EXPECT_THROW(make_piece(g, Subset(), g.identity(), g.generator(0), Subset(1), id), Error);
}

TEST(Pieces, EnumerationCounts) {
  WeylGroup a1(CartanType::named("A1"));
  EXPECT_EQ(enumerate_pieces(a1, Subset(), DiagramAut::identity(1)).size(), 6u);
  EXPECT_EQ(enumerate_pieces(a1, Subset(1), DiagramAut::identity(1)).size(), 3u);
  // Count = sum_J |W| / |W_J| * |W| / |W_K|, with |W_J| from the group order of each parabolic.
  for (const auto& [label, images] : small_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : subsets_of(g.all_nodes())) {
      std::size_t expected = 0;
      for (auto j : subsets_of(g.all_nodes()))
        expected += g.order() / g.parabolic(d.apply(j)).size() * (g.order() / g.parabolic(k).size());
      const auto pieces = enumerate_pieces(g, k, d);
      EXPECT_EQ(pieces.size(), expected);
      EXPECT_TRUE(std::is_sorted(pieces.begin(), pieces.end(), canonical_less));
    }
  }
}

TEST(Closure, Examples) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  const auto e = g.identity(), s = g.generator(0);
  const auto top = make_piece(g, Subset(1), e, e, Subset(), id);
  EXPECT_TRUE(closure_leq(g, top, top));
  EXPECT_TRUE(closure_leq(g, make_piece(g, Subset(), e, e, Subset(), id), top));
  EXPECT_FALSE(closure_leq(g, make_piece(g, Subset(), e, s, Subset(), id), top));
  EXPECT_TRUE(closure_leq(g, make_piece(g, Subset(), s, s, Subset(), id), top));
  EXPECT_TRUE(closure_leq(g, make_piece(g, Subset(), s, e, Subset(), id), top));
  ClosurePoset poset(g, Subset(), id);
  EXPECT_EQ(poset.downset(poset.index_of(top)).count(), 4u);
  // [emptyset, s, e] has dimension 0 and sits below every piece with J = emptyset and v = e.
  EXPECT_EQ(poset.downset(poset.index_of(make_piece(g, Subset(), e, e, Subset(), id))).count(), 2u);
  EXPECT_EQ(poset.downset(poset.index_of(make_piece(g, Subset(), s, e, Subset(), id))).count(), 1u);
  try {
    closure_leq(g, top, make_piece(g, Subset(1), e, e, Subset(1), id));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kIndexMismatch);
  }
}

TEST(Closure, BitsetPosetMatchesDirectScan) {
  for (const auto& [label, images] : small_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : subsets_of(g.all_nodes())) {
      ClosurePoset poset(g, k, d, 2);
      const auto& ps = poset.pieces();
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < ps.size(); ++b)
          ASSERT_EQ(poset.leq(a, b), closure_leq(g, ps[a], ps[b])) << label << describe(g, ps[a]) << describe(g, ps[b]);
    }
  }
}

TEST(Closure, PartialOrderAndMonotoneDimension) {
  std::vector<Case> cases = small_cases();
  cases.push_back({"A3", {}});
  cases.push_back({"A3", {2, 1, 0}});
  for (const auto& [label, images] : cases) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : subsets_of(g.all_nodes())) {
      ClosurePoset poset(g, k, d);
      const auto violation = poset.partial_order_violation();
      ASSERT_FALSE(violation.has_value()) << label << ": " << *violation;
      for (std::size_t u = 0; u < poset.size(); ++u) {
        const auto& row = poset.downset(u);
        for (auto l = row.find_first(); l != boost::dynamic_bitset<>::npos; l = row.find_next(l))
          ASSERT_LE(poset.dimension(l), poset.dimension(u));
      }
    }
  }
}

TEST(Closure, CoversOfA1) {
  WeylGroup g(CartanType::named("A1"));
  ClosurePoset poset(g, Subset(), DiagramAut::identity(1));
  ASSERT_EQ(poset.size(), 6u);
  const auto covers = poset.covers();
  for (const auto& [l, u] : covers) {
    EXPECT_TRUE(poset.leq(l, u));
    EXPECT_NE(l, u);
  }
  // Every strict relation is a chain of covers: the relation is the
  // reflexive-transitive closure of the covers.
  std::vector<boost::dynamic_bitset<>> reach(poset.size(), boost::dynamic_bitset<>(poset.size()));
  for (std::size_t i = 0; i < poset.size(); ++i) reach[i].set(i);
  for (std::size_t pass = 0; pass < poset.size(); ++pass)
    for (const auto& [l, u] : covers) reach[u] |= reach[l];
  for (std::size_t i = 0; i < poset.size(); ++i) EXPECT_EQ(reach[i], poset.downset(i));
}

TEST(BoundaryProfile, Examples) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  const auto e = g.identity();
  auto prof = boundary_profile(g, make_piece(g, Subset(1), e, e, Subset(), id));
  EXPECT_EQ(prof.at(Subset(1)), 2);
  EXPECT_EQ(prof.at(Subset()), 1);
  prof = boundary_profile(g, make_piece(g, Subset(1), e, e, Subset(1), id));
  EXPECT_EQ(prof.at(Subset(1)), 3);
  EXPECT_EQ(prof.at(Subset()), 2);
}

TEST(BoundaryProfile, FormulaRankTwo) {
  for (const auto& [label, images] : small_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : subsets_of(g.all_nodes()))
      for (const auto& p : enumerate_pieces(g, k, d))
        for (const auto& [jp, dim] : boundary_profile(g, p))
          ASSERT_EQ(dim, piece_dimension(g, p) - p.j.size() + jp.size()) << describe(g, p);
  }
}

TEST(K1, Examples) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  const auto e = g.identity();
  for (const auto& p : enumerate_pieces(g, Subset(), id)) EXPECT_EQ(K1_of(g, p), Subset());
  EXPECT_EQ(K1_of(g, make_piece(g, Subset(1), e, e, Subset(1), id)), Subset(1));
  EXPECT_EQ(K1_of(g, make_piece(g, Subset(), e, e, Subset(1), id)), Subset());
}

TEST(Semistable, Counts) {
  for (const auto& [label, n] : std::vector<std::pair<std::string, std::size_t>>{{"A1", 2}, {"A2", 4}, {"A3", 8}}) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    for (const auto& d : diagram_automorphisms(ct)) {
      const auto ss = semistable_g_pieces(g, d);
      EXPECT_EQ(ss.size(), n);
      for (const auto& gp : ss) EXPECT_EQ(gp.w, g.identity());
    }
  }
}

TEST(Semistable, ClosureOrderIsInclusion) {
  for (const auto& [label, images] : small_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    const auto e = g.identity();
    for (auto j : subsets_of(g.all_nodes()))
      for (auto jp : subsets_of(g.all_nodes()))
        EXPECT_EQ(closure_leq(g, make_piece(g, j, e, e, g.all_nodes(), d), make_piece(g, jp, e, e, g.all_nodes(), d)),
                  j.is_subset_of(jp));
  }
}

TEST(Saturate, Examples) {
  WeylGroup g(CartanType::named("A1"));
  const auto id = DiagramAut::identity(1);
  const auto e = g.identity(), s = g.generator(0);
  for (const auto& p : enumerate_pieces(g, Subset(), id))
    EXPECT_EQ(saturate_piece(g, p.j, p.w, p.v, Subset(), id), p);
  EXPECT_EQ(saturate_piece(g, Subset(1), e, e, Subset(1), id), make_piece(g, Subset(1), e, e, Subset(1), id));
  // The only factorization is w = s, v = e, which breaks l(y) - l(x) = l(v) - l(w).
  try {
    saturate_piece(g, Subset(), e, s, Subset(1), id);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNoNormalization);
  }
  // Its closure inside Z_{emptyset} is both G-pieces there; the open one is on top.
  const auto closure = saturate_closure(g, Subset(), e, s, Subset(1), id);
  ASSERT_EQ(closure.size(), 2u);
  EXPECT_EQ(containing_piece(g, Subset(), e, s, Subset(1), id), make_piece(g, Subset(), e, e, Subset(1), id));
}

TEST(Saturate, NormalizationIsTopOfClosure) {
  for (const auto& [label, images] : small_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : subsets_of(g.all_nodes()))
      for (auto j : subsets_of(g.all_nodes()))
        for (auto x : g.elements()) {
          if (!g.is_right_minimal(x, d.apply(j))) continue;
          for (auto y : g.elements()) {
            const auto top = containing_piece(g, j, x, y, k, d);
            try {
              ASSERT_EQ(saturate_piece(g, j, x, y, k, d), top);
            } catch (const Error& err) {
              ASSERT_EQ(err.code(), ErrorCode::kNoNormalization);
            }
          }
        }
  }
}

TEST(CompactificationTriple, IsAdmissible) {
  for (const auto& label : {"A2", "A3", "B3"}) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    for (const auto& d : diagram_automorphisms(ct))
      for (auto j : subsets_of(g.all_nodes())) {
        const auto c = compactification_triple(g, j, d);
        EXPECT_EQ(c.j2, j);
        EXPECT_EQ(c.j1.size(), j.size());
      }
  }
  WeylGroup a2(CartanType::named("A2"));
  // J = {0}: w0 w0^{0} = s0 s1 ... sends alpha_0 to alpha_1.
  EXPECT_EQ(compactification_triple(a2, Subset(1), DiagramAut::identity(2)).j1, Subset(2));
}
