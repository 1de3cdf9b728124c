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

#include "weylstrata/errors.hpp"
#include "weylstrata/parabolic_closure.hpp"

using namespace weylstrata;

namespace {

struct Case {
  std::string label;
  std::vector<int> delta;
};

std::vector<Case> reference_cases() {
  return {{"A1", {}}, {"A2", {}}, {"A2", {1, 0}}, {"B2", {}}, {"G2", {}},
          {"A3", {}}, {"A3", {2, 1, 0}}, {"B3", {}}};
}

DiagramAut aut(const CartanType& ct, const std::vector<int>& images) {
  return images.empty() ? DiagramAut::identity(ct.rank()) : DiagramAut::from_images(ct, images);
}

std::vector<Subset> stable_subsets(const WeylGroup& g, const DiagramAut& d) {
  std::vector<Subset> out;
  for (auto k : subsets_of(g.all_nodes()))
    if (d.fixes(k)) out.push_back(k);
  return out;
}

}  // namespace

TEST(JDelta, Examples) {
  const auto ct = CartanType::named("A2");
  const auto flip = DiagramAut::from_images(ct, {1, 0});
  for (auto j : subsets_of(Subset(3))) EXPECT_EQ(j_delta(j, DiagramAut::identity(2)), j);
  EXPECT_EQ(j_delta(Subset(1), flip), Subset());
  EXPECT_EQ(j_delta(Subset(3), flip), Subset(3));
  const auto a3 = DiagramAut::from_images(CartanType::named("A3"), {2, 1, 0});
  EXPECT_EQ(j_delta(Subset(0b011), a3), Subset(0b010));
  EXPECT_EQ(j_delta(Subset(0b101), a3), Subset(0b101));
}

TEST(ParabolicClosure, Examples) {
  WeylGroup a1(CartanType::named("A1"));
  const auto id1 = DiagramAut::identity(1);
  const auto e = a1.identity(), s = a1.generator(0);
  const std::vector<PieceIndex> expected = {make_piece(a1, Subset(), e, e, Subset(), id1),
                                            make_piece(a1, Subset(), s, s, Subset(), id1),
                                            make_piece(a1, Subset(1), e, e, Subset(), id1)};
  EXPECT_EQ(parabolic_closure_index(a1, Subset(), id1), expected);
  const auto sets = pp_index_sets(a1, Subset(), id1);
  EXPECT_EQ(sets.by_twisted_reps, expected);
  EXPECT_EQ(sets.j_outer, expected);
  EXPECT_EQ(sets.w_outer, expected);

  const auto ct = CartanType::named("A2");
  WeylGroup a2(ct);
  const auto flip = DiagramAut::from_images(ct, {1, 0});
  std::vector<WeylElement> ws;
  for (const auto& p : parabolic_closure_index(a2, Subset(), flip))
    if (p.j == Subset(1)) ws.push_back(p.v);
  EXPECT_EQ(ws, (std::vector<WeylElement>{a2.identity(), a2.from_word(std::vector<int>{0, 1})}));
  try {
    parabolic_closure_index(a2, Subset(1), flip);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kKNotDeltaStable);
  }
}

TEST(ParabolicClosure, FullKIsSemistableLocus) {
  for (const auto& [label, images] : reference_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    const auto pci = parabolic_closure_index(g, g.all_nodes(), d);
    const auto ss = semistable_g_pieces(g, d);
    ASSERT_EQ(pci.size(), ss.size());
    for (std::size_t i = 0; i < pci.size(); ++i) {
      EXPECT_EQ(pci[i].j, ss[i].j);
      EXPECT_EQ(pci[i].w, g.identity());
      EXPECT_EQ(pci[i].v, g.identity());
    }
    const auto sets = pp_index_sets(g, g.all_nodes(), d);
    EXPECT_EQ(sets.by_twisted_reps, pci);
  }
}

TEST(ParabolicClosure, ThreeDescriptionsAgree) {
  for (const auto& [label, images] : reference_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : stable_subsets(g, d)) {
      const auto pci = parabolic_closure_index(g, k, d);
      const auto sets = pp_index_sets(g, k, d);
      ASSERT_EQ(sets.by_twisted_reps, pci) << label;
      ASSERT_EQ(sets.j_outer, pci) << label;
      ASSERT_EQ(sets.w_outer, pci) << label;
    }
  }
}

TEST(ParabolicClosure, FlipCardinality) {
  // Sum over J of |{x in W^J : x W_J meets W^delta}| for A2 with the flip, K = empty.
  // Oracle: W^delta = {e, w0}; J = {}: 2, J = {0}: {e, s0 s1}, J = {1}: {e, s1 s0}, J = I: {e}.
  const auto ct = CartanType::named("A2");
  WeylGroup g(ct);
  EXPECT_EQ(parabolic_closure_index(g, Subset(), DiagramAut::from_images(ct, {1, 0})).size(), 7u);
}

TEST(Epsilon, Examples) {
  const auto ct = CartanType::named("A2");
  WeylGroup g(ct);
  const auto flip = DiagramAut::from_images(ct, {1, 0});
  const auto m = epsilon(g, Subset(1), Subset(), flip);
  ASSERT_EQ(m.pairs.size(), 2u);
  EXPECT_EQ(m.pairs[0], std::make_pair(g.identity(), g.identity()));
  EXPECT_EQ(m.pairs[1], std::make_pair(g.longest(), g.from_word(std::vector<int>{0, 1})));
  for (const auto& [w, x] : m.pairs) EXPECT_EQ(k_cap_w_j_delta(g, w, Subset(1), Subset(), flip), Subset());
  for (const auto& [w, x] : epsilon(g, Subset(), Subset(), flip).pairs) EXPECT_EQ(w, x);
}

TEST(Epsilon, BijectionAndMaximalityEverywhere) {
  for (const auto& [label, images] : reference_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : stable_subsets(g, d))
      for (auto j : subsets_of(g.all_nodes())) {
        const auto m = epsilon(g, j, k, d);
        for (const auto& [w, x] : m.pairs)
          ASSERT_EQ(max_stable_preimage(g, x, j, k, d), k_cap_w_j_delta(g, w, j, k, d)) << label;
      }
  }
}

TEST(K1, AgreesWithEpsilonFormulaOnClosureIndexPieces) {
  for (const auto& [label, images] : reference_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : stable_subsets(g, d))
      for (auto j : subsets_of(g.all_nodes()))
        for (const auto& [w, x] : epsilon(g, j, k, d).pairs) {
          const auto p = make_piece(g, j, g.apply_aut(d, x), x, k, d);
          const auto expected = k_cap_w_j_delta(g, w, j, k, d);
          ASSERT_EQ(K1_of(g, p, K1Reading::kDeltaJ), expected) << label << describe(g, p);
        }
  }
}

TEST(K1, LiteralReadingDisagreesUnderTwist) {
  // A3 with the flip, J = {0,1}, K = {1}, w = s0 s1 s2 s1 s0 and x = min(w W_J) = s0 s1 s2.
  // The piece is [J, delta(x), x] = [J, s2 s1 s0, s0 s1 s2]; (s2 s1 s0)^{-1} sends alpha_1 to
  // alpha_2, which lies in delta(J) = {1,2} but not in J.
  const auto ct = CartanType::named("A3");
  WeylGroup g(ct);
  const auto d = DiagramAut::from_images(ct, {2, 1, 0});
  const auto p = make_piece(g, Subset(0b011), g.from_word(std::vector<int>{2, 1, 0}),
                            g.from_word(std::vector<int>{0, 1, 2}), Subset(0b010), d);
  const auto w = g.from_word(std::vector<int>{0, 1, 2, 1, 0});
  EXPECT_EQ(k_cap_w_j_delta(g, w, p.j, p.k, d), Subset(0b010));
  EXPECT_EQ(K1_of(g, p, K1Reading::kDeltaJ), Subset(0b010));
  EXPECT_EQ(K1_of(g, p, K1Reading::kLiteral), Subset());
}

TEST(Isolated, Examples) {
  WeylGroup a1(CartanType::named("A1"));
  EXPECT_EQ(isolated_boundary_index(a1, Subset(1), DiagramAut::identity(1)),
            (std::vector<IsolatedIndex>{{Subset(1), a1.identity()}}));
  const auto ct = CartanType::named("A2");
  WeylGroup a2(ct);
  EXPECT_EQ(isolated_boundary_index(a2, Subset(3), DiagramAut::from_images(ct, {1, 0})),
            (std::vector<IsolatedIndex>{{Subset(3), a2.identity()}}));
  // K empty: every (J, w) with w in W^J.
  std::size_t expected = 0;
  for (auto j : subsets_of(a2.all_nodes())) expected += a2.order() / a2.parabolic(j).size();
  EXPECT_EQ(isolated_boundary_index(a2, Subset(), DiagramAut::identity(2)).size(), expected);
}

TEST(Isolated, SubsetOfParabolicClosure) {
  for (const auto& [label, images] : reference_cases()) {
    const auto ct = CartanType::named(label);
    WeylGroup g(ct);
    const auto d = aut(ct, images);
    for (auto k : stable_subsets(g, d))
      for (const auto& [j, w] : isolated_boundary_index(g, k, d)) {
        const auto dom = epsilon_domain(g, j, k, d);
        ASSERT_TRUE(std::binary_search(dom.begin(), dom.end(), w));
        // w^{-1}(K) inside J_delta makes K cap w(J_delta) all of K.
        ASSERT_EQ(k_cap_w_j_delta(g, w, j, k, d), k);
      }
  }
}
