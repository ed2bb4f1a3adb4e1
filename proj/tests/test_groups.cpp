#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "isrlab/groups.hpp"
#include "isrlab/random.hpp"

using namespace isrlab;

namespace {

// (g, v) -> [[g, g v], [0, 1]] acting on (x, 1); a faithful linear model of g·v
F2Matrix block_model(const GroupElement& e, int n) {
  const AffinePart& a = e.affine();
  const F2Vector gv = a.g.apply(a.v);
  std::vector<std::uint64_t> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(a.g.row(i) | (std::uint64_t{gv.get(i)} << n));
  rows.push_back(std::uint64_t{1} << n);
  return F2Matrix::from_rows(rows);
}

// v·s^t as the wreath element c^t · c^{-t}(v), c = (1 2 ... m)
GroupElement lamplighter_as_wreath(const GroupElement& e) {
  const LamplighterPart& l = e.lamplighter();
  std::vector<int> pts;
  for (int i = 1; i <= l.m; ++i) pts.push_back(i);
  const Permutation c = Permutation::cycle(pts);
  Permutation ct;
  for (int k = 0; k < l.t; ++k) ct = c * ct;
  return make_wreath(ct, ct.inverse().act(F2Vector(l.v)));
}

// sigma f~_A as a signed permutation x -> (sigma(x), -1 if x in A), up to a global sign
std::vector<std::pair<int, int>> signed_model(const GroupElement& e, int level) {
  const CantorPart c = cantor_at_level(e.cantor(), level);
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < c.perm.size(); ++x) out.emplace_back(c.perm[x], ((c.subset >> x) & 1) ? -1 : 1);
  if (out[0].second < 0)
    for (auto& p : out) p.second = -p.second;
  return out;
}

std::vector<std::pair<int, int>> compose(const std::vector<std::pair<int, int>>& a,
                                         const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [y, s] : b) out.emplace_back(a[y].first, s * a[y].second);
  if (out[0].second < 0)
    for (auto& p : out) p.second = -p.second;
  return out;
}

const std::vector<Truncation> kSmall = {
    {Family::Affine, 2}, {Family::Affine, 3}, {Family::Wreath, 3}, {Family::Wreath, 4},
    {Family::Lamplighter, 3}, {Family::Lamplighter, 5}, {Family::Cantor, 1}, {Family::Cantor, 2}};

}  // namespace

TEST(Permutation, OneLineAndCycles) {
  const Permutation p({2, 3, 1, 4});
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(4), 4);
  EXPECT_EQ(p(9), 9);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p, Permutation::cycle({1, 2, 3}));
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(Permutation::transposition(2, 5).sign(), -1);
  EXPECT_EQ((p * p.inverse()), Permutation{});
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)");
  EXPECT_THROW(Permutation({1, 1}), ParseError);
}

TEST(Permutation, ComposesRightToLeft) {
  const Permutation a = Permutation::transposition(1, 2), b = Permutation::transposition(2, 3);
  EXPECT_EQ((a * b)(3), 1);  // b sends 3 to 2, a sends 2 to 1
}

TEST(Permutation, ActMatchesPermutationMatrix) {
  const Permutation p({3, 1, 2});
  const F2Matrix m = F2Matrix::permutation({3, 1, 2});
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(p.act(F2Vector(x)), m.apply(F2Vector(x)));
}

TEST(Affine, ProductFormula) {
  // (g1 v1)(g2 v2) = g1 g2 · (g2^-1 v1 + v2)
  const F2Matrix g1 = F2Matrix::from_bitstring("110010001", 3), g2 = F2Matrix::permutation({3, 1, 2});
  const F2Vector v1 = F2Vector::from_bitstring("100"), v2 = F2Vector::from_bitstring("011");
  const GroupElement p = make_affine(g1, v1) * make_affine(g2, v2);
  EXPECT_EQ(p.affine().g, g1 * g2);
  EXPECT_EQ(p.affine().v, mat_inverse(g2).apply(v1) + v2);
}

TEST(Affine, BlockModelIsAHomomorphism) {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const GroupElement a = random_element({Family::Affine, 3}, rng), b = random_element({Family::Affine, 3}, rng);
    EXPECT_EQ(block_model(a * b, 3), block_model(a, 3) * block_model(b, 3));
  }
}

TEST(Affine, SingularMatrixRejected) {
  EXPECT_THROW(make_affine(F2Matrix::from_bitstring("1111", 2)), SingularMatrix);
}

TEST(Lamplighter, WreathModelIsAHomomorphism) {
  Rng rng(12);
  for (int m : {3, 4, 6}) {
    for (int k = 0; k < 200; ++k) {
      const GroupElement a = random_element({Family::Lamplighter, m}, rng);
      const GroupElement b = random_element({Family::Lamplighter, m}, rng);
      EXPECT_EQ(lamplighter_as_wreath(a * b), lamplighter_as_wreath(a) * lamplighter_as_wreath(b));
    }
  }
  EXPECT_THROW(make_lamplighter(0, 0, 0), ModulusOutOfRange);
  EXPECT_THROW(make_lamplighter(3, 8, 0), ParseError);
}

TEST(Lamplighter, ProductShiftsSecondLamps) {
  // (delta_0, 1)(delta_0, 0) lights lamps 0 and 1
  const GroupElement p = make_lamplighter(4, 1, 1) * make_lamplighter(4, 1, 0);
  EXPECT_EQ(p, make_lamplighter(4, 0b11, 1));
}

TEST(Cantor, SignedPermutationModelIsAHomomorphism) {
  Rng rng(13);
  for (int m : {1, 2, 3}) {
    for (int k = 0; k < 200; ++k) {
      const GroupElement a = random_element({Family::Cantor, m}, rng), b = random_element({Family::Cantor, m}, rng);
      EXPECT_EQ(signed_model(a * b, m), compose(signed_model(a, m), signed_model(b, m)));
    }
  }
}

TEST(Cantor, SubsetsAreModuloComplement) {
  EXPECT_EQ(make_cantor_function(1, 0b01), make_cantor_function(1, 0b10));
  EXPECT_TRUE(make_cantor_function(2, 0b1111).is_identity());
  EXPECT_EQ(make_cantor_function(1, 0b01), make_cantor_function(2, 0b0011));  // [0] = [00] u [01]
}

TEST(Cantor, EmbeddingDoublesPermutations) {
  // s -> (s, s): the level-1 swap is the level-2 permutation 00<->10, 01<->11
  const GroupElement s = make_cantor_transposition(1, 0, 1);
  const CantorPart at2 = cantor_at_level(s.cantor(), 2);
  EXPECT_EQ(std::vector<int>(at2.perm.begin(), at2.perm.end()), (std::vector<int>{2, 3, 0, 1}));
  EXPECT_EQ(parse_word("10"), 2);
  EXPECT_EQ(word_string(2, 3), "010");
  // products across levels agree with products at a common level
  const GroupElement t = make_cantor_transposition(2, 0, 1);
  const CantorPart tl = cantor_at_level(t.cantor(), 2);
  EXPECT_EQ(s * t, make_cantor(2, std::vector<int>(at2.perm.begin(), at2.perm.end())) *
                       make_cantor(2, std::vector<int>(tl.perm.begin(), tl.perm.end())));
}

TEST(Groups, AxiomsOnRandomTriples) {
  Rng rng(5);
  for (const auto& t : kSmall) {
    const GroupElement e = GroupElement::identity(t.family, t.family == Family::Lamplighter ? t.n : 1);
    for (int k = 0; k < 100; ++k) {
      const GroupElement a = random_element(t, rng), b = random_element(t, rng), c = random_element(t, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * inverse(a), e);
      EXPECT_EQ(inverse(a) * a, e);
      EXPECT_EQ(a * e, a);
      EXPECT_EQ(conjugate(a, b), a * b * inverse(a));
      EXPECT_TRUE(in_truncation(a, t));
    }
  }
}

TEST(Groups, EnumerationMatchesOrder) {
  const std::vector<std::pair<Truncation, std::uint64_t>> cases = {
      {{Family::Affine, 2}, 24},     {{Family::Affine, 3}, 1344},    {{Family::Wreath, 3}, 48},
      {{Family::Wreath, 4}, 384},    {{Family::Lamplighter, 4}, 64}, {{Family::Lamplighter, 5}, 160},
      {{Family::Cantor, 1}, 4},      {{Family::Cantor, 2}, 192}};
  for (const auto& [t, order] : cases) {
    EXPECT_EQ(group_order(t), order);
    const auto all = enumerate_group(t);
    EXPECT_EQ(all.size(), order);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<GroupElement>(all.begin(), all.end()).size(), order);
  }
  EXPECT_THROW(enumerate_group({Family::Affine, 3}, 100), GroupTooLarge);
}

TEST(Groups, GeneratorsGenerate) {
  for (const auto& t : kSmall) {
    const auto sub = generated_subgroup(group_generators(t));
    ASSERT_TRUE(sub.has_value());
    EXPECT_EQ(sub->size(), group_order(t));
  }
}

TEST(Groups, NormalClosuresOfAffine3) {
  const Truncation t{Family::Affine, 3};
  EXPECT_EQ(normal_closure({GroupElement{}}, t)->size(), 1u);
  EXPECT_EQ(normal_closure({make_vector(F2Vector::unit(1))}, t)->size(), 8u);
  EXPECT_EQ(normal_closure({make_affine(F2Matrix::permutation({2, 1}))}, t)->size(), 1344u);
  EXPECT_FALSE(normal_closure({make_affine(F2Matrix::permutation({2, 1}))}, t, 100).has_value());
  EXPECT_THROW(normal_closure({make_wreath(Permutation{})}, t), FamilyMismatch);
}

TEST(Groups, CentralizerMatchesBruteForce) {
  Rng rng(3);
  for (const Truncation t : {Truncation{Family::Affine, 2}, Truncation{Family::Wreath, 3}, Truncation{Family::Cantor, 2}}) {
    const auto all = enumerate_group(t);
    for (int k = 0; k < 10; ++k) {
      const GroupElement g = random_element(t, rng);
      std::vector<GroupElement> brute;
      for (const auto& x : all)
        if (x * g == g * x) brute.push_back(x);
      EXPECT_EQ(centralizer(g, t), brute);
      const auto sub = generated_subgroup(centralizer_generators(g, t));
      ASSERT_TRUE(sub.has_value());
      EXPECT_EQ(*sub, brute);
    }
  }
}

TEST(Groups, OrbitUnderCentralizer) {
  const Truncation t{Family::Affine, 3};
  const GroupElement e1 = make_vector(F2Vector::unit(1));
  const auto c = centralizer(e1, t);
  EXPECT_EQ(orbit_under(e1, c)->size(), 1u);
  // C(e1) fixes e1 and moves e2 among the 6 vectors outside {0, e1}
  EXPECT_EQ(orbit_under(make_vector(F2Vector::unit(2)), c)->size(), 6u);
  EXPECT_EQ(orbit_under_generators(make_vector(F2Vector::unit(2)), centralizer_generators(e1, t))->size(), 6u);
}

TEST(Groups, FamilyMismatch) {
  EXPECT_THROW(make_vector(F2Vector::unit(1)) * make_wreath(Permutation{}), FamilyMismatch);
  EXPECT_THROW(make_lamplighter(3, 0, 1) * make_lamplighter(4, 0, 1), FamilyMismatch);
  EXPECT_THROW(make_wreath(Permutation{}).affine(), FamilyMismatch);
}

TEST(Groups, ParseFamily) {
  EXPECT_EQ(parse_family("affine"), Family::Affine);
  EXPECT_EQ(parse_family("cantor"), Family::Cantor);
  EXPECT_THROW(parse_family("klein"), ParseError);
}
