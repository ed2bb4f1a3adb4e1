#include <gtest/gtest.h>

#include <set>

#include "isrlab/f2_linalg.hpp"

using namespace isrlab;

namespace {

// all of F2^n
std::vector<F2Vector> cube(int n) {
  std::vector<F2Vector> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) out.emplace_back(x);
  return out;
}

std::set<std::uint64_t> naive_span(const std::vector<F2Vector>& gens) {
  std::set<std::uint64_t> s{0};
  for (F2Vector g : gens) {
    std::set<std::uint64_t> next = s;
    for (auto x : s) next.insert(x ^ g.bits());
    s = std::move(next);
  }
  return s;
}

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

TEST(F2Vector, BitstringIsLeftToRight) {
  const F2Vector v = F2Vector::from_bitstring("0110");
  EXPECT_FALSE(v.get(1));
  EXPECT_TRUE(v.get(2));
  EXPECT_TRUE(v.get(3));
  EXPECT_EQ(v, F2Vector::unit(2) + F2Vector::unit(3));
  EXPECT_EQ(v.to_bitstring(5), "01100");
  EXPECT_EQ(v.dim(), 3);
  EXPECT_EQ(v.weight(), 2);
  EXPECT_THROW(F2Vector::from_bitstring("012"), ParseError);
}

TEST(F2Vector, DotIsParityOfOverlap) {
  EXPECT_EQ(dot(F2Vector::from_bitstring("110"), F2Vector::from_bitstring("011")), 1);
  EXPECT_EQ(dot(F2Vector::from_bitstring("111"), F2Vector::from_bitstring("011")), 0);
}

TEST(F2Matrix, CanonicalFormIgnoresPadding) {
  EXPECT_EQ(F2Matrix::from_bitstring("100010001", 3), F2Matrix{});
  EXPECT_EQ(F2Matrix::from_bitstring("0110", 2), F2Matrix::from_bitstring("010100001", 3));
  EXPECT_TRUE(F2Matrix::from_bitstring("1", 1).is_identity());
}

TEST(F2Matrix, PermutationSendsBasisVectors) {
  const F2Matrix p = F2Matrix::permutation({2, 3, 1});
  EXPECT_EQ(p.apply(F2Vector::unit(1)), F2Vector::unit(2));
  EXPECT_EQ(p.apply(F2Vector::unit(2)), F2Vector::unit(3));
  EXPECT_EQ(p.apply(F2Vector::unit(3)), F2Vector::unit(1));
  EXPECT_EQ(p.to_bitstring(3), "001100010");
}

TEST(F2Matrix, ElementaryAddsColumn) {
  // (I + E_12) e2 = e1 + e2
  const F2Matrix t = F2Matrix::elementary(1, 2);
  EXPECT_EQ(t.apply(F2Vector::unit(2)), F2Vector::from_bitstring("11"));
  EXPECT_EQ(t.apply(F2Vector::unit(1)), F2Vector::unit(1));
  EXPECT_THROW(F2Matrix::elementary(2, 2), SingularMatrix);
}

TEST(F2Matrix, RowActionIsTransposeAction) {
  for (const auto& g : general_linear_group(3))
    for (F2Vector w : cube(3)) EXPECT_EQ(g.apply_row(w), transpose(g).apply(w));
}

TEST(F2Matrix, GLOrders) {
  // |GL(n,2)| = prod_{i<n} (2^n - 2^i)
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
    EXPECT_EQ(general_linear_group(n).size(), order) << n;
    EXPECT_EQ(gl_order(n), order);
  }
  EXPECT_THROW(general_linear_group(5), GroupTooLarge);
}

TEST(F2Matrix, MultiplicationMatchesComposition) {
  const auto& gl = general_linear_group(3);
  for (std::size_t a = 0; a < gl.size(); a += 7)
    for (std::size_t b = 0; b < gl.size(); b += 5)
      for (F2Vector x : cube(3)) EXPECT_EQ((gl[a] * gl[b]).apply(x), gl[a].apply(gl[b].apply(x)));
}

TEST(F2Matrix, InverseOverGL3) {
  for (const auto& g : general_linear_group(3)) {
    const F2Matrix h = mat_inverse(g);
    EXPECT_TRUE((g * h).is_identity());
    EXPECT_TRUE((h * g).is_identity());
  }
  EXPECT_THROW(mat_inverse(F2Matrix::from_bitstring("1111", 2)), SingularMatrix);
}

TEST(F2Matrix, RangeOfGMinusIdentityByBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : general_linear_group(n)) {
      std::set<std::uint64_t> image;
      for (F2Vector x : cube(n)) image.insert((g.apply(x) + x).bits());
      std::set<std::uint64_t> got;
      for (F2Vector v : range_subgroup(g)) got.insert(v.bits());
      EXPECT_EQ(got, image);
      EXPECT_EQ(rank_defect(g), log2_exact(image.size()));
      EXPECT_EQ(naive_span(range_basis(g)), image);
    }
}

TEST(F2Matrix, RangeCap) {
  const F2Matrix shift = F2Matrix::permutation({2, 3, 4, 5, 1});
  EXPECT_EQ(range_subgroup(shift).size(), 16u);
  EXPECT_THROW(range_subgroup(shift, 8), RangeTooLarge);
}

TEST(F2Linear, RankAndSpanAgreeWithNaiveClosure) {
  const std::vector<std::vector<std::string>> families = {
      {"1100", "0110", "1010"}, {"1", "1", "0"}, {"1000", "0100", "0010", "0001"}, {}, {"0000"}};
  for (const auto& fam : families) {
    std::vector<F2Vector> vs;
    for (const auto& s : fam) vs.push_back(F2Vector::from_bitstring(s));
    const auto span = naive_span(vs);
    EXPECT_EQ(rank_of(vs), log2_exact(span.size()));
    std::set<std::uint64_t> got;
    for (F2Vector v : span_of(vs)) got.insert(v.bits());
    EXPECT_EQ(got, span);
  }
}

TEST(F2Linear, TransvectionsAreRankOneInvolutions) {
  std::size_t count = 0;
  for (const auto& g : general_linear_group(3)) {
    const bool involution = (g * g).is_identity() && !g.is_identity();
    const bool t = involution && rank_defect(g) == 1;
    EXPECT_EQ(is_transvection(g), t);
    count += t;
  }
  // (2^3 - 1)(2^2 - 1) ... nonzero a, b with b(a) = 0: 7 * 3
  EXPECT_EQ(count, 21u);
}

TEST(F2Linear, TransvectionFactorizationRecomposes) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& g : general_linear_group(n)) {
      if (g.is_identity()) continue;
      const auto factors = transvection_factorize(g);
      ASSERT_FALSE(factors.empty());
      F2Matrix prod;
      std::vector<F2Vector> ranges;
      for (const auto& t : factors) {
        EXPECT_TRUE(is_transvection(t));
        prod = prod * t;
        for (F2Vector v : range_basis(t)) ranges.push_back(v);
      }
      EXPECT_EQ(prod, g);
      EXPECT_EQ(naive_span(ranges), naive_span(range_basis(g)));
    }
  EXPECT_THROW(transvection_factorize(F2Matrix{}), IdentityInput);
}

TEST(F2Linear, FactorizationOfAFourCycle) {
  const F2Matrix g = F2Matrix::permutation({2, 3, 4, 1});
  F2Matrix prod;
  for (const auto& t : transvection_factorize(g)) prod = prod * t;
  EXPECT_EQ(prod, g);
}
