#include <gtest/gtest.h>

#include <map>

#include "isrlab/group_algebra.hpp"
#include "isrlab/random.hpp"

using namespace isrlab;

namespace {

AlgebraElement random_algebra(Truncation t, Rng& rng, int terms = 4) {
  std::vector<AlgebraElement::Term> out;
  for (int k = 0; k < terms; ++k) {
    const long re = static_cast<long>(rng.below(7)) - 3, im = static_cast<long>(rng.below(5)) - 2;
    const long den = static_cast<long>(rng.below(3)) + 1;
    out.push_back({random_element(t, rng), GaussianRational(mpq_class(re, den), mpq_class(im, 1))});
  }
  return AlgebraElement::from_terms(std::move(out));
}

// schoolbook product keyed by an ordered map
AlgebraElement naive_product(const AlgebraElement& x, const AlgebraElement& y) {
  std::map<GroupElement, GaussianRational> acc;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) acc[a.g * b.g] += a.c * b.c;
  std::vector<AlgebraElement::Term> terms;
  for (auto& [g, c] : acc) terms.push_back({g, c});
  return AlgebraElement::from_terms(std::move(terms));
}

const std::vector<Truncation> kFamilies = {
    {Family::Affine, 3}, {Family::Wreath, 4}, {Family::Lamplighter, 5}, {Family::Cantor, 2}};

}  // namespace

TEST(GaussianRational, Arithmetic) {
  const GaussianRational i(0, 1);
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(GaussianRational::frac(2, 4), GaussianRational::parse("1/2"));
  EXPECT_EQ((GaussianRational(1, 1) / GaussianRational(1, -1)), i);
  EXPECT_EQ(GaussianRational(3, -4).norm_sq(), 25);
  EXPECT_EQ(GaussianRational(mpq_class(1, 2), mpq_class(-1, 3)).to_string(), "1/2-1/3i");
  EXPECT_THROW(GaussianRational::parse("x"), ParseError);
}

TEST(AlgebraElement, FromTermsMergesAndDropsZeros) {
  const GroupElement g = make_vector(F2Vector::unit(1));
  const AlgebraElement x = AlgebraElement::from_terms({{g, 1}, {g, -1}, {GroupElement{}, 2}});
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(x.coefficient(GroupElement{}), GaussianRational(2));
  EXPECT_EQ(x.coefficient(g), GaussianRational(0));
  EXPECT_TRUE((x - x).is_zero());
}

TEST(AlgebraElement, ConvolutionMatchesSchoolbook) {
  Rng rng(21);
  for (const auto& t : kFamilies)
    for (int k = 0; k < 30; ++k) {
      const AlgebraElement x = random_algebra(t, rng), y = random_algebra(t, rng);
      EXPECT_EQ(x * y, naive_product(x, y));
    }
}

TEST(AlgebraElement, RingAxioms) {
  Rng rng(22);
  for (const auto& t : kFamilies) {
    const AlgebraElement one = AlgebraElement::identity(t.family, t.family == Family::Lamplighter ? t.n : 1);
    for (int k = 0; k < 20; ++k) {
      const AlgebraElement x = random_algebra(t, rng), y = random_algebra(t, rng), z = random_algebra(t, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(one * x, x);
    }
  }
}

TEST(AlgebraElement, AdjointAndTrace) {
  Rng rng(23);
  for (const auto& t : kFamilies)
    for (int k = 0; k < 20; ++k) {
      const AlgebraElement x = random_algebra(t, rng), y = random_algebra(t, rng);
      EXPECT_EQ(adjoint(x * y), adjoint(y) * adjoint(x));
      EXPECT_EQ(adjoint(adjoint(x)), x);
      EXPECT_EQ(trace(x * y), trace(y * x));
      EXPECT_EQ(inner_product(x, y), trace(adjoint(x) * y));
      EXPECT_EQ(inner_product(x, x), GaussianRational(norm_sq(x)));
      // tau(x* x) = sum |c_g|^2
      mpq_class sum = 0;
      for (const auto& term : x.terms()) sum += term.c.norm_sq();
      EXPECT_EQ(norm_sq(x), sum);
    }
}

TEST(AlgebraElement, AdIsConjugationByUnitary) {
  Rng rng(24);
  for (const auto& t : kFamilies)
    for (int k = 0; k < 20; ++k) {
      const GroupElement g = random_element(t, rng);
      const AlgebraElement x = random_algebra(t, rng);
      EXPECT_EQ(ad(g, x), AlgebraElement::unit(g) * x * AlgebraElement::unit(inverse(g)));
    }
}

TEST(AlgebraElement, CommutatorOfVectorsVanishes) {
  const AlgebraElement a = AlgebraElement::unit(make_vector(F2Vector::unit(1)));
  const AlgebraElement b = AlgebraElement::unit(make_vector(F2Vector::unit(2)));
  EXPECT_TRUE(commutator(a, b).is_zero());
  const AlgebraElement s = AlgebraElement::unit(make_affine(F2Matrix::permutation({2, 1})));
  EXPECT_FALSE(commutator(a, s).is_zero());
}

TEST(AlgebraElement, MixedFamiliesRejected) {
  const AlgebraElement a = AlgebraElement::unit(make_vector(F2Vector::unit(1)));
  const AlgebraElement b = AlgebraElement::unit(make_wreath(Permutation::transposition(1, 2)));
  EXPECT_THROW(a * b, FamilyMismatch);
  EXPECT_THROW(a + b, FamilyMismatch);
}
