#include <gtest/gtest.h>

#include "isrlab/characters.hpp"
#include "isrlab/random.hpp"
#include "isrlab/zoo.hpp"

using namespace isrlab;

namespace {

// fraction of x in F2^n fixed by x -> g(x + v), or by x -> g x when `linear`
mpq_class fixed_fraction(const GroupElement& e, int n, bool linear) {
  const AffinePart& a = e.affine();
  std::uint64_t fixed = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const F2Vector p(x);
    const F2Vector image = linear ? a.g.apply(p) : a.g.apply(p + a.v);
    fixed += image == p;
  }
  mpq_class out(fixed, std::uint64_t{1} << n);
  out.canonicalize();
  return out;
}

mpq_class power(mpq_class x, int k) {
  mpq_class out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

TEST(CharacterSpec, ParseAndName) {
  EXPECT_EQ(CharacterSpec::parse("affine:k=1,d=0").name(), "affine:k=1,d=0");
  EXPECT_EQ(CharacterSpec::parse("gl:m=2").name(), "gl:m=2");
  EXPECT_EQ(CharacterSpec::parse("cantor:k=inf").name(), "cantor:k=inf");
  EXPECT_EQ(CharacterSpec::parse("regular").name(), "regular");
  EXPECT_THROW(CharacterSpec::parse("affine:d=1"), ParseError);
  EXPECT_THROW(CharacterSpec::parse("affine:k=-1,d=1"), ParseError);
  EXPECT_THROW(CharacterSpec::parse("affine:k=1,d=2"), ParseError);
  EXPECT_THROW(CharacterSpec::parse("sym:k=1"), ParseError);
}

TEST(Characters, AffineValuesAreFixedPointFractions) {
  // chi_{k,1} counts fixed points of the linear action, chi_{k,0} of the affine one
  for (int n = 2; n <= 3; ++n)
    for (const auto& g : enumerate_group({Family::Affine, n}))
      for (int k = 0; k <= 2; ++k) {
        EXPECT_EQ(evaluate(CharacterSpec::affine(k, 1), g), power(fixed_fraction(g, n, true), k));
        if (k > 0) EXPECT_EQ(evaluate(CharacterSpec::affine(k, 0), g), power(fixed_fraction(g, n, false), k));
      }
}

TEST(Characters, TranspositionValues) {
  const F2Matrix s = F2Matrix::permutation({2, 1});
  for (std::uint64_t v = 0; v < 4; ++v) {
    const GroupElement sv = make_affine(s, F2Vector(v));
    EXPECT_EQ(evaluate(CharacterSpec::affine(1, 1), sv), mpq_class(1, 2));
    EXPECT_EQ(evaluate(CharacterSpec::affine(0, 1), sv), 1);
    // R(s - I) = {00, 11}
    EXPECT_EQ(evaluate(CharacterSpec::affine(1, 0), sv), (v == 0 || v == 3) ? mpq_class(1, 2) : mpq_class(0));
  }
}

TEST(Characters, InfiniteParameter) {
  const GroupElement e1 = make_vector(F2Vector::unit(1));
  EXPECT_EQ(evaluate(CharacterSpec::affine(std::nullopt, 1), e1), 1);
  EXPECT_EQ(evaluate(CharacterSpec::affine(std::nullopt, 0), e1), 0);
  EXPECT_EQ(evaluate(CharacterSpec::affine(std::nullopt, 1), make_affine(F2Matrix::permutation({2, 1}))), 0);
  EXPECT_EQ(evaluate(CharacterSpec::cantor(std::nullopt), make_cantor_transposition(3, 0, 1)), 0);
  EXPECT_EQ(evaluate(CharacterSpec::regular(), e1), 0);
  EXPECT_EQ(evaluate(CharacterSpec::regular(), GroupElement{}), 1);
}

TEST(Characters, DomainErrors) {
  EXPECT_THROW(evaluate(CharacterSpec::gl_only(1), make_vector(F2Vector::unit(1))), HypothesisViolated);
  EXPECT_THROW(evaluate(CharacterSpec::cantor(1), make_cantor_function(1, 1)), HypothesisViolated);
  EXPECT_THROW(evaluate(CharacterSpec::affine(1, 1), make_wreath(Permutation{})), FamilyMismatch);
}

TEST(Characters, CantorValuesCountFixedWordsAtAnyLevel) {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const GroupElement g = random_element({Family::Cantor, 3}, rng);
    const CantorPart& c = g.cantor();
    const GroupElement s = make_cantor(c.level, std::vector<int>(c.perm.begin(), c.perm.end()));
    const CantorPart deeper = cantor_at_level(s.cantor(), 5);
    std::uint64_t fixed = 0;
    for (std::size_t x = 0; x < deeper.perm.size(); ++x) fixed += deeper.perm[x] == x;
    mpq_class mu(fixed, 32);
    mu.canonicalize();
    EXPECT_EQ(evaluate(CharacterSpec::cantor(2), s), mu * mu);
  }
}

TEST(PSD, SmallMatrices) {
  using M = std::vector<std::vector<mpq_class>>;
  EXPECT_TRUE(is_psd(M{{1, 1}, {1, 1}}));
  EXPECT_TRUE(is_psd(M{{0, 0}, {0, 1}}));
  EXPECT_TRUE(is_psd(M{}));
  EXPECT_FALSE(is_psd(M{{1, 2}, {2, 1}}));
  EXPECT_FALSE(is_psd(M{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_psd(M{{1, 0}, {1, 1}}));  // not symmetric
  EXPECT_FALSE(is_psd(M{{-1}}));
  // [[2,1,1],[1,2,1],[1,1,2]] has eigenvalues 1,1,4; subtracting 3/2 I breaks it
  EXPECT_TRUE(is_psd(M{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  EXPECT_FALSE(is_psd(M{{mpq_class(1, 2), 1, 1}, {1, mpq_class(1, 2), 1}, {1, 1, mpq_class(1, 2)}}));
}

TEST(PSD, SpecExamples) {
  const GroupElement s = make_affine(F2Matrix::permutation({2, 1}));
  const GroupElement t = make_affine(F2Matrix::from_bitstring("0111", 2));
  EXPECT_TRUE(is_positive_definite(CharacterSpec::affine(1, 1), {GroupElement{}, s, t}));
  EXPECT_TRUE(is_positive_definite(CharacterSpec::regular(), {GroupElement{}, s, t}));
  EXPECT_TRUE(is_positive_definite(CharacterSpec::affine(1, 1), {GroupElement{}}));
}

TEST(PSD, WholeGroupGramMatrices) {
  const auto all = enumerate_group({Family::Affine, 2});
  for (int k = 1; k <= 2; ++k)
    for (int d = 0; d <= 1; ++d) EXPECT_TRUE(is_positive_definite(CharacterSpec::affine(k, d), all)) << k << d;
  EXPECT_TRUE(is_positive_definite(CharacterSpec::affine(0, 1), all));
}

TEST(PSD, KZeroDZeroIsNotPositiveDefinite) {
  // [v in R(g-I)] pairs to 1 - 2 = -1 with the sign character of <(12)> x| F2^2
  const CharacterSpec chi = CharacterSpec::affine(0, 0);
  std::vector<GroupElement> dihedral;
  mpq_class pairing = 0;
  for (std::uint64_t v = 0; v < 4; ++v) {
    dihedral.push_back(make_vector(F2Vector(v)));
    dihedral.push_back(make_affine(F2Matrix::permutation({2, 1}), F2Vector(v)));
    pairing += evaluate(chi, dihedral[dihedral.size() - 2]) - evaluate(chi, dihedral.back());
  }
  EXPECT_EQ(pairing, -1);
  EXPECT_FALSE(is_positive_definite(chi, dihedral));
}

TEST(Centrality, RandomPairs) {
  Rng rng(42);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (int k = 0; k < 50; ++k) {
    GroupElement g = random_element({Family::Affine, 3}, rng);
    pairs.emplace_back(std::move(g), random_element({Family::Affine, 3}, rng));
  }
  for (int k = 0; k <= 2; ++k)
    for (int d = 0; d <= 1; ++d) EXPECT_TRUE(is_central(CharacterSpec::affine(k, d), pairs));
  EXPECT_TRUE(is_central(CharacterSpec::regular(), pairs));
}

TEST(MatchExpectation, SpecExamples) {
  const auto window = enumerate_group({Family::Affine, 2});
  EXPECT_TRUE(match_expectation_character(build_scalars({Family::Affine, 2}), CharacterSpec::regular(), window));
  EXPECT_TRUE(match_expectation_character(build_mexo(2), CharacterSpec::affine(1, 1), window));
  EXPECT_FALSE(match_expectation_character(build_mexo(2), CharacterSpec::affine(1, 0), window));
  // E onto L(F2^n) keeps u_v and kills everything with g != I
  EXPECT_TRUE(match_expectation_character(build_vector_algebra(2), CharacterSpec::affine(std::nullopt, 1), window));
}
