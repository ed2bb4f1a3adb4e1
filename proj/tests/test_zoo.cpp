#include <gtest/gtest.h>

#include "isrlab/zoo.hpp"

using namespace isrlab;

namespace {

AlgebraElement u(const GroupElement& g) { return AlgebraElement::unit(g); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace

TEST(Mexo, RanksAndValidation) {
  // one u_g f_g u_v per coset of R(g-I): sum over GL(2) of 2^{2 - rank}
  const SubalgebraSpec s2 = build_mexo(2);
  EXPECT_EQ(s2.projector().rank(), 12u);
  EXPECT_TRUE(verify_closure(s2));
  EXPECT_TRUE(verify_invariance(s2, s2.window()));
  EXPECT_THROW(build_mexo(1), DimensionOutOfRange);
  EXPECT_THROW(build_mexo(5), DimensionOutOfRange);
}

TEST(Mexo, ExpectationOfTransposition) {
  const SubalgebraSpec spec = build_mexo(2);
  const GroupElement s = make_affine(F2Matrix::permutation({2, 1}));
  const AlgebraElement want = u(s) * (make_cylinder(CylinderWord::parse("00")) + make_cylinder(CylinderWord::parse("11")));
  EXPECT_EQ(conditional_expectation(s, spec).output, want);
  // [0,0] + [1,1] = f_s
  EXPECT_EQ(want, u(s) * make_f(F2Matrix::permutation({2, 1})));
}

TEST(Mexo, WitnessAndProductIdentity) {
  EXPECT_TRUE(mexo_exoticness_witness(2));
  ScenarioReport r;
  EXPECT_TRUE(mexo_exoticness_witness(3, &r));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.checks.empty());
  for (const auto& g : general_linear_group(3))
    if (!g.is_identity()) EXPECT_TRUE(mexo_fproduct_identity(g));
}

TEST(MQ, ExpectationOfTransposition) {
  for (QSign sign : {QSign::Plus, QSign::Minus}) {
    const SubalgebraSpec spec = build_mq(3, sign);
    EXPECT_TRUE(verify_closure(spec));
    EXPECT_TRUE(verify_invariance(spec, group_generators({Family::Wreath, 3})));
    const GroupElement s = make_wreath(Permutation::transposition(1, 2));
    EXPECT_EQ(conditional_expectation(s, spec).output, u(s) * make_q_power(sign, {1, 2}));
    EXPECT_EQ(character_of(spec, s), GaussianRational::frac(1, 4));
  }
}

TEST(MPart, ExpectationVanishesAndWitnessIsCentral) {
  const SubalgebraSpec spec = build_mpart(3);
  EXPECT_TRUE(verify_closure(spec));
  EXPECT_TRUE(verify_invariance(spec, group_generators({Family::Wreath, 3})));
  EXPECT_TRUE(conditional_expectation(make_wreath(Permutation::transposition(1, 2)), spec).output.is_zero());
  const AlgebraElement w = mpart_center_witness({1, 2});
  EXPECT_EQ(w, make_q_power(QSign::Plus, {1, 2}) + make_q_power(QSign::Minus, {1, 2}));
  for (const auto& b : spec.basis()) EXPECT_TRUE(commutator(w, b).is_zero());
}

TEST(Cantor, CaseThreeWitness) {
  ScenarioReport r;
  EXPECT_TRUE(cantor_case3_witness(&r));
  EXPECT_TRUE(r.passed());
}

TEST(Affine, E12VanishingIdentities) {
  ScenarioReport r;
  EXPECT_TRUE(affine_e12_vanishing_check(&r));
  EXPECT_TRUE(r.passed());
}

TEST(Lamplighter, ScenariosPassAndRangeIsChecked) {
  EXPECT_TRUE(lamplighter_scenarios(4).passed());
  EXPECT_TRUE(lamplighter_scenarios(5).passed());
  EXPECT_THROW(lamplighter_scenarios(2), ModulusOutOfRange);
  EXPECT_THROW(lamplighter_scenarios(9), ModulusOutOfRange);
}

TEST(Fpc, CycleCentralizerMatchesBruteForce) {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}}) {
    const GroupElement s = make_cantor_transposition(2, a, b);
    const auto sub = generated_subgroup(cantor_permutation_centralizer_generators(s, 2));
    ASSERT_TRUE(sub.has_value());
    EXPECT_EQ(*sub, centralizer(s, {Family::Cantor, 2}));
  }
  EXPECT_THROW(cantor_permutation_centralizer_generators(make_cantor(1, {1, 0}), 1), HypothesisViolated);
  EXPECT_THROW(cantor_permutation_centralizer_generators(make_cantor_function(1, 1), 2), HypothesisViolated);
}

TEST(Fpc, OrbitSizesFollowClosedForms) {
  std::vector<FpcTableRow> table;
  EXPECT_TRUE(fpc_growth_suite(&table).passed());
  auto sizes = [&](const std::string& lemma, const std::string& label) {
    for (const auto& row : table)
      if (row.lemma == lemma && row.label == label) return row.orbit_sizes;
    return std::vector<std::size_t>{};
  };
  // C(e1) moves e2 over all vectors outside {0, e1}
  EXPECT_EQ(sizes("fpc(v)", "e2"), (std::vector<std::size_t>{6, 14, 30}));
  // C(f~_A) moves [00] over the 2^{m-2}-word subsets of A or of A^c
  std::vector<std::size_t> quarter, fixed_half;
  for (int m = 2; m <= 4; ++m) {
    quarter.push_back(2 * binomial(1 << (m - 1), 1 << (m - 2)));
    fixed_half.push_back(binomial(1 << (m - 1), 1 << (m - 2)));
  }
  EXPECT_EQ(sizes("fpc(f~_A)", "f~_[00]"), quarter);
  // C((00,01)) moves [10] over the 2^{m-2}-word subsets of the fixed half [1]
  EXPECT_EQ(sizes("fpc(s)", "f~_[10]"), fixed_half);
  for (const auto& row : table)
    if (row.member)
      for (auto n : row.orbit_sizes) EXPECT_LE(n, 2u) << row.label;
}
