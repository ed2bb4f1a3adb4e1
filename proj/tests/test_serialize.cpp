#include <gtest/gtest.h>

#include "isrlab/random.hpp"
#include "isrlab/serialize.hpp"
#include "isrlab/zoo.hpp"

using namespace isrlab;

TEST(Serialize, ElementRoundTripAllFamilies) {
  Rng rng(51);
  for (const Truncation t : {Truncation{Family::Affine, 3}, Truncation{Family::Wreath, 5},
                             Truncation{Family::Lamplighter, 6}, Truncation{Family::Cantor, 3}})
    for (int k = 0; k < 50; ++k) {
      const GroupElement g = random_element(t, rng);
      const std::string text = to_json(g).dump();
      EXPECT_EQ(element_from_json(nlohmann::json::parse(text)), g) << text;
    }
}

TEST(Serialize, DocumentedFormats) {
  const auto affine = element_from_json(nlohmann::json::parse(R"({"family":"affine","n":2,"g":"0110","v":"10"})"));
  EXPECT_EQ(affine, make_affine(F2Matrix::permutation({2, 1}), F2Vector::unit(1)));
  const auto wreath = element_from_json(nlohmann::json::parse(R"({"family":"wreath","n":3,"perm":[2,1,3],"v":"001"})"));
  EXPECT_EQ(wreath, make_wreath(Permutation::transposition(1, 2), F2Vector::unit(3)));
  const auto lamp = element_from_json(nlohmann::json::parse(R"({"family":"lamplighter","m":4,"v":"1000","t":1})"));
  EXPECT_EQ(lamp, make_lamplighter(4, 1, 1));
  const auto cantor = element_from_json(
      nlohmann::json::parse(R"({"family":"cantor","m":2,"perm":["01","00","10","11"],"A":["10"]})"));
  EXPECT_EQ(cantor, make_cantor(2, {1, 0, 2, 3}, 1u << 2));
}

TEST(Serialize, Errors) {
  using nlohmann::json;
  EXPECT_THROW(element_from_json(json::parse(R"({"family":"affine","n":2,"g":"1111"})")), SingularMatrix);
  EXPECT_THROW(element_from_json(json::parse(R"({"family":"affine","g":"1"})")), ParseError);
  EXPECT_EQ(element_from_json(json::parse(R"({"family":"affine","n":2})")), GroupElement{});
  EXPECT_THROW(element_from_json(json::parse(R"({"family":"affine","n":99,"g":"1"})")), DimensionOutOfRange);
  EXPECT_THROW(element_from_json(json::parse(R"({"family":"moon"})")), ParseError);
  EXPECT_THROW(element_from_json(json::parse(R"([1,2])")), ParseError);
  EXPECT_THROW(element_from_json(json::parse(R"({"family":"cantor","m":2,"perm":["0","1"],"A":[]})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"x":1})")), ParseError);
}

TEST(Serialize, AlgebraRoundTrip) {
  const AlgebraElement x = AlgebraElement::from_terms(
      {{GroupElement{}, GaussianRational(mpq_class(1, 3), mpq_class(-2))},
       {make_affine(F2Matrix::permutation({2, 1})), GaussianRational::frac(-5, 7)}});
  EXPECT_EQ(algebra_from_json(nlohmann::json::parse(to_json(x).dump())), x);
  // coefficients may be strings or numbers
  const auto y = algebra_from_json(nlohmann::json::parse(R"([[{"family":"affine","n":1,"g":"1","v":"1"},"1/2"],
                                                             [{"family":"affine","n":1,"g":"1","v":"0"},2,"1"]])"));
  EXPECT_EQ(y.coefficient(make_vector(F2Vector::unit(1))), GaussianRational::frac(1, 2));
  EXPECT_EQ(y.coefficient(GroupElement{}), GaussianRational(2, 1));
}

TEST(Serialize, SpecRoundTrip) {
  const SubalgebraSpec spec = build_mexo(2);
  const SubalgebraSpec back = spec_from_json(nlohmann::json::parse(to_json(spec).dump()));
  EXPECT_EQ(back.label(), spec.label());
  EXPECT_EQ(back.window(), spec.window());
  ASSERT_EQ(back.basis().size(), spec.basis().size());
  for (std::size_t k = 0; k < spec.basis().size(); ++k) EXPECT_EQ(back.basis()[k], spec.basis()[k]);
  const GroupElement s = make_affine(F2Matrix::permutation({2, 1}));
  EXPECT_EQ(conditional_expectation(s, back).output, conditional_expectation(s, spec).output);
}

TEST(Serialize, SpecValidationErrorsSurface) {
  auto j = to_json(build_vector_algebra(2));
  j["window"] = Json::array({to_json(make_vector(F2Vector::unit(1)))});
  EXPECT_THROW(spec_from_json(nlohmann::json::parse(j.dump())), HypothesisViolated);
}
