#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "torica/error.hpp"

using namespace torica;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST(FanJson, RoundTrip) {
  for (const char* name : {"p2.json", "p1xp1.json", "p112.json", "hirzebruch1.json", "cover3.json"}) {
    const Fan f = oracle::load_fan(name);
    EXPECT_EQ(fan_from_json(fan_to_json(f)), f) << name;
  }
}

TEST(FanJson, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { fan_from_json("{"); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { fan_from_json(R"({"dim": 2, "rays": [[1, 0]]})"); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { fan_from_json(R"({"dim": 0, "rays": [], "max_cones": []})"); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { fan_from_json(R"({"dim": 2, "rays": [[1, 0, 0]], "max_cones": []})"); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { fan_from_json(R"({"dim": 1, "rays": [[1], [-1]], "max_cones": [[-1]]})"); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { oracle::load_fan("nonprimitive.json"); }), ErrorCode::NonPrimitiveRay);
  EXPECT_EQ(code_of([] { read_file("/nonexistent/fan.json"); }), ErrorCode::InvalidInput);
}

TEST(PolynomialJson, RoundTripAndMerging) {
  const ToricVariety X(oracle::load_fan("p1xp1.json"));
  const auto f = oracle::load_poly(X, "p1xp1_33.json");
  EXPECT_EQ(polynomial_from_json(X, polynomial_to_json(X, f)), f);

  const ToricVariety P2(projective_space(2));
  const auto g = polynomial_from_json(P2, R"({"degree_divisor": [0, 0, 2], "terms": [
      {"exponents": [2, 0, 0], "coeff": "1/2"}, {"exponents": [2, 0, 0], "coeff": 1},
      {"exponents": [0, 1, 1], "coeff": "-3"}, {"exponents": [0, 0, 2], "coeff": 0}]})");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.coefficient(Exponent{2, 0, 0}), Rational(3, 2));
  EXPECT_EQ(g.degree(), P2.class_of(std::vector<std::int64_t>{2, 0, 0}));
}

TEST(PolynomialJson, RejectsBadTerms) {
  const ToricVariety P2(projective_space(2));
  EXPECT_EQ(code_of([&] { oracle::load_poly(P2, "mixed_degree.json"); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([&] {
              polynomial_from_json(P2, R"({"degree_divisor": [1, 0], "terms": []})");
            }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] {
              polynomial_from_json(
                  P2, R"({"degree_divisor": [1, 0, 0], "terms": [{"exponents": [-1, 1, 1], "coeff": 1}]})");
            }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] {
              polynomial_from_json(
                  P2, R"({"degree_divisor": [1, 0, 0], "terms": [{"exponents": [1, 0, 0], "coeff": 0.5}]})");
            }),
            ErrorCode::InvalidInput);
}

TEST(DivisorParsing, Separators) {
  EXPECT_EQ(parse_divisor("3,0,-1"), (IntVector{3, 0, -1}));
  EXPECT_EQ(parse_divisor("3 0 +1"), (IntVector{3, 0, 1}));
  EXPECT_EQ(code_of([] { parse_divisor(""); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { parse_divisor("3,x"); }), ErrorCode::InvalidInput);
}
