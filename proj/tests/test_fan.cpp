#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "torica/error.hpp"
#include "torica/fan.hpp"
#include "torica/hodge.hpp"

using namespace torica;

namespace {

bool has_issue(const FanReport& r, FanIssueKind k) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const FanIssue& i) { return i.kind == k; });
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST(FanValidation, StandardFansAreValid) {
  for (const auto& f : {projective_space(1), projective_space(3), oracle::p1xp1(),
                        oracle::hirzebruch1(), oracle::cover3(), weighted_projective({1, 2, 3})})
    EXPECT_TRUE(validate_fan(f).valid());
}

TEST(FanValidation, DetectsNonPrimitiveRay) {
  const Fan f(1, {{2}, {-1}}, {{0}, {1}});
  EXPECT_TRUE(has_issue(validate_fan(f), FanIssueKind::NonPrimitiveRay));
  try {
    require_valid_fan(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimitiveRay);
  }
}

TEST(FanValidation, DetectsIncompleteFan) {
  const Fan f = oracle::load_fan("incomplete.json");
  const auto r = validate_fan(f);
  ASSERT_FALSE(r.valid());
  EXPECT_TRUE(has_issue(r, FanIssueKind::NotComplete));
}

TEST(FanValidation, DetectsDuplicateAndDegenerate) {
  EXPECT_TRUE(has_issue(validate_fan(Fan(1, {{1}, {1}, {-1}}, {{0}, {1}, {2}})),
                        FanIssueKind::DuplicateRay));
  EXPECT_TRUE(has_issue(validate_fan(Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                                         {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})),
                        FanIssueKind::DegenerateCone));
}

TEST(FanValidation, DetectsOverlappingCones) {
  // (1,1) lies inside the cone on (1,0),(0,1).
  const Fan f(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
              {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_FALSE(validate_fan(f).valid());
}

TEST(PrimitiveCollections, KnownFans) {
  EXPECT_EQ(primitive_collections(projective_space(2)), (std::vector<Cone>{{0, 1, 2}}));
  const auto pc = primitive_collections(oracle::load_fan("p1xp1.json"));
  EXPECT_EQ(pc, (std::vector<Cone>{{0, 1}, {2, 3}}));
  const auto h = primitive_collections(oracle::hirzebruch1());
  EXPECT_EQ(h, (std::vector<Cone>{{0, 2}, {1, 3}}));
}

TEST(PrimitiveCollections, ZComponentsAndStanleyReisner) {
  const Fan f = oracle::p1xp1();
  const auto z = z_sigma_components(f);
  ASSERT_EQ(z.size(), 2u);
  const auto sr = stanley_reisner_generators(f);
  ASSERT_EQ(sr.size(), 2u);
  for (const auto& e : sr) EXPECT_EQ(std::count(e.begin(), e.end(), 1), 2);
}

TEST(CodimensionBound, HoldsOnCorpusAndMatchesBruteForce) {
  const auto corpus = oracle::fan_corpus();
  ASSERT_GE(corpus.size(), 100u);
  for (const auto& f : corpus) {
    ASSERT_TRUE(validate_fan(f).valid());
    const auto v = codim_Z(f);
    EXPECT_EQ(v.codim, oracle::brute_codim(f));
    EXPECT_TRUE(v.bound_holds);
    if (f.n() == static_cast<std::size_t>(f.dim()) + 1) EXPECT_TRUE(v.origin_case);
  }
}

TEST(CodimensionBound, OriginCase) {
  const auto v = codim_Z(projective_space(4));
  EXPECT_TRUE(v.origin_case);
  EXPECT_EQ(v.codim, 5u);
  const auto w = codim_Z(oracle::p1xp1());
  EXPECT_FALSE(w.origin_case);
  EXPECT_EQ(w.codim, 2u);
  EXPECT_EQ(w.upper_bound, 2u);
}

TEST(Weighted, BuilderAndClassification) {
  const Fan f = weighted_projective({1, 1, 2});
  EXPECT_TRUE(validate_fan(f).valid());
  auto c = weighted_projective_classification(f);
  EXPECT_EQ(c.kind, WeightedKind::IsWeightedProjective);
  EXPECT_EQ(c.weights, (std::vector<std::int64_t>{1, 1, 2}));
  // Relation sum w_i e_i = 0.
  for (int k = 0; k < 2; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += c.weights[i] * f.ray(i)[k];
    EXPECT_EQ(s, 0);
  }
  c = weighted_projective_classification(oracle::cover3());
  EXPECT_EQ(c.kind, WeightedKind::FiniteCoverOfFan);
  EXPECT_EQ(c.index, 3);
  EXPECT_EQ(weighted_projective_classification(oracle::p1xp1()).kind,
            WeightedKind::NotApplicable);
  EXPECT_THROW(weighted_projective({1, 0, 2}), Error);
}

TEST(Betti, ProjectiveSpaceAndKunneth) {
  EXPECT_EQ(betti_numbers(projective_space(3)), (std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1}));
  const std::vector<std::pair<Fan, Fan>> pairs{
      {projective_space(1), projective_space(1)},
      {projective_space(2), projective_space(1)},
      {weighted_projective({1, 1, 2}), projective_space(2)},
      {oracle::hirzebruch1(), projective_space(1)}};
  for (const auto& [a, b] : pairs)
    EXPECT_EQ(betti_numbers(product_of_fans(a, b)), convolve(betti_numbers(a), betti_numbers(b)));
  // Blowing up a point adds one class in degree 2.
  EXPECT_EQ(betti_numbers(oracle::hirzebruch1()), (std::vector<std::int64_t>{1, 0, 2, 0, 1}));
}

TEST(Cones, FacesOfProjectivePlane) {
  const Fan f = projective_space(2);
  EXPECT_EQ(cones_of_dimension(f, 0).size(), 1u);
  EXPECT_EQ(cones_of_dimension(f, 1).size(), 3u);
  EXPECT_EQ(cones_of_dimension(f, 2).size(), 3u);
  EXPECT_TRUE(f.is_cone(Cone{0, 2}));
  EXPECT_FALSE(f.is_cone(Cone{0, 1, 2}));
}
