#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "torica/divisor.hpp"
#include "torica/error.hpp"

using namespace torica;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(SupportPolytope, CubicsOnThePlane) {
  const Fan f = projective_space(2);
  const auto p = support_polytope(f, iv({3, 0, 0}));
  EXPECT_EQ(p.lattice_points.size(), 10u);
  EXPECT_EQ(p.vertices.size(), 3u);
  EXPECT_TRUE(std::is_sorted(p.lattice_points.begin(), p.lattice_points.end()));
}

TEST(SupportPolytope, MSigmaSolvesTheConeEquations) {
  const Fan f = oracle::hirzebruch1();
  const IntVector b = iv({1, 2, 0, 1});
  for (const auto& c : f.max_cones()) {
    const RatVector m = m_sigma(f, b, c);
    for (auto i : c) EXPECT_EQ(f.pairing(m, i), Rational(-b[i]));
  }
}

TEST(Divisor, CartierAndAmple) {
  const Fan p2 = projective_space(2);
  EXPECT_TRUE(is_ample(p2, iv({1, 0, 0})));
  EXPECT_FALSE(is_ample(p2, iv({0, 0, 0})));
  EXPECT_FALSE(is_ample(p2, iv({-1, 0, 0})));
  const Fan q = oracle::p1xp1();
  EXPECT_TRUE(is_cartier(q, iv({1, 0, 0, 0})));
  EXPECT_FALSE(is_ample(q, iv({1, 0, 0, 0})));
  EXPECT_TRUE(is_ample(q, iv({1, 0, 1, 0})));
  const Fan w = weighted_projective({1, 1, 2});
  // D_1 is not Cartier on P(1,1,2); 2 D_1 is.
  EXPECT_FALSE(is_cartier(w, iv({1, 0, 0})));
  EXPECT_TRUE(is_cartier(w, iv({2, 0, 0})));
  EXPECT_TRUE(is_ample(w, iv({2, 0, 0})));
}

TEST(Divisor, FacesOfAmplePolytope) {
  const Fan f = projective_space(2);
  const auto faces = polytope_faces(f, iv({2, 0, 0}));
  // One face per cone: 1 + 3 + 3.
  EXPECT_EQ(faces.size(), 7u);
  for (const auto& face : faces) {
    EXPECT_EQ(face.dim, 2 - static_cast<int>(face.cone.size()));
    if (face.cone.size() == 2) EXPECT_EQ(face.lattice_points.size(), 1u);
    if (face.cone.size() == 1) EXPECT_EQ(face.lattice_points.size(), 3u);
  }
  try {
    polytope_faces(f, iv({0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAmple);
  }
}

TEST(Divisor, LatticePointsMatchGradedDimension) {
  std::mt19937_64 rng(5);
  const std::vector<Fan> fans{projective_space(2), oracle::p1xp1(), oracle::hirzebruch1(),
                              weighted_projective({1, 1, 2}), weighted_projective({1, 2, 3}),
                              oracle::cover3(), projective_space(3)};
  int cases = 0;
  for (int t = 0; t < 140; ++t) {
    const Fan& f = fans[t % fans.size()];
    const ToricVariety X(f);
    IntVector b(f.n());
    for (auto& x : b) x = static_cast<long>(rng() % 5) - 1;
    const auto pts = polytope_lattice_points(f, b);
    EXPECT_EQ(pts.size(), X.graded_dim(X.class_of(b)));
    EXPECT_EQ(pts.size(), oracle::box_count(f, b, 12));
    ++cases;
  }
  EXPECT_GE(cases, 100);
}
