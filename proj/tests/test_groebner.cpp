#include <gtest/gtest.h>

#include <random>

#include "torica/error.hpp"
#include "torica/groebner.hpp"

using namespace torica;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly cst(std::size_t n, long c) { return MultiPoly::constant(n, c); }

MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, int terms, int deg) {
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent a(n, 0);
    for (int k = 0; k < deg; ++k)
      if (rng() % 2) ++a[rng() % n];
    p.add_term(a, static_cast<long>(rng() % 7) - 3);
  }
  return p;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  const Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  MultiPoly s(f.nvars());
  s.subtract_multiple(-1 / f.leading_coefficient(), minus(l, f.leading_exponent()), f);
  s.subtract_multiple(1 / g.leading_coefficient(), minus(l, g.leading_exponent()), g);
  return s;
}

}  // namespace

TEST(MonomialOrder, DegRevLex) {
  const DegRevLexGreater gt;
  EXPECT_TRUE(gt({2, 0, 0}, {1, 0, 0}));
  EXPECT_TRUE(gt({1, 1, 0}, {1, 0, 1}));
  EXPECT_TRUE(gt({0, 2, 0}, {1, 0, 1}));
  EXPECT_FALSE(gt({1, 0, 1}, {1, 0, 1}));
}

TEST(Buchberger, SPairsReduceToZeroOnRandomIdeals) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 2 + static_cast<int>(rng() % 2); ++k) {
      auto p = random_poly(rng, n, 3, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const auto gb = buchberger(gens);
    const auto& g = gb.generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g[i].leading_coefficient(), 1);
      for (std::size_t j = i + 1; j < g.size(); ++j)
        EXPECT_TRUE(normal_form(s_poly(g[i], g[j]), g).is_zero());
    }
    // Original generators lie in the ideal of the basis.
    for (const auto& f : gens) EXPECT_TRUE(normal_form(f, g).is_zero());
  }
}

TEST(Buchberger, UnitIdeal) {
  const std::size_t n = 2;
  const auto x = var(n, 0), y = var(n, 1);
  EXPECT_TRUE(ideal_contains_one({x * y - cst(n, 1), x}));
  EXPECT_FALSE(ideal_contains_one({x * x, y}));
  EXPECT_TRUE(buchberger({x, x + cst(n, 1)}).is_unit());
}

TEST(NormalForm, PowersOfGeneratorsVanish) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3;
    const auto g = random_poly(rng, n, 3, 2) + var(n, 0) * var(n, 1);
    const auto gb = buchberger({g});
    MultiPoly p = g;
    for (int k = 1; k <= 3; ++k, p = p * g) EXPECT_TRUE(normal_form(p, gb.generators).is_zero());
    EXPECT_FALSE(normal_form(var(n, 2), gb.generators).is_zero() && !gb.is_unit());
  }
}

TEST(Radical, MembershipExamples) {
  const std::size_t n = 2;
  const auto x = var(n, 0), y = var(n, 1);
  EXPECT_TRUE(radical_membership(x, {x * x * x}));
  EXPECT_TRUE(radical_membership(x * y, {x * x, y * y * y}));
  EXPECT_FALSE(radical_membership(y, {x * x}));
}

TEST(Budget, ExhaustionThrows) {
  const std::size_t n = 3;
  const auto x = var(n, 0), y = var(n, 1), z = var(n, 2);
  Budget tiny(3);
  try {
    buchberger({x * x * y - z * z * z, y * y * z - x * x * x, z * z * x - y * y * y}, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  Budget big;
  buchberger({x * y - cst(n, 1), x - y}, big);
  EXPECT_GT(big.used(), 0u);
  EXPECT_LE(big.used(), big.limit());
}
